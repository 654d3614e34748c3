# Polynomials module: exact sparse polynomials and Laurent polynomials over the integers

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from .errors import ForbiddenSampleError, require_positive_t

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]

VARIABLE_NAMES = {1: ("y",), 2: ("x", "y")}


def _normalize_key(key: Union[int, Iterable[int]], nvars: int) -> Exponent:
    exps = (key,) if isinstance(key, int) else tuple(int(k) for k in key)
    if len(exps) != nvars:
        raise ValueError(f"exponent {key!r} does not have {nvars} entries")
    return exps


class SparsePoly:
    """Polynomial in nvars variables stored as {exponent tuple: int coefficient}.

    Zero coefficients are never stored and exponents are nonnegative.
    Univariate polynomials use the variable y, bivariate ones x and y.
    """

    __slots__ = ("nvars", "terms")
    allow_negative = False

    def __init__(self, terms: Optional[Mapping] = None, nvars: int = 1):
        self.nvars = nvars
        clean: Dict[Exponent, int] = {}
        for key, coeff in (terms or {}).items():
            if coeff == 0:
                continue
            if not isinstance(coeff, int):
                raise TypeError(f"coefficients must be integers, got {coeff!r}")
            exps = _normalize_key(key, nvars)
            if not self.allow_negative and any(k < 0 for k in exps):
                raise ValueError(f"negative exponent {exps} in {type(self).__name__}")
            clean[exps] = clean.get(exps, 0) + coeff
        self.terms = {k: c for k, c in clean.items() if c != 0}

    @classmethod
    def constant(cls, value: int, nvars: int = 1) -> "SparsePoly":
        return cls({(0,) * nvars: value}, nvars)

    @classmethod
    def monomial(cls, exps: Union[int, Iterable[int]], coeff: int = 1, nvars: int = 1) -> "SparsePoly":
        return cls({_normalize_key(exps, nvars): coeff}, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "SparsePoly":
        exps = [0] * nvars
        exps[index] = 1
        return cls({tuple(exps): 1}, nvars)

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError(f"cannot combine {self.nvars}- and {other.nvars}-variable polynomials")
            return other
        if isinstance(other, int):
            return SparsePoly.constant(other, self.nvars)
        return NotImplemented

    def _result_class(self, other: "SparsePoly"):
        return LaurentPoly if (self.allow_negative or other.allow_negative) else SparsePoly

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return self._result_class(other)(terms, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: Dict[Exponent, int] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                terms[k] = terms.get(k, 0) + c1 * c2
        return self._result_class(other)(terms, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = type(self).constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePoly.constant(other, self.nvars)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(sorted(self.terms.items(), reverse=True))

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exps: Union[int, Iterable[int]]) -> int:
        return self.terms.get(_normalize_key(exps, self.nvars), 0)

    def degree(self, var: int = 0) -> int:
        """Largest exponent of a variable; -1 for the zero polynomial."""
        return max((k[var] for k in self.terms), default=-1)

    def min_degree(self, var: int = 0) -> Optional[int]:
        return min((k[var] for k in self.terms), default=None)

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def evaluate(self, *point: Scalar) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        values = [Fraction(p) for p in point]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = Fraction(coeff)
            for value, k in zip(values, exps):
                if k < 0 and value == 0:
                    raise ForbiddenSampleError(f"negative power at zero in {self}")
                term *= value ** k
            total += term
        return total

    def variables(self) -> Tuple[str, ...]:
        return VARIABLE_NAMES.get(self.nvars, tuple(f"x{i}" for i in range(self.nvars)))

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.variables()
        pieces: List[str] = []
        for exps, coeff in self:
            factors = [
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(names, exps)
                if k != 0
            ]
            mono = "*".join(factors)
            magnitude = abs(coeff)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"{type(self).__name__}({dict(self.terms)!r}, nvars={self.nvars})"

    def to_json(self) -> List[List[Union[int, str]]]:
        """[exponent..., coefficient as decimal string] rows in descending lex order."""
        return [list(exps) + [str(coeff)] for exps, coeff in self]

    @classmethod
    def from_json(cls, rows: Iterable[Iterable], nvars: int) -> "SparsePoly":
        terms: Dict[Exponent, int] = {}
        for row in rows:
            row = list(row)
            if len(row) != nvars + 1:
                raise ValueError(f"row {row!r} does not have {nvars} exponents and a coefficient")
            terms[tuple(int(k) for k in row[:-1])] = int(row[-1])
        return cls(terms, nvars)


class LaurentPoly(SparsePoly):
    """SparsePoly that also stores negative exponents."""

    __slots__ = ()
    allow_negative = True


def univariate(coeffs: Mapping[int, int]) -> SparsePoly:
    """SparsePoly in y from {exponent: coefficient}."""
    return SparsePoly({(k,): c for k, c in coeffs.items()}, 1)


def geometric_block(t: int, low: int = 0) -> SparsePoly:
    """1 + y + ... + y^(t-1) when low is 0, y + ... + y^t when low is 1."""
    require_positive_t(t)
    if low not in (0, 1):
        raise ValueError(f"low must be 0 or 1, got {low!r}")
    return univariate({k: 1 for k in range(low, low + t)})


def eval_rational(p: SparsePoly, *point: Scalar) -> Fraction:
    return p.evaluate(*point)


def coefficient(p: SparsePoly, exps: Union[int, Iterable[int]]) -> int:
    return p.coefficient(exps)


X = SparsePoly.variable(0, 2)
Y = SparsePoly.variable(1, 2)
ONE_XY = SparsePoly.constant(1, 2)
