# Algebra module: graded dimensions of the power subalgebra and of the cut-ideal quotient

import logging
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .config import QUOTIENT_STRATEGIES, get_config
from .errors import BudgetExceededError, require_positive_t
from .forests import HilbertFunction
from .graph import Multigraph
from .linalg import Row, get_rank_engine

logger = logging.getLogger(__name__)
shapes_logger = logging.getLogger(__name__ + ".shapes")

Monomial = Tuple[int, ...]


def generator_matrix(g: Multigraph) -> np.ndarray:
    """Integer v x e matrix: column j has +1 at the smaller endpoint of edge j, -1 at the larger.

    Loop columns are zero.
    """
    matrix = np.zeros((g.v, g.e), dtype=np.int64)
    for j, (a, b) in enumerate(g.edges):
        if a != b:
            matrix[min(a, b), j] = 1
            matrix[max(a, b), j] = -1
    return matrix


def _subset_cap(max_vertices: Optional[int]) -> int:
    return max_vertices if max_vertices is not None else get_config().get("max_subset_vertices")


def _basis_cap(max_basis: Optional[int]) -> int:
    return max_basis if max_basis is not None else get_config().get("max_basis")


def cut_degrees(g: Multigraph, max_vertices: Optional[int] = None) -> Dict[Tuple[int, ...], int]:
    """Edges with exactly one endpoint in I, for every nonempty vertex subset I."""
    cap = _subset_cap(max_vertices)
    if g.v > cap:
        raise BudgetExceededError("subset cap", cap, g.v)
    if g.v == 0:
        return {}
    masks = np.arange(1, 1 << g.v, dtype=np.int64)
    degrees = np.zeros_like(masks)
    for a, b in g.edges:
        if a != b:
            degrees += ((masks >> a) & 1) ^ ((masks >> b) & 1)
    result: Dict[Tuple[int, ...], int] = {}
    for mask, degree in zip(masks.tolist(), degrees.tolist()):
        subset = tuple(i for i in range(g.v) if mask >> i & 1)
        result[subset] = degree
    return result


def _compositions(total: int, parts: int) -> Iterator[Monomial]:
    """Exponent vectors of the given length summing to total, in descending lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _support(mono: Monomial) -> int:
    mask = 0
    for i, k in enumerate(mono):
        if k:
            mask |= 1 << i
    return mask


@dataclass(frozen=True)
class IdealGenerator:
    """p_I = (sum of x_i over I) ** (t * cut_degree + 1)."""

    subset: Tuple[int, ...]
    cut_degree: int
    t: int

    @property
    def degree(self) -> int:
        return self.t * self.cut_degree + 1

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.subset)

    def pairing(self, f: Row) -> int:
        """Apolar pairing with a form of the same degree, divided by degree!.

        Only monomials supported inside I contribute, each with its coefficient.
        """
        mask = self.mask
        return sum(c for mono, c in f.items() if _support(mono) & ~mask == 0)

    def expand(self, n: int) -> Row:
        """Multinomial expansion over n variables."""
        d = self.degree
        top = factorial(d)
        row: Row = {}
        for parts in _compositions(d, len(self.subset)):
            exps = [0] * n
            denom = 1
            for i, k in zip(self.subset, parts):
                exps[i] = k
                denom *= factorial(k)
            row[tuple(exps)] = top // denom
        return row


def ideal_generators(g: Multigraph, t: int, max_vertices: Optional[int] = None) -> List[IdealGenerator]:
    require_positive_t(t)
    return [
        IdealGenerator(subset, degree, t)
        for subset, degree in cut_degrees(g, max_vertices).items()
    ]


def _edge_generators(g: Multigraph) -> List[Dict[int, int]]:
    """X_i as {edge index: sign}, loops excluded."""
    matrix = generator_matrix(g)
    return [
        {int(j): int(matrix[i, j]) for j in np.flatnonzero(matrix[i])}
        for i in range(g.v)
    ]


def _times_generator(element: Row, generator: Dict[int, int], t: int) -> Row:
    """Product in the truncated algebra where phi_e ** (t + 1) = 0."""
    product: Row = {}
    for mono, coeff in element.items():
        for edge, sign in generator.items():
            if mono[edge] >= t:
                continue
            shifted = mono[:edge] + (mono[edge] + 1,) + mono[edge + 1:]
            value = product.get(shifted, 0) + sign * coeff
            if value:
                product[shifted] = value
            else:
                product.pop(shifted, None)
    return product


def subalgebra_hilbert(
    g: Multigraph,
    t: int,
    max_basis: Optional[int] = None,
    backend: Optional[str] = None,
) -> HilbertFunction:
    """Graded dimensions of the algebra generated by X_1..X_n inside the truncated phi algebra.

    The degree k piece is spanned by X_i times the degree k-1 piece.
    """
    require_positive_t(t)
    cap = _basis_cap(max_basis)
    ambient = (t + 1) ** g.e
    if ambient > cap:
        raise BudgetExceededError("basis cap", cap, ambient)

    engine = get_rank_engine(backend)
    generators = [gen for gen in _edge_generators(g) if gen]
    top = t * g.e
    dims = [1]
    current: List[Row] = [{(0,) * g.e: 1}]
    for k in range(1, top + 1):
        basis = engine.new_basis()
        inserted = 0
        for element in current:
            for generator in generators:
                product = _times_generator(element, generator, t)
                if product:
                    basis.insert(product)
                    inserted += 1
        shapes_logger.debug("subalgebra degree %d: %d products, rank %d", k, inserted, basis.rank)
        if basis.rank == 0:
            break
        dims.append(basis.rank)
        current = basis.rows()
    dims.extend([0] * (top + 1 - len(dims)))
    return HilbertFunction(t=t, dims=tuple(dims), e=g.e)


@dataclass(frozen=True)
class QuotientResult:
    """Quotient dimensions up to t*e plus any nonzero dimension found above it."""

    hilbert: HilbertFunction
    checked_through: int
    overflow: Dict[int, int] = field(default_factory=dict)

    @property
    def vanishes(self) -> bool:
        return not self.overflow


def _partial(f: Row, i: int) -> Row:
    out: Row = {}
    for mono, c in f.items():
        if mono[i]:
            out[mono[:i] + (mono[i] - 1,) + mono[i + 1:]] = c * mono[i]
    return out


def _times_variable(f: Row, j: int) -> Row:
    return {mono[:j] + (mono[j] + 1,) + mono[j + 1:]: c for mono, c in f.items()}


class _InverseSystem:
    """Forms annihilated by every p_I(d/dx), built one degree at a time.

    The degree k piece is the degree k quotient under the apolar pairing:
    f qualifies iff each partial derivative lies in the degree k-1 piece and
    f pairs to zero with every generator of degree exactly k. Writing
    f = sum_j x_j * g_j, the g_j must form a closed 1-form, which is checked
    on the pivot monomials of the degree k-2 piece.
    """

    def __init__(self, n: int, engine, cap: int):
        self.n = n
        self.engine = engine
        self.cap = cap
        origin = (0,) * n
        self.basis: List[Row] = [{origin: 1}]
        self.pivots: List[Monomial] = [origin]
        self.previous_pivots: List[Monomial] = []

    def step(self, k: int, generators: List[IdealGenerator]) -> int:
        """Advance to degree k and return its dimension."""
        n, basis = self.n, self.basis
        unknowns = [(j, s) for j in range(n) for s in range(len(basis))]
        if len(unknowns) > self.cap:
            raise BudgetExceededError("basis cap", self.cap, len(unknowns))

        constraints = self.engine.new_basis()
        closure_rows = 0
        if k >= 2:
            partials = [[_partial(q, i) for q in basis] for i in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    for mu in self.previous_pivots:
                        row: Row = {}
                        for s in range(len(basis)):
                            if a := partials[i][s].get(mu):
                                row[(j, s)] = row.get((j, s), 0) + a
                            if b := partials[j][s].get(mu):
                                row[(i, s)] = row.get((i, s), 0) - b
                        if row:
                            constraints.insert(row)
                            closure_rows += 1
        for generator in generators:
            sums = [generator.pairing(q) for q in basis]
            row = {(j, s): value for j in generator.subset for s, value in enumerate(sums) if value}
            if row:
                constraints.insert(row)

        kernel = constraints.kernel(unknowns)
        shapes_logger.debug(
            "quotient degree %d: %d unknowns, %d closure rows, %d generators, kernel %d",
            k, len(unknowns), closure_rows, len(generators), len(kernel),
        )

        forms = self.engine.new_basis()
        for vector in kernel:
            f: Row = {}
            for (j, s), c in vector.items():
                for mono, a in _times_variable(basis[s], j).items():
                    f[mono] = f.get(mono, 0) + c * a
            forms.insert(f)
        self.previous_pivots = self.pivots
        self.basis = forms.rows()
        self.pivots = sorted(forms.pivots)
        return forms.rank


def macaulay_dimension(
    n: int, k: int, generators: List[IdealGenerator], engine, cap: int
) -> int:
    """C(n+k-1, k) minus the rank of every x^beta * p_I of degree k, from scratch."""
    monomials = comb(n + k - 1, k)
    if monomials > cap:
        raise BudgetExceededError("basis cap", cap, monomials)
    basis = engine.new_basis()
    rows = 0
    for generator in generators:
        shift = k - generator.degree
        if shift < 0:
            continue
        expanded = generator.expand(n)
        for beta in _compositions(shift, n):
            basis.insert({tuple(a + b for a, b in zip(mono, beta)): c for mono, c in expanded.items()})
            rows += 1
    shapes_logger.debug("macaulay degree %d: %d x %d, rank %d", k, rows, monomials, basis.rank)
    return monomials - basis.rank


def quotient_analysis(
    g: Multigraph,
    t: int,
    max_vertices: Optional[int] = None,
    max_basis: Optional[int] = None,
    extra_degrees: Optional[int] = None,
    backend: Optional[str] = None,
    strategy: Optional[str] = None,
) -> QuotientResult:
    """Graded dimensions of k[x_1..x_n] modulo the ideal generated by the p_I.

    Degrees are checked through t*e + extra_degrees (default n); the first
    zero dimension ends the scan since every higher degree then vanishes too.
    The "macaulay" strategy ranks each degree from scratch; "dual" walks the
    inverse system and gives the same dimensions.
    """
    require_positive_t(t)
    strategy = strategy or get_config().get("quotient_strategy")
    if strategy not in QUOTIENT_STRATEGIES:
        raise ValueError(f"unknown quotient strategy {strategy!r}; expected one of {QUOTIENT_STRATEGIES}")
    n = g.v
    top = t * g.e
    if extra_degrees is None:
        extra_degrees = get_config().get("extra_degrees")
    limit = top + (extra_degrees if extra_degrees is not None else n)

    if n == 0:
        dims = [1] + [0] * top
        return QuotientResult(HilbertFunction(t=t, dims=tuple(dims), e=g.e), checked_through=0)

    generators = ideal_generators(g, t, max_vertices)
    by_degree: Dict[int, List[IdealGenerator]] = {}
    for generator in generators:
        by_degree.setdefault(generator.degree, []).append(generator)

    engine = get_rank_engine(backend)
    cap = _basis_cap(max_basis)
    system = _InverseSystem(n, engine, cap)
    dims = [1]
    checked = limit
    for k in range(1, limit + 1):
        if strategy == "macaulay":
            dim = macaulay_dimension(n, k, generators, engine, cap)
        else:
            dim = system.step(k, by_degree.get(k, []))
        dims.append(dim)
        if dim == 0:
            checked = k
            break

    overflow = {k: d for k, d in enumerate(dims) if k > top and d}
    if overflow:
        logger.warning(
            "quotient of %d vertices, %d edges, t=%d has nonzero dimensions above %d: %s",
            n, g.e, t, top, overflow,
        )
    body = dims[: top + 1] + [0] * (top + 1 - len(dims))
    return QuotientResult(HilbertFunction(t=t, dims=tuple(body), e=g.e), checked, overflow)


def quotient_hilbert(g: Multigraph, t: int, **kwargs) -> HilbertFunction:
    return quotient_analysis(g, t, **kwargs).hilbert


def isomorphism_check(g: Multigraph, t: int, backend: Optional[str] = None) -> bool:
    """Subalgebra and quotient dimensions agree in every degree.

    A modular mismatch is recomputed exactly before it is reported.
    """
    engine = get_rank_engine(backend)
    left = subalgebra_hilbert(g, t, backend=engine.backend)
    right = quotient_hilbert(g, t, backend=engine.backend)
    if left != right and not engine.is_exact:
        logger.warning("modular ranks disagree for t=%d, recomputing exactly", t)
        left = subalgebra_hilbert(g, t, backend="exact")
        right = quotient_hilbert(g, t, backend="exact")
    if left != right:
        logger.warning("subalgebra %s != quotient %s for t=%d", left.dims, right.dims, t)
    return left == right
