# Tutte engine: deletion-contraction for T_G and the clone polynomial J_G, and the Tutte-side Hilbert function

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from .cache import PolyCache, get_poly_cache
from .config import get_config
from .errors import BudgetExceededError, ConfigError, ForbiddenSampleError, require_positive_t
from .forests import ActivityTable, HilbertFunction
from .graph import EdgeKind, Multigraph, clone_graph
from .polynomials import ONE_XY, X, Y, LaurentPoly, Scalar, SparsePoly, geometric_block

logger = logging.getLogger(__name__)

DELETION_CONTRACTION = "deletion-contraction"
ACTIVITY_EXPANSION = "activity-expansion"
CLONE_OF = "clone-of"


@dataclass(frozen=True)
class TuttePoly:
    """Tutte polynomial in x, y with a tag saying how it was obtained."""

    poly: SparsePoly
    provenance: str = DELETION_CONTRACTION

    def __eq__(self, other):
        if not isinstance(other, TuttePoly):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return str(self.poly)

    def evaluate(self, x: Scalar, y: Scalar) -> Fraction:
        return self.poly.evaluate(x, y)


@dataclass(frozen=True)
class JPoly:
    """Tutte polynomial of the t-clone graph."""

    poly: SparsePoly
    t: int

    def __str__(self):
        return str(self.poly)


def canonical_key(g: Multigraph) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """Vertex count plus the sorted edge multiset after BFS relabeling.

    Each component is searched from its smallest-degree vertex (ties by id),
    neighbours in id order. Equal keys imply isomorphic graphs; isomorphic
    graphs may still get different keys.
    """
    n = g.vertex_count
    adjacency: List[List[int]] = [[] for _ in range(n)]
    degree = [0] * n
    for a, b in g.edges:
        adjacency[a].append(b)
        degree[a] += 1
        if a != b:
            adjacency[b].append(a)
        degree[b] += 1
    label = [-1] * n
    next_label = 0
    for start in sorted(range(n), key=lambda w: (degree[w], w)):
        if label[start] >= 0:
            continue
        label[start] = next_label
        next_label += 1
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for u in sorted(adjacency[w]):
                if label[u] < 0:
                    label[u] = next_label
                    next_label += 1
                    queue.append(u)
    edges = tuple(sorted(tuple(sorted((label[a], label[b]))) for a, b in g.edges))
    return n, edges


def _strip_loops(g: Multigraph) -> Tuple[Multigraph, int]:
    loops = g.loop_count()
    if not loops:
        return g, 0
    return Multigraph(g.vertex_count, tuple((a, b) for a, b in g.edges if a != b)), loops


def _lift_y(p: SparsePoly) -> SparsePoly:
    """Univariate y-polynomial as a bivariate one."""
    return SparsePoly({(0, k[0]): c for k, c in p.terms.items()}, 2)


class _Recursion:
    """One deletion-contraction run: call budget plus optional shared memo."""

    def __init__(self, namespace, max_calls: Optional[int], use_cache: Optional[bool]):
        cfg = get_config()
        self.namespace = namespace
        self.max_calls = max_calls if max_calls is not None else cfg.get("max_recursion_calls")
        enabled = use_cache if use_cache is not None else cfg.get("memo_enabled")
        self.cache: Optional[PolyCache] = get_poly_cache() if enabled else None
        self.calls = 0

    def enter(self):
        self.calls += 1
        if self.calls > self.max_calls:
            raise BudgetExceededError("recursion budget", self.max_calls)

    def lookup(self, g: Multigraph):
        if self.cache is None:
            return None, None
        key = canonical_key(g)
        return key, self.cache.get(self.namespace, key)

    def store(self, key, value: SparsePoly) -> SparsePoly:
        if self.cache is None:
            return value
        return self.cache.put_if_absent(self.namespace, key, value)


def tutte(g: Multigraph, max_calls: Optional[int] = None, use_cache: Optional[bool] = None) -> TuttePoly:
    """T_G by deletion-contraction, always pivoting on the last edge."""
    run = _Recursion(("tutte",), max_calls, use_cache)

    def solve(h: Multigraph) -> SparsePoly:
        run.enter()
        if h.e == 0:
            return ONE_XY
        key, cached = run.lookup(h)
        if cached is not None:
            return cached
        stripped, loops = _strip_loops(h)
        if loops:
            result = Y ** loops * solve(stripped)
        else:
            last = h.e - 1
            if h.classify(last) is EdgeKind.BRIDGE:
                # a coloop: deleting or contracting gives the same matroid
                result = X * solve(h.contract(last))
            else:
                result = solve(h.delete(last)) + solve(h.contract(last))
        return run.store(key, result)

    poly = solve(g)
    logger.debug("tutte: %d calls for %d edges", run.calls, g.e)
    return TuttePoly(poly, DELETION_CONTRACTION)


def j_poly(g: Multigraph, t: int, max_calls: Optional[int] = None, use_cache: Optional[bool] = None) -> JPoly:
    """J_G = T of the t-clone graph, computed on G itself.

    Loops multiply by y^t; a bridge gives z*J(G.e) + (x-1)*J(G-e) and an
    ordinary edge z*J(G.e) + J(G-e), where z = 1 + y + ... + y^(t-1).
    """
    require_positive_t(t)
    run = _Recursion(("j", t), max_calls, use_cache)
    z = _lift_y(geometric_block(t, 0))
    x_minus_one = X - 1

    def solve(h: Multigraph) -> SparsePoly:
        run.enter()
        if h.e == 0:
            return ONE_XY
        key, cached = run.lookup(h)
        if cached is not None:
            return cached
        stripped, loops = _strip_loops(h)
        if loops:
            result = Y ** (t * loops) * solve(stripped)
        else:
            last = h.e - 1
            contracted = z * solve(h.contract(last))
            if h.classify(last) is EdgeKind.BRIDGE:
                result = contracted + x_minus_one * solve(h.delete(last))
            else:
                result = contracted + solve(h.delete(last))
        return run.store(key, result)

    poly = solve(g)
    logger.debug("j_poly(t=%d): %d calls for %d edges", t, run.calls, g.e)
    return JPoly(poly, t)


def tutte_via_activity(table: ActivityTable) -> TuttePoly:
    """Sum of N[a][b] * (x-1)^(rank - a) * y^b."""
    x_minus_one = X - 1
    total = SparsePoly.constant(0, 2)
    for (a, b), n in sorted(table.counts.items()):
        total = total + n * x_minus_one ** (table.rank - a) * Y ** b
    return TuttePoly(total, ACTIVITY_EXPANSION)


def j_poly_via_forests(table: ActivityTable, t: int) -> JPoly:
    """Labeled-forest expansion: sum of N[a][b] * (x-1)^(rank - a) * y^(t*b) * z^a."""
    require_positive_t(t)
    x_minus_one = X - 1
    z = _lift_y(geometric_block(t, 0))
    total = SparsePoly.constant(0, 2)
    for (a, b), n in sorted(table.counts.items()):
        total = total + n * x_minus_one ** (table.rank - a) * Y ** (t * b) * z ** a
    return JPoly(total, t)


def tutte_of_clone(g: Multigraph, t: int, **kwargs) -> TuttePoly:
    clone, _ = clone_graph(g, t)
    return TuttePoly(tutte(clone, **kwargs).poly, CLONE_OF)


def j_poly_clone_check(g: Multigraph, t: int, **kwargs) -> bool:
    return j_poly(g, t, **kwargs).poly == tutte_of_clone(g, t, **kwargs).poly


def j_substitution(jp: JPoly) -> LaurentPoly:
    """J(1 + 1/y, y) expanded exactly."""
    total = LaurentPoly.constant(0)
    for (i, j), c in jp.poly.terms.items():
        for m in range(i + 1):
            total = total + LaurentPoly.monomial(j - m, c * comb(i, m))
    return total


def tutte_substitution(tp: TuttePoly, rank: int, t: int) -> LaurentPoly:
    """z^rank * T(1/(z*y) + 1, y^t) with z = 1 + ... + y^(t-1), expanded exactly.

    Each term z^rank * (z*y)^(-m) keeps m <= x-degree <= rank, so only
    nonnegative powers of z appear.
    """
    require_positive_t(t)
    z = geometric_block(t, 0)
    z_powers: Dict[int, SparsePoly] = {}
    total = LaurentPoly.constant(0)
    for (i, j), c in tp.poly.terms.items():
        if i > rank:
            raise ValueError(f"x-degree {i} exceeds rank {rank}")
        for m in range(i + 1):
            if rank - m not in z_powers:
                z_powers[rank - m] = z ** (rank - m)
            total = total + LaurentPoly.monomial(t * j - m, c * comb(i, m)) * z_powers[rank - m]
    return total


def hilbert_from_tutte(g: Multigraph, t: int, tp: Optional[TuttePoly] = None) -> HilbertFunction:
    """dims[k] = coefficient of y^(t*e - (v - c) - k) in the substituted Tutte polynomial."""
    require_positive_t(t)
    tp = tp if tp is not None else tutte(g)
    rank = g.rank
    laurent = tutte_substitution(tp, rank, t)
    top = t * g.e
    dims = tuple(laurent.coefficient(top - rank - k) for k in range(top + 1))
    return HilbertFunction(t=t, dims=dims, e=g.e)


def is_forbidden_sample(y: Fraction, t: int) -> bool:
    """y = 0 or y^t = 1 make y^(t+1) - y (and z for even t at -1) vanish."""
    return y == 0 or y ** t == 1


def default_samples(count: int, t: int) -> List[Fraction]:
    """Deterministic distinct allowed points: 2, -2, 1/2, -1/2, 3, -3, ..."""
    samples: List[Fraction] = []
    k = 2
    while len(samples) < count:
        for y in (Fraction(k), Fraction(-k), Fraction(1, k), Fraction(-1, k)):
            if len(samples) < count and not is_forbidden_sample(y, t):
                samples.append(y)
        k += 1
    return samples


def lemma_sides(g: Multigraph, t: int, y: Scalar, jp: JPoly, tp: TuttePoly) -> Tuple[Fraction, Fraction]:
    """Both sides of J(1 + 1/y, y) = z^(v-c) * T((y^(t+1)-1)/(y^(t+1)-y), y^t) at y."""
    y = Fraction(y)
    if is_forbidden_sample(y, t):
        raise ForbiddenSampleError(f"y = {y} is a forbidden sample for t = {t}")
    lhs = jp.poly.evaluate(1 + 1 / y, y)
    z = (y ** t - 1) / (y - 1)
    x_value = (y ** (t + 1) - 1) / (y ** (t + 1) - y)
    rhs = z ** g.rank * tp.evaluate(x_value, y ** t)
    return lhs, rhs


def lemma_eq_check(g: Multigraph, t: int, sample_points: Optional[Iterable[Scalar]] = None) -> bool:
    """Exact equality of both sides at every sample; t*e + 1 distinct points certify the identity."""
    require_positive_t(t)
    points = list(sample_points) if sample_points is not None else default_samples(t * g.e + 1, t)
    if not points:
        raise ConfigError("the substitution identity needs at least one sample point")
    if len(points) < t * g.e + 1:
        logger.warning("%d sample points for t=%d, e=%d: identity checked but not certified", len(points), t, g.e)
    jp = j_poly(g, t)
    tp = tutte(g)
    for y in points:
        lhs, rhs = lemma_sides(g, t, y, jp, tp)
        if lhs != rhs:
            logger.warning("lemma identity fails at y=%s: %s != %s", y, lhs, rhs)
            return False
    return True


def tutte_evaluations(tp: TuttePoly) -> Dict[str, int]:
    """T(1,1) counts maximal spanning forests, T(2,1) all subforests."""
    return {
        "T(1,1)": int(tp.evaluate(1, 1)),
        "T(2,1)": int(tp.evaluate(2, 1)),
    }


def labeled_forest_total(tp: TuttePoly, rank: int, t: int) -> int:
    """t^rank * T((t+1)/t, 1), the number of t-labeled forests."""
    require_positive_t(t)
    value = Fraction(t) ** rank * tp.evaluate(Fraction(t + 1, t), 1)
    if value.denominator != 1:
        raise ValueError(f"labeled forest total {value} is not an integer")
    return value.numerator
