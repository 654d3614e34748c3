# Recovery module: rebuild the activity counts and the Tutte polynomial of a connected graph from its Hilbert function

import logging
from dataclasses import dataclass, field
from typing import Dict, Tuple

from .errors import RecoveryError, require_positive_t
from .forests import ActivityTable, HilbertFunction
from .polynomials import SparsePoly, geometric_block, univariate
from .tutte import TuttePoly, tutte_via_activity

logger = logging.getLogger(__name__)

RECOVERED = "recovered"


@dataclass
class RecoveryState:
    """Residual of the weight polynomial and the counts stripped from it so far."""

    residual: SparsePoly
    t: int
    e: int
    recovered: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def top(self) -> int:
        return self.t * self.e

    def strip(self) -> Tuple[int, int, int]:
        """Remove every forest class sitting at the minimal degree; returns (a, b, count)."""
        m = self.residual.min_degree()
        s = self.residual.coefficient(m)
        a, b = m % self.t, m // self.t
        if s < 0:
            raise RecoveryError(f"negative coefficient {s}", degree=self.top - m)
        self.residual = self.residual - s * geometric_block(self.t, 0) ** a * univariate({m: 1})
        for (k,), c in self.residual.terms.items():
            if c < 0:
                raise RecoveryError(
                    f"negative residual {c} after removing {s} forests of size {a} and activity {b}",
                    degree=self.top - k,
                )
        self.recovered[(a, b)] = s
        return a, b, s


def infer_edge_count(h: HilbertFunction, t: int) -> int:
    """e = (last nonzero degree) / t, the empty forest sitting at the top."""
    require_positive_t(t)
    top = h.top_degree()
    if top < 0:
        raise RecoveryError("Hilbert function is identically zero")
    if top % t:
        raise RecoveryError(f"top degree {top} is not a multiple of t={t}; loops present?", degree=top)
    return top // t


def recover_activity_counts(h: HilbertFunction, t: int) -> Dict[Tuple[int, int], int]:
    """Strip the weight polynomial sum(dims[k] * y^(t*e - k)) one minimal term at a time.

    A term s*y^m comes from s forests with |F| = m mod t and activity m // t,
    which is unambiguous while every forest has fewer than t edges.
    """
    e = infer_edge_count(h, t)
    top = t * e
    for k, d in enumerate(h.dims):
        if d < 0:
            raise RecoveryError(f"negative dimension {d}", degree=k)
    state = RecoveryState(univariate({top - k: d for k, d in enumerate(h.dims) if d}), t, e)
    while state.residual:
        a, b, s = state.strip()
        logger.debug("stripped %d forests with %d edges and activity %d", s, a, b)
    assert all(a < t for a, _ in state.recovered)
    return state.recovered


def recovered_table(h: HilbertFunction, t: int, n: int) -> ActivityTable:
    """Recovered counts as the activity table of a connected graph on n vertices."""
    require_positive_t(t)
    if n < 1:
        raise RecoveryError(f"vertex count must be positive, got {n}")
    if t < n:
        raise RecoveryError(f"recovery needs t >= n, got t={t}, n={n}")
    counts = recover_activity_counts(h, t)
    e = infer_edge_count(h, t)
    for (a, b) in counts:
        if a >= n:
            raise RecoveryError(
                f"forest with {a} edges cannot exist on {n} vertices", degree=t * e - (t * b + a)
            )
    empty = sum(count for (a, _), count in counts.items() if a == 0)
    if empty != 1 or counts.get((0, 0)) != 1:
        raise RecoveryError("the empty forest must appear exactly once with activity 0")
    return ActivityTable(v=n, e=e, c=1, counts=counts)


def recover_tutte(h: HilbertFunction, t: int, n: int) -> TuttePoly:
    """sum of N[a][b] * (x-1)^(n-1-a) * y^b over the recovered counts."""
    table = recovered_table(h, t, n)
    return TuttePoly(tutte_via_activity(table).poly, RECOVERED)
