# Forest combinatorics: subforest enumeration, external activity, and the combinatorial Hilbert function

import itertools
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

import pandas as pd

from .config import get_config
from .errors import BudgetExceededError, ConfigError, CyclicForestError, InvalidEdgeError, require_positive_t
from .graph import Multigraph, clone_graph
from .polynomials import SparsePoly, geometric_block, univariate
from .unionfind import DisjointSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ForestRecord:
    """An acyclic edge subset with its externally active edges."""

    edge_set: Tuple[int, ...]
    activity: int
    active_set: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edge_set)


@dataclass(frozen=True)
class LabeledForest:
    """A subforest with a label in 1..t on each of its edges."""

    edge_set: Tuple[int, ...]
    labels: Tuple[int, ...]
    activity: int = 0

    @property
    def weight(self) -> int:
        return sum(self.labels)


@dataclass(frozen=True)
class ActivityTable:
    """counts[(a, b)] = number of subforests with a edges and external activity b."""

    v: int
    e: int
    c: int
    counts: Mapping[Tuple[int, int], int] = field(default_factory=dict)

    def get(self, a: int, b: int) -> int:
        return self.counts.get((a, b), 0)

    @property
    def rank(self) -> int:
        return self.v - self.c

    def total(self) -> int:
        return sum(self.counts.values())

    def by_size(self) -> Dict[int, int]:
        sizes: Dict[int, int] = {}
        for (a, _), n in self.counts.items():
            sizes[a] = sizes.get(a, 0) + n
        return sizes

    def to_json(self) -> Dict:
        return {
            "v": self.v,
            "e": self.e,
            "c": self.c,
            "counts": [[a, b, n] for (a, b), n in sorted(self.counts.items())],
        }

    @staticmethod
    def from_json(data: Mapping) -> "ActivityTable":
        return ActivityTable(
            v=int(data["v"]),
            e=int(data["e"]),
            c=int(data["c"]),
            counts={(int(a), int(b)): int(n) for a, b, n in data["counts"]},
        )

    def to_frame(self) -> pd.DataFrame:
        """Pivot with forest size as rows and activity as columns."""
        rows = [{"edges": a, "activity": b, "count": n} for (a, b), n in sorted(self.counts.items())]
        frame = pd.DataFrame(rows, columns=["edges", "activity", "count"])
        return frame.pivot_table(
            index="edges", columns="activity", values="count", aggfunc="sum", fill_value=0
        )


@dataclass(frozen=True)
class HilbertFunction:
    """Graded dimensions dims[k], k = 0 .. t*e."""

    t: int
    dims: Tuple[int, ...]
    e: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))

    def __eq__(self, other):
        if not isinstance(other, HilbertFunction):
            return NotImplemented
        return self.t == other.t and self.dims == other.dims

    def __hash__(self):
        return hash((self.t, self.dims))

    def dim(self, k: int) -> int:
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    def total(self) -> int:
        return sum(self.dims)

    def top_degree(self) -> int:
        """Index of the last nonzero dimension, -1 if all vanish."""
        for k in range(len(self.dims) - 1, -1, -1):
            if self.dims[k]:
                return k
        return -1

    def trimmed(self) -> Tuple[int, ...]:
        """dims without trailing zeros."""
        return self.dims[: self.top_degree() + 1]

    def to_json(self) -> Dict:
        return {"t": self.t, "dims": list(self.dims)}

    @staticmethod
    def from_json(data: Mapping, e: Optional[int] = None) -> "HilbertFunction":
        """Integers or integral decimal strings only; floats and fractions are rejected."""
        dims = data["dims"]
        if not isinstance(dims, list):
            raise ConfigError(f"dims must be a list, got {dims!r}")
        return HilbertFunction(
            t=_json_int(data["t"], "t"),
            dims=tuple(_json_int(d, f"dims[{k}]") for k, d in enumerate(dims)),
            e=e,
        )


def _json_int(value, what: str) -> int:
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, str) and re.fullmatch(r"\s*[+-]?\d+\s*", value):
        return int(value)
    raise ConfigError(f"{what} must be an integer, got {value!r}")


def _forest_cap(max_forests: Optional[int]) -> int:
    return max_forests if max_forests is not None else get_config().get("max_forests")


def _activity(g: Multigraph, forest: Iterable[int]) -> Tuple[int, ...]:
    """Externally active edges of an acyclic subset.

    e outside F is active iff its endpoints are joined by F-edges with larger index,
    since the unique F-path closing the cycle must avoid every edge below e.
    """
    in_forest = set(forest)
    dsu = DisjointSet(g.vertex_count)
    active: List[int] = []
    for i in range(g.e - 1, -1, -1):
        a, b = g.edges[i]
        if i in in_forest:
            dsu.union(a, b)
        elif dsu.connected(a, b):
            active.append(i)
    active.reverse()
    return tuple(active)


def external_activity(g: Multigraph, forest: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    """(act_G(F), active edge set) for an acyclic edge subset F."""
    edges = sorted(set(forest))
    dsu = DisjointSet(g.vertex_count)
    for i in edges:
        if not 0 <= i < g.e:
            raise InvalidEdgeError(f"edge index {i} outside 0..{g.e - 1}")
        a, b = g.edges[i]
        if not dsu.union(a, b):
            raise CyclicForestError(f"edge set {edges} contains a cycle through edge {i}")
    active = _activity(g, edges)
    return len(active), active


def iter_subforests(g: Multigraph, max_forests: Optional[int] = None) -> Iterator[ForestRecord]:
    """Yield every acyclic edge subset in lexicographic order of its sorted indices."""
    cap = _forest_cap(max_forests)
    dsu = DisjointSet(g.vertex_count)
    current: List[int] = []
    produced = 0

    def visit(start: int) -> Iterator[ForestRecord]:
        nonlocal produced
        produced += 1
        if produced > cap:
            raise BudgetExceededError("subforest cap", cap)
        active = _activity(g, current)
        yield ForestRecord(tuple(current), len(active), active)
        for i in range(start, g.e):
            a, b = g.edges[i]
            if dsu.union(a, b):
                current.append(i)
                yield from visit(i + 1)
                current.pop()
                dsu.undo()

    yield from visit(0)


def enumerate_subforests(g: Multigraph, max_forests: Optional[int] = None) -> List[ForestRecord]:
    return list(iter_subforests(g, max_forests))


def activity_table(g: Multigraph, max_forests: Optional[int] = None) -> ActivityTable:
    counts: Dict[Tuple[int, int], int] = {}
    for record in iter_subforests(g, max_forests):
        key = (record.size, record.activity)
        counts[key] = counts.get(key, 0) + 1
    logger.debug("activity table of %d vertices, %d edges: %d forests", g.v, g.e, sum(counts.values()))
    return ActivityTable(v=g.v, e=g.e, c=g.c, counts=counts)


def weight_gf(table: ActivityTable, t: int) -> SparsePoly:
    """Sum over t-labeled forests of y^(weight + t*activity)."""
    require_positive_t(t)
    block = geometric_block(t, low=1)
    powers: Dict[int, SparsePoly] = {}
    total = SparsePoly.constant(0)
    for (a, b), n in sorted(table.counts.items()):
        if a not in powers:
            powers[a] = block ** a
        total = total + n * powers[a] * univariate({t * b: 1})
    return total


def hilbert_from_table(table: ActivityTable, t: int) -> HilbertFunction:
    """dims[k] = coefficient of y^(t*e - k) in the weight generating function."""
    top = t * table.e
    gf = weight_gf(table, t)
    return HilbertFunction(t=t, dims=tuple(gf.coefficient(top - k) for k in range(top + 1)), e=table.e)


def hilbert_from_forests(g: Multigraph, t: int, max_forests: Optional[int] = None) -> HilbertFunction:
    require_positive_t(t)
    return hilbert_from_table(activity_table(g, max_forests), t)


def count_labeled_forests(table: ActivityTable, t: int) -> int:
    require_positive_t(t)
    return sum(n * t ** a for (a, _), n in table.counts.items())


def postnikov_shapiro_dims(table: ActivityTable) -> HilbertFunction:
    """t = 1 dimensions: number of subforests with external activity e - |F| - k."""
    dims = [
        sum(table.get(a, table.e - a - k) for a in range(table.e + 1))
        for k in range(table.e + 1)
    ]
    return HilbertFunction(t=1, dims=tuple(dims), e=table.e)


def iter_labeled_forests(
    g: Multigraph, t: int, max_forests: Optional[int] = None
) -> Iterator[LabeledForest]:
    require_positive_t(t)
    cap = _forest_cap(max_forests)
    records = enumerate_subforests(g, cap)
    needed = sum(t ** r.size for r in records)
    if needed > cap:
        raise BudgetExceededError("subforest cap", cap, needed)
    for record in records:
        for labels in itertools.product(range(1, t + 1), repeat=record.size):
            yield LabeledForest(record.edge_set, labels, record.activity)


def enumerate_labeled_forests(g: Multigraph, t: int, max_forests: Optional[int] = None) -> List[LabeledForest]:
    return list(iter_labeled_forests(g, t, max_forests))


@dataclass(frozen=True)
class ActivityViolation:
    forest: LabeledForest
    expected: int
    actual: int


def clone_activity_check(g: Multigraph, t: int, max_forests: Optional[int] = None) -> List[ActivityViolation]:
    """Compare act of the image forest in the clone graph with t*act(F) + weight - |F|."""
    clone, _ = clone_graph(g, t)
    violations: List[ActivityViolation] = []
    for forest in iter_labeled_forests(g, t, max_forests):
        image = [i * t + label - 1 for i, label in zip(forest.edge_set, forest.labels)]
        actual, _ = external_activity(clone, image)
        expected = t * forest.activity + forest.weight - len(forest.edge_set)
        if actual != expected:
            violations.append(ActivityViolation(forest, expected, actual))
    if violations:
        logger.warning("%d clone activity violations for t=%d", len(violations), t)
    return violations
