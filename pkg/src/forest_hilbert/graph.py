# Graph module: immutable multigraphs with deletion, contraction, and the t-clone construction

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple, Union

import networkx as nx

from .errors import GraphParseError, InvalidEdgeError, LoopContractionError, require_positive_t
from .unionfind import DisjointSet

Edge = Tuple[int, int]


class EdgeKind(Enum):
    LOOP = "loop"
    BRIDGE = "bridge"
    ORDINARY = "ordinary"


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph on vertices 0..vertex_count-1.

    The edge sequence is the fixed linear order on edges; loops and repeated
    pairs are allowed. Instances never change after construction.
    """

    vertex_count: int
    edges: Tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidEdgeError(f"vertex_count must be nonnegative, got {self.vertex_count}")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        for i, (a, b) in enumerate(edges):
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise InvalidEdgeError(
                    f"edge {i} = ({a}, {b}) has an endpoint outside 0..{self.vertex_count - 1}"
                )
        object.__setattr__(self, "edges", edges)

    @property
    def v(self) -> int:
        return self.vertex_count

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def c(self) -> int:
        return self.component_count()

    @property
    def rank(self) -> int:
        """Size of a maximal spanning forest, v(G) - c(G)."""
        return self.vertex_count - self.component_count()

    def _check_edge(self, index: int):
        if not 0 <= index < len(self.edges):
            raise InvalidEdgeError(f"edge index {index} outside 0..{len(self.edges) - 1}")

    def is_loop(self, index: int) -> bool:
        self._check_edge(index)
        a, b = self.edges[index]
        return a == b

    def loop_count(self) -> int:
        return sum(1 for a, b in self.edges if a == b)

    def delete(self, index: int) -> "Multigraph":
        """Remove one edge; remaining edges keep their relative order."""
        self._check_edge(index)
        return Multigraph(self.vertex_count, self.edges[:index] + self.edges[index + 1:])

    def contract(self, index: int) -> "Multigraph":
        """Merge the endpoints of a non-loop edge into the smaller id.

        Higher ids shift down by one; parallel edges become loops.
        """
        if self.is_loop(index):
            raise LoopContractionError(f"edge {index} is a loop and cannot be contracted")
        a, b = self.edges[index]
        keep, gone = min(a, b), max(a, b)

        def relabel(w: int) -> int:
            if w == gone:
                return keep
            return w - 1 if w > gone else w

        edges = tuple(
            (relabel(p), relabel(q)) for i, (p, q) in enumerate(self.edges) if i != index
        )
        return Multigraph(self.vertex_count - 1, edges)

    def classify(self, index: int) -> EdgeKind:
        """Loop, bridge (deletion disconnects its endpoints) or ordinary."""
        if self.is_loop(index):
            return EdgeKind.LOOP
        a, b = self.edges[index]
        dsu = DisjointSet(self.vertex_count)
        for i, (p, q) in enumerate(self.edges):
            if i != index:
                dsu.union(p, q)
        return EdgeKind.ORDINARY if dsu.connected(a, b) else EdgeKind.BRIDGE

    def to_networkx(self) -> nx.MultiGraph:
        nxg = nx.MultiGraph()
        nxg.add_nodes_from(range(self.vertex_count))
        nxg.add_edges_from((a, b, i) for i, (a, b) in enumerate(self.edges))
        return nxg

    def component_count(self) -> int:
        """Connected components, isolated vertices included."""
        return self._component_count

    @cached_property
    def _component_count(self) -> int:
        return nx.number_connected_components(self.to_networkx())

    def permuted(self, order: Sequence[int]) -> "Multigraph":
        """Same graph with edge i of the result being edge order[i] of self."""
        if sorted(order) != list(range(len(self.edges))):
            raise InvalidEdgeError(f"{list(order)} is not a permutation of the edge indices")
        return Multigraph(self.vertex_count, tuple(self.edges[i] for i in order))

    def add_loop(self, vertex: int = 0) -> "Multigraph":
        """Append a loop at vertex."""
        return Multigraph(self.vertex_count, self.edges + ((vertex, vertex),))

    def clone(self, t: int) -> "Multigraph":
        return clone_graph(self, t)[0]


def clone_graph(g: Multigraph, t: int) -> Tuple[Multigraph, List[Tuple[int, int]]]:
    """Replace every edge by t consecutive parallel copies labeled 1..t.

    Returns the clone graph and, for each clone edge, its (original edge index, label).
    """
    require_positive_t(t)
    edges: List[Edge] = []
    origin: List[Tuple[int, int]] = []
    for i, edge in enumerate(g.edges):
        for label in range(1, t + 1):
            edges.append(edge)
            origin.append((i, label))
    return Multigraph(g.vertex_count, tuple(edges)), origin


def parse_graph(text: str) -> Multigraph:
    """Parse the "n m" header plus m "a b" lines format; '#' starts a comment line."""
    header = None
    edges: List[Edge] = []
    expected = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError("vertex and edge counts must be nonnegative", lineno)
            header = a
            expected = b
            continue
        if len(edges) == expected:
            raise GraphParseError(f"more than the declared {expected} edges", lineno)
        if not (0 <= a < header and 0 <= b < header):
            raise GraphParseError(f"endpoint outside 0..{header - 1}", lineno)
        edges.append((a, b))
    if header is None:
        raise GraphParseError("missing 'n m' header")
    if len(edges) != expected:
        raise GraphParseError(f"declared {expected} edges, found {len(edges)}")
    return Multigraph(header, tuple(edges))


def read_graph(path: Union[str, Path]) -> Multigraph:
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise GraphParseError(f"{path} is not UTF-8 text: {e.reason}", raw[: e.start].count(b"\n") + 1) from e
    return parse_graph(text)


def format_graph(g: Multigraph) -> str:
    lines = [f"{g.vertex_count} {g.e}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def disjoint_union(parts: Iterable[Multigraph]) -> Multigraph:
    """Place graphs side by side, shifting vertex ids; edge order is concatenated."""
    offset = 0
    edges: List[Edge] = []
    for g in parts:
        edges.extend((a + offset, b + offset) for a, b in g.edges)
        offset += g.vertex_count
    return Multigraph(offset, tuple(edges))
