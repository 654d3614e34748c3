# Corpus module: built-in verification graphs, inventory graphs, and seeded edge orders

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .config import Config, get_config
from .graph import Multigraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusGraph:
    name: str
    graph: Multigraph

    @property
    def recoverable(self) -> bool:
        """Connected, loop-free and nonempty: the inputs recovery accepts."""
        g = self.graph
        return g.v > 0 and g.c == 1 and g.loop_count() == 0


BUILTIN_GRAPHS = (
    ("empty", 0, ()),
    ("k1_loop", 1, ((0, 0),)),
    ("single_edge", 2, ((0, 1),)),
    ("two_parallel", 2, ((0, 1), (0, 1))),
    ("path_p3", 3, ((0, 1), (1, 2))),
    ("triangle", 3, ((0, 1), (1, 2), (0, 2))),
    ("triangle_loop", 3, ((0, 1), (1, 2), (0, 2), (1, 1))),
    ("two_disjoint_edges", 4, ((0, 1), (2, 3))),
    ("k4", 4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    ("c4", 4, ((0, 1), (1, 2), (2, 3), (0, 3))),
    ("triple_edge", 2, ((0, 1), (0, 1), (0, 1))),
)


def builtin_corpus() -> List[CorpusGraph]:
    return [CorpusGraph(name, Multigraph(n, edges)) for name, n, edges in BUILTIN_GRAPHS]


def load_corpus(config: Optional[Config] = None, include_builtin: bool = True) -> List[CorpusGraph]:
    """Built-in graphs followed by the configured inventory, in that order."""
    config = config or get_config()
    corpus = builtin_corpus() if include_builtin else []
    for index, entry in enumerate(config.get_graphs()):
        name = entry.name or f"inventory_{index}"
        corpus.append(CorpusGraph(name, entry.to_graph()))
    logger.debug("corpus: %d graphs", len(corpus))
    return corpus


def edge_permutations(g: Multigraph, count: int, seed: int) -> List[List[int]]:
    """count seeded random orderings of the edge indices."""
    rng = np.random.default_rng(seed)
    return [rng.permutation(g.e).tolist() for _ in range(count)]


def find_graph(name: str, corpus: Optional[List[CorpusGraph]] = None) -> Optional[CorpusGraph]:
    for item in corpus if corpus is not None else builtin_corpus():
        if item.name == name:
            return item
    return None
