# Linear algebra module - branching between exact and modular rank backends

import logging
from typing import Dict, Hashable, Iterable, List, Optional

import numpy as np

from .config import RANK_BACKENDS, get_config
from .errors import ConfigError

logger = logging.getLogger(__name__)

Row = Dict[Hashable, int]


class RankEngine:
    """Creates echelon bases for the configured backend."""

    def __init__(self, backend: Optional[str] = None, prime: Optional[int] = None):
        config = get_config()
        self.backend = backend or config.get("rank_backend")
        if self.backend not in RANK_BACKENDS:
            raise ConfigError(f"rank_backend must be one of {RANK_BACKENDS}, got {self.backend!r}")
        self.prime = prime or config.get("modular_prime")

    @property
    def is_exact(self) -> bool:
        return self.backend == "exact"

    def new_basis(self):
        """Empty echelon basis supporting insert(row), rank and rows()."""
        if self.is_exact:
            from .adapters.rank_exact import get_exact_echelon
            return get_exact_echelon()
        from .adapters.rank_modular import get_modular_echelon
        return get_modular_echelon(self.prime)

    def rank(self, rows: Iterable[Row]) -> int:
        basis = self.new_basis()
        for row in rows:
            basis.insert(row)
        return basis.rank


def matrix_rows(matrix: np.ndarray) -> List[Row]:
    """Sparse {column: value} rows of an integer matrix."""
    return [
        {int(j): int(matrix[i, j]) for j in np.flatnonzero(matrix[i])}
        for i in range(matrix.shape[0])
    ]


def matrix_rank(matrix: np.ndarray, backend: Optional[str] = None) -> int:
    return RankEngine(backend).rank(matrix_rows(matrix))


def get_rank_engine(backend: Optional[str] = None) -> RankEngine:
    """Get a rank engine for the given or configured backend."""
    return RankEngine(backend)
