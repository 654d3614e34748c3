# Modular row-echelon backend: elimination over a single word-sized prime field

from typing import Dict, Hashable, Iterable, List

Row = Dict[Hashable, int]


class ModularEchelon:
    """Echelon basis over GF(p) with monic pivot rows.

    Rank over GF(p) never exceeds the rational rank of the same integer rows,
    so callers must treat the result as a fast estimate.
    """

    backend = "modular"

    def __init__(self, prime: int):
        self.prime = prime
        self.pivots: Dict[Hashable, Row] = {}

    def insert(self, row: Row) -> bool:
        p = self.prime
        row = {k: v % p for k, v in row.items() if v % p}
        while row:
            lead = max(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                inverse = pow(row[lead], -1, p)
                self.pivots[lead] = {k: v * inverse % p for k, v in row.items()}
                return True
            factor = row[lead]
            for k, v in pivot.items():
                value = (row.get(k, 0) - factor * v) % p
                if value:
                    row[k] = value
                else:
                    row.pop(k, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rows(self) -> List[Row]:
        return [self.pivots[k] for k in sorted(self.pivots)]

    def kernel(self, columns: Iterable[Hashable]) -> List[Row]:
        """Null space basis over GF(p), one vector per free column."""
        p = self.prime
        order = sorted(self.pivots)
        vectors: List[Row] = []
        for free in columns:
            if free in self.pivots:
                continue
            solution: Row = {free: 1}
            for lead in order:
                s = sum(c * solution[k] for k, c in self.pivots[lead].items() if k != lead and k in solution) % p
                if s:
                    solution[lead] = -s % p
            vectors.append(solution)
        return vectors


def get_modular_echelon(prime: int) -> ModularEchelon:
    """Create a modular echelon basis."""
    return ModularEchelon(prime)
