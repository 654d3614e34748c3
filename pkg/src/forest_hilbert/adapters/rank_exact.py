# Exact row-echelon backend: fraction-free integer elimination

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Hashable, Iterable, List

Row = Dict[Hashable, int]


def _primitive(row: Row) -> Row:
    """Divide by the content and make the leading coefficient positive."""
    content = 0
    for value in row.values():
        content = gcd(content, value)
    lead = row[max(row)]
    if lead < 0:
        content = -content
    if content == 1:
        return row
    return {k: v // content for k, v in row.items()}


class ExactEchelon:
    """Echelon basis over the rationals, kept as primitive integer rows.

    Rows are sparse {column: coefficient}; the pivot of a row is its largest
    column key. Inserting a row reduces it against existing pivots.
    """

    backend = "exact"

    def __init__(self):
        self.pivots: Dict[Hashable, Row] = {}

    def insert(self, row: Row) -> bool:
        """Add a row to the span; True if the rank grew."""
        row = {k: v for k, v in row.items() if v}
        while row:
            lead = max(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                self.pivots[lead] = _primitive(row)
                return True
            a, b = pivot[lead], row[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            reduced = {k: a * v for k, v in row.items()}
            for k, v in pivot.items():
                value = reduced.get(k, 0) - b * v
                if value:
                    reduced[k] = value
                else:
                    reduced.pop(k, None)
            row = _primitive(reduced) if reduced else reduced
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rows(self) -> List[Row]:
        return [self.pivots[k] for k in sorted(self.pivots)]

    def kernel(self, columns: Iterable[Hashable]) -> List[Row]:
        """Integer basis of the null space, one vector per free column.

        Pivots are solved in increasing order; a pivot row only touches
        columns at or below its pivot, so those are already known.
        """
        order = sorted(self.pivots)
        vectors: List[Row] = []
        for free in columns:
            if free in self.pivots:
                continue
            solution: Dict[Hashable, Fraction] = {free: Fraction(1)}
            for lead in order:
                row = self.pivots[lead]
                s = sum((c * solution[k] for k, c in row.items() if k != lead and k in solution), Fraction(0))
                if s:
                    solution[lead] = -s / row[lead]
            scale = lcm(*(v.denominator for v in solution.values()))
            vectors.append({k: int(v * scale) for k, v in solution.items()})
        return vectors


def get_exact_echelon() -> ExactEchelon:
    """Create an exact echelon basis."""
    return ExactEchelon()
