# Union-find with union by rank and undo, used for cycle detection during backtracking

from typing import List, Tuple


class DisjointSet:
    """Disjoint sets over 0..n-1.

    No path compression, so every successful union can be undone in O(1);
    find stays O(log n) through union by rank.
    """

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.components = n
        self._history: List[Tuple[int, int, bool]] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of x and y; False if already joined (cycle)."""
        xroot = self.find(x)
        yroot = self.find(y)
        if xroot == yroot:
            return False
        if self.rank[xroot] < self.rank[yroot]:
            xroot, yroot = yroot, xroot
        self.parent[yroot] = xroot
        bumped = self.rank[xroot] == self.rank[yroot]
        if bumped:
            self.rank[xroot] += 1
        self.components -= 1
        self._history.append((xroot, yroot, bumped))
        return True

    def undo(self):
        """Revert the most recent successful union."""
        xroot, yroot, bumped = self._history.pop()
        self.parent[yroot] = yroot
        if bumped:
            self.rank[xroot] -= 1
        self.components += 1

    def connected(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)
