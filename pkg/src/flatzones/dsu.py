"""Disjoint-set forest with path compression and union by rank."""


class DisjointSet:
    """Tracks a partition of {0, ..., n-1} under union operations."""

    __slots__ = ("parent", "rank", "n_sets")

    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.n_sets = n

    def find(self, x):
        """Root of the set containing x (compresses the visited path)."""
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        """Merge the sets containing x and y; True if they were distinct."""
        rx = self.find(x)
        ry = self.find(y)
        if rx == ry:
            return False
        rank = self.rank
        if rank[rx] < rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if rank[rx] == rank[ry]:
            rank[rx] += 1
        self.n_sets -= 1
        return True

    def connected(self, x, y):
        return self.find(x) == self.find(y)

    def roots(self):
        """Root label of every element, as a list."""
        return [self.find(x) for x in range(len(self.parent))]
