from typing import Dict, Hashable, Iterable, List


class UnionFind:
    """Disjoint-set forest with union by rank and path compression"""

    def __init__(self, items: Iterable[Hashable]):
        self.parent: Dict[Hashable, Hashable] = {x: x for x in items}
        self.rank: Dict[Hashable, int] = {x: 0 for x in self.parent}
        self.size: Dict[Hashable, int] = {x: 1 for x in self.parent}

    def find(self, x: Hashable) -> Hashable:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: Hashable, y: Hashable) -> bool:
        """Merges the classes of ``x`` and ``y``; False if they were already merged"""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.size[x] += self.size[y]
        del self.rank[y]
        return True

    def classes(self) -> Dict[Hashable, List[Hashable]]:
        result: Dict[Hashable, List[Hashable]] = {rep: [] for rep in self.rank}
        for x in self.parent:
            result[self.find(x)].append(x)
        return result
