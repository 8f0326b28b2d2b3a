"""Independent references for the spatiotemporal algorithm.

None of these functions share code with :mod:`sttrack.algorithm`: the
classical barcode is plain union-find with the elder rule, and
spatiotemporal connectivity is answered by graph search on the final
complex.
"""
from __future__ import annotations

from collections import defaultdict, deque

from .barcode import Bar, Barcode
from .stacking import SpatiotemporalFiltration


class UnionFind:
    """Union-find whose roots are always the oldest (smallest) element."""

    def __init__(self):
        self.parent: dict[int, int] = {}

    def add(self, x: int):
        self.parent[x] = x

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> tuple[int, int] | None:
        """Merge and return ``(survivor, killed)``, or ``None`` if already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return None
        old, young = min(ra, rb), max(ra, rb)
        self.parent[young] = old
        return old, young


def classical_0barcode(filtration: SpatiotemporalFiltration) -> Barcode:
    """Ordinary 0-dimensional persistence over the same total order.

    Components still alive after the last cell die at ``m``.
    """
    uf = UnionFind()
    death: dict[int, int] = {}
    for cell in filtration.cells:
        if cell.dim == 0:
            uf.add(cell.index)
        else:
            merged = uf.union(*filtration.endpoints[cell.index])
            if merged:
                death[merged[1]] = cell.index
    return Barcode(Bar(v, death.get(v, filtration.m), v) for v in filtration.vertices)


def _backward_graph(filtration: SpatiotemporalFiltration, upto: int | None = None):
    adj = defaultdict(list)
    for e in filtration.edges:
        if upto is not None and e > upto:
            break
        a, b = filtration.endpoints[e]
        adj[b].append(a)
        if not filtration.slab[e]:
            adj[a].append(b)
    return adj


def backward_reachable(v: int, filtration: SpatiotemporalFiltration, adj=None) -> set[int]:
    """Vertices reachable from ``v`` moving along spatial edges freely and along
    temporal edges only from the newer frame to the older one."""
    if adj is None:
        adj = _backward_graph(filtration)
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def oldest_connected_oracle(v: int, filtration: SpatiotemporalFiltration, adj=None) -> int:
    if not filtration.is_vertex(v):
        raise ValueError(f"{v} is not a vertex index")
    return min(backward_reachable(v, filtration, adj))


def oldest_connected_all(filtration: SpatiotemporalFiltration) -> dict[int, int]:
    adj = _backward_graph(filtration)
    return {v: min(backward_reachable(v, filtration, adj)) for v in filtration.vertices}


def spatiotemporally_connected_bruteforce(filtration: SpatiotemporalFiltration) -> set[frozenset]:
    """All unordered vertex pairs joined by some spatiotemporal path.

    Enumerates every simple path by depth-first search, refusing a second
    temporal edge in any slab.  Exponential; for tiny fixtures only.
    """
    adj = defaultdict(list)
    for e in filtration.edges:
        a, b = filtration.endpoints[e]
        adj[a].append((b, e))
        adj[b].append((a, e))
    pairs = set()

    def dfs(start, v, visited, slabs):
        pairs.add(frozenset((start, v)))
        for u, e in adj[v]:
            s = filtration.slab[e]
            if u in visited or (s and s in slabs):
                continue
            visited.add(u)
            if s:
                slabs.add(s)
            dfs(start, u, visited, slabs)
            visited.discard(u)
            if s:
                slabs.discard(s)

    for v in filtration.vertices:
        dfs(v, v, {v}, set())
    return pairs
