"""Edge chains over Z/2 and the two path validators.

A chain is a set of edge indices of a filtration; adding chains is taking
their symmetric difference.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from typing import Iterable, NamedTuple

from .cubical import Cube, dim, facets
from .stacking import SpatiotemporalFiltration, frames_of


class EdgeChain(frozenset):
    """A 1-chain with Z/2 coefficients, stored as the set of its edges."""

    def __add__(self, other):
        return EdgeChain(frozenset.__xor__(self, other))

    __radd__ = __add__

    def __repr__(self):
        return f"EdgeChain({sorted(self)})"


EMPTY = EdgeChain()


class PathCheck(NamedTuple):
    valid: bool
    endpoints: tuple[int, int] | None = None
    reason: str | None = None

    def __bool__(self):
        return self.valid


def check_path(chain, endpoints: list, slab: list) -> PathCheck:
    """Path test against raw lookup tables (see :func:`is_spatiotemporal_path`)."""
    if not chain:
        return PathCheck(True, None)
    seen_slabs = set()
    nbrs: dict[int, list[int]] = {}
    for e in chain:
        s = slab[e]
        if s:
            if s in seen_slabs:
                return PathCheck(False, reason=f"two edges in slab ({s},{s + 1})")
            seen_slabs.add(s)
        a, b = endpoints[e]
        for u, w in ((a, b), (b, a)):
            lst = nbrs.get(u)
            if lst is None:
                nbrs[u] = [w]
            elif len(lst) == 2:
                return PathCheck(False, reason="not a simple path")
            else:
                lst.append(w)
    ends = [v for v, lst in nbrs.items() if len(lst) == 1]
    if len(ends) != 2:
        return PathCheck(False, reason="not a simple path")
    if len(nbrs) != len(chain) + 1:
        return PathCheck(False, reason="not connected")
    # max degree 2, two leaves and |V| = |E| + 1 still allows a path plus
    # disjoint cycles; walk from one end to rule that out
    prev, cur, steps = None, ends[0], 0
    while True:
        lst = nbrs[cur]
        nxt = lst[0] if lst[0] != prev else (lst[1] if len(lst) == 2 else None)
        if nxt is None:
            break
        prev, cur = cur, nxt
        steps += 1
    if steps != len(chain):
        return PathCheck(False, reason="not connected")
    return PathCheck(True, (min(ends), max(ends)))


def is_spatiotemporal_path(chain: Iterable[int],
                           filtration: SpatiotemporalFiltration) -> PathCheck:
    """Check that ``chain`` is a simple vertex-to-vertex path using at most one
    temporal edge from each slab between consecutive frames.

    The empty chain is accepted with unspecified (equal) endpoints.
    """
    chain = list(chain)
    for e in chain:
        if not 0 < e <= filtration.m or filtration.endpoints[e] is None:
            return PathCheck(False, reason=f"{e} is not an edge index")
    return check_path(chain, filtration.endpoints, filtration.slab)


def _graph_shape(vertices: set, edges: list[tuple]) -> tuple[int, bool]:
    """Number of components and whether the graph has a cycle."""
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    cyclic = False
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            cyclic = True
        else:
            parent[ra] = rb
    return sum(1 for v in vertices if find(v) == v), cyclic


def is_homological_0path(cells: Iterable[Cube],
                         filtration: SpatiotemporalFiltration | None = None) -> bool:
    """Homological test for a subcomplex made of edges and their faces.

    True iff the subcomplex is connected with no 1-cycles, exactly two
    vertices lie on a single edge (its boundary), and for every slab between
    consecutive frames the edges of the subcomplex inside that slab, with
    their faces, form a connected acyclic graph.  A slab the subcomplex does
    not enter is accepted.
    """
    cells = set(cells)
    if filtration is not None and any(c not in filtration.index_of for c in cells):
        return False
    if any(dim(c) > 1 for c in cells):
        return False
    edges = [c for c in cells if dim(c) == 1]
    if not edges:
        return False
    pairs = [tuple(facets(e)) for e in edges]
    vertices = {c for c in cells if dim(c) == 0}
    if any(v not in vertices for p in pairs for v in p):
        return False  # not closed under faces
    n_comp, cyclic = _graph_shape(vertices, pairs)
    if n_comp != 1 or cyclic:
        return False
    degree = Counter(v for p in pairs for v in p)
    if sum(1 for d in degree.values() if d == 1) != 2:
        return False

    by_slab = defaultdict(list)
    for e, p in zip(edges, pairs):
        if e[-1] % 2 == 1:
            by_slab[frames_of(e)[0]].append(p)
    for slab_pairs in by_slab.values():
        verts = {v for p in slab_pairs for v in p}
        n_comp, cyclic = _graph_shape(verts, slab_pairs)
        if n_comp != 1 or cyclic:
            return False
    return True


def chain_closure(chain: Iterable[int], filtration: SpatiotemporalFiltration) -> set[Cube]:
    out = set()
    for e in chain:
        cube = filtration[e].cube
        out.add(cube)
        out.update(facets(cube))
    return out


def vertex_walk(chain: Iterable[int], start: int,
                filtration: SpatiotemporalFiltration) -> list[int]:
    """Vertex indices visited when walking the path ``chain`` from ``start``."""
    adj = defaultdict(list)
    for e in chain:
        a, b = filtration.endpoints[e]
        adj[a].append(b)
        adj[b].append(a)
    walk, prev = [start], None
    while True:
        nxt = [u for u in adj[walk[-1]] if u != prev]
        if not nxt:
            return walk
        prev = walk[-1]
        walk.append(nxt[0])

