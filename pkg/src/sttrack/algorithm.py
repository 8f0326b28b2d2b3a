"""Spatiotemporal paths and barcode of a spatiotemporal filtration.

:func:`run_algorithm1` walks the filtration once.  Every vertex starts its own
component.  An edge whose endpoints already map to the same representative
is skipped; otherwise it joins the set ``TE`` and the vertices of the newest
frame it touches that pointed at the younger representative are re-pointed
to the older one whenever the concatenated chain is still a spatiotemporal
path.
"""
from __future__ import annotations

import logging
from collections import defaultdict, deque
from dataclasses import dataclass, field

from .barcode import Bar, Barcode
from .paths import EMPTY, EdgeChain, check_path
from .stacking import SpatiotemporalFiltration

log = logging.getLogger(__name__)


@dataclass
class TrackState:
    H: set[int] = field(default_factory=set)
    f: dict[int, int] = field(default_factory=dict)
    phi: dict[int, EdgeChain] = field(default_factory=dict)
    TE: list[int] = field(default_factory=list)
    raw_bars: list[tuple[int, int]] = field(default_factory=list)
    # TE edge -> (endpoint on the younger representative's side, other endpoint)
    te_sides: dict[int, tuple[int, int]] = field(default_factory=dict)
    # (edge index, vertex) for every vertex fixed up after a sweep
    remediations: list[tuple[int, int]] = field(default_factory=list)


def _monotone_path(start: int, target: int, adj) -> EdgeChain | None:
    """Shortest path from ``start`` to ``target`` that never moves forward in time."""
    prev = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == target:
            edges = []
            while prev[v] is not None:
                v, e = prev[v]
                edges.append(e)
            return EdgeChain(edges)
        for u, e in adj[v]:
            if u not in prev:
                prev[u] = (v, e)
                queue.append(u)
    return None


def run_algorithm1(filtration: SpatiotemporalFiltration, remediate: bool = True) -> TrackState:
    """Compute ``f``, ``phi``, ``TE`` and the raw bars for ``filtration``.

    With ``remediate`` set, any vertex left pointing at a representative that
    was just removed from ``H`` is re-pointed to the surviving representative
    through a shortest time-monotone path; each such fix is logged and
    recorded in ``state.remediations``.
    """
    endpoints, slab, frame = filtration.endpoints, filtration.slab, filtration.frame
    st = TrackState()
    f, phi, H = st.f, st.phi, st.H
    # temporal edges of each phi, to reject slab violations before the full test
    tphi: dict[int, frozenset] = {}
    members: dict[tuple[int, int], set[int]] = defaultdict(set)  # (rep, frame) -> vertices
    adj = defaultdict(list)  # moves allowed for a time-monotone walk

    for cell in filtration.cells:
        i = cell.index
        if cell.dim == 0:
            H.add(i)
            f[i] = i
            phi[i] = EMPTY
            tphi[i] = frozenset()
            members[(i, frame[i])].add(i)
            st.raw_bars.append((i, i))
            continue

        a, b = endpoints[i]
        if slab[i]:
            adj[b].append((a, i))  # b lies in the newer frame
        else:
            adj[a].append((b, i))
            adj[b].append((a, i))
        if f[a] == f[b]:
            continue

        st.TE.append(i)
        j, jp = (a, b) if f[a] > f[b] else (b, a)
        k, kp = f[j], f[jp]
        r = max(frame[j], frame[jp])
        st.te_sides[i] = (j, jp)
        removed = frame[k] == r
        if removed:
            H.discard(k)

        tail = phi[j] + EdgeChain((i,)) + phi[jp]
        ttail = tphi[j] ^ tphi[jp] ^ ({i} if slab[i] else set())
        staged = {}
        for l in members[(k, r)]:
            temporal = tphi[l] ^ ttail
            if l != j:
                slabs = [slab[e] for e in temporal]
                if len(set(slabs)) < len(slabs):
                    continue
            chain = phi[l] + tail
            if l != j:
                res = check_path(chain, endpoints, slab)
                if not (res.valid and res.endpoints == (kp, l)):
                    continue
            staged[l] = (chain, temporal)
        group, dest = members[(k, r)], members[(kp, r)]
        for l, (chain, temporal) in staged.items():
            f[l] = kp
            phi[l] = chain
            tphi[l] = temporal
            group.discard(l)
            dest.add(l)

        if removed and group and remediate:
            fixed = []
            for l in sorted(group):
                path = _monotone_path(l, kp, adj)
                if path is None:
                    log.warning("vertex %d cannot reach %d after edge %d", l, kp, i)
                    continue
                log.info("remediation at edge %d: vertex %d re-pointed %d -> %d",
                         i, l, k, kp)
                f[l] = kp
                phi[l] = path
                tphi[l] = frozenset(e for e in path if slab[e])
                dest.add(l)
                fixed.append(l)
                st.remediations.append((i, l))
            group.difference_update(fixed)
        if not group:
            del members[(k, r)]

        st.raw_bars.append((k, i))
        st.raw_bars.append((kp, i))
    return st


def consolidate(state: TrackState) -> Barcode:
    """One bar per birth, dying at the latest index recorded for that birth."""
    death: dict[int, int] = {}
    for birth, d in state.raw_bars:
        death[birth] = max(d, death.get(birth, d))
    return Barcode(Bar(b, d, b) for b, d in death.items())


def spatiotemporal_barcode(filtration: SpatiotemporalFiltration) -> Barcode:
    return consolidate(run_algorithm1(filtration))
