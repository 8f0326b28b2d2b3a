"""Backward tracking of components through the ``TE`` edges."""
from __future__ import annotations

from dataclasses import dataclass, field

from .algorithm import TrackState
from .cubical import to_real
from .paths import vertex_walk
from .stacking import SpatiotemporalFiltration


@dataclass
class TrackingTree:
    parent: dict[int, tuple[int, int]] = field(default_factory=dict)  # v -> (parent, edge)

    def ancestors(self, v: int) -> list[int]:
        out = []
        while v in self.parent:
            v = self.parent[v][0]
            out.append(v)
        return out

    def root(self, v: int) -> int:
        chain = self.ancestors(v)
        return chain[-1] if chain else v


def build_tracking_tree(state: TrackState, filtration: SpatiotemporalFiltration) -> TrackingTree:
    """Orient every ``TE`` edge towards the past.

    Temporal edges point from the newer frame to the older one; spatial edges
    point from the endpoint that sat on the younger representative when the
    edge was inserted.  A link is dropped if its source already has a parent
    or if it would close a cycle.
    """
    tree = TrackingTree()
    for e in state.TE:
        a, b = filtration.endpoints[e]
        if filtration.slab[e]:
            child, par = b, a
        else:
            child, par = state.te_sides[e]
        if child in tree.parent or child == tree.root(par):
            continue
        tree.parent[child] = (par, e)
    return tree


@dataclass
class Lineage:
    vertex: int
    frame: int
    birth_vertex: int
    birth_frame: int
    walk: list[int]
    ancestors: list[int]

    def to_dict(self, filtration: SpatiotemporalFiltration, mode: str) -> dict:
        def point(v):
            cube = filtration[v].cube
            x, y = (int(c) if float(c).is_integer() else c for c in to_real(cube[:2], mode))
            return [filtration.frame[v], x, y]

        return {
            "vertex": self.vertex,
            "frame": self.frame,
            "birth_vertex": self.birth_vertex,
            "birth_frame": self.birth_frame,
            "walk": [point(v) for v in self.walk],
            "ancestors": self.ancestors,
        }


def track(v: int, state: TrackState, filtration: SpatiotemporalFiltration,
          tree: TrackingTree | None = None) -> Lineage:
    if not filtration.is_vertex(v):
        raise KeyError(f"unknown vertex index {v}")
    if tree is None:
        tree = build_tracking_tree(state, filtration)
    chain = state.phi[v]
    walk = vertex_walk(chain, v, filtration) if chain else []
    birth = state.f[v]
    return Lineage(v, filtration.frame[v], birth, filtration.frame[birth], walk,
                   tree.ancestors(v))
