"""Stacking of per-frame complexes along time and the interleaved filtration.

A stacked cell carries three doubled coordinates ``(x2, y2, t2)``.  Frame
``j`` (1-based) sits at ``t2 = 2j``; the temporal cell joining a cell present
in frames ``j`` and ``j+1`` sits at ``t2 = 2j + 1``.

The filtration adds the levels ``Q1, Q2, Q12, Q3, Q23, ..., Ql, Q(l-1)l``.
Inside a level cells are sorted by dimension, then by ``(t2, y2, x2)``, and
numbered contiguously from 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .cubical import Cube, CubicalComplex, dim, facets

SPATIAL = "spatial"
TEMPORAL = "temporal"


@dataclass(frozen=True)
class StackedComplex:
    cells: frozenset[Cube]
    n_frames: int


def stack(complexes: Sequence[CubicalComplex], skeleton_dim: int = 1) -> StackedComplex:
    """Stack frames ``Q_i x {i}`` and add ``sigma x [i, i+1]`` for shared cells.

    Only cells of dimension ``<= skeleton_dim`` are produced.
    """
    cells = set()
    for i, cx in enumerate(complexes, start=1):
        for c in cx.cells:
            if dim(c) <= skeleton_dim:
                cells.add(c + (2 * i,))
    for i in range(1, len(complexes)):
        shared = complexes[i - 1].cells & complexes[i].cells
        for c in shared:
            if dim(c) + 1 <= skeleton_dim:
                cells.add(c + (2 * i + 1,))
    return StackedComplex(frozenset(cells), len(complexes))


def classify(cell: Cube) -> str:
    return SPATIAL if cell[-1] % 2 == 0 else TEMPORAL


def frames_of(cell: Cube) -> tuple[int, ...]:
    t2 = cell[-1]
    return (t2 // 2,) if t2 % 2 == 0 else (t2 // 2, t2 // 2 + 1)


@dataclass(frozen=True)
class Level:
    kind: str
    frames: tuple[int, ...]
    start: int  # index of the first cell, 1-based
    size: int

    @property
    def label(self) -> str:
        return "Q" + ",".join(map(str, self.frames))


@dataclass(frozen=True)
class OrderedCell:
    index: int
    cube: Cube
    kind: str
    dim: int


@dataclass
class SpatiotemporalFiltration:
    """Total order on the 0- and 1-cells of a stacked complex.

    Per-index lookup tables are 1-based with a placeholder at position 0.
    """
    levels: list[Level]
    cells: list[OrderedCell]
    n_frames: int
    index_of: dict[Cube, int] = field(init=False, repr=False)
    endpoints: list[tuple[int, int] | None] = field(init=False, repr=False)
    frame: list[int] = field(init=False, repr=False)
    slab: list[int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index_of = {c.cube: c.index for c in self.cells}
        self.endpoints = [None]
        self.frame = [0]
        # slab j for a temporal edge between frames j and j+1, else 0
        self.slab = [0]
        for c in self.cells:
            fr = frames_of(c.cube)
            self.frame.append(fr[-1])
            self.slab.append(fr[0] if c.kind == TEMPORAL else 0)
            if c.dim == 1:
                a, b = (self.index_of[f] for f in facets(c.cube))
                self.endpoints.append((min(a, b), max(a, b)))
            else:
                self.endpoints.append(None)

    @property
    def m(self) -> int:
        return len(self.cells)

    def __len__(self):
        return len(self.cells)

    def __getitem__(self, index: int) -> OrderedCell:
        return self.cells[index - 1]

    def __iter__(self) -> Iterator[OrderedCell]:
        return iter(self.cells)

    @property
    def level_sizes(self) -> list[int]:
        return [lv.size for lv in self.levels]

    @property
    def vertices(self) -> list[int]:
        return [c.index for c in self.cells if c.dim == 0]

    @property
    def edges(self) -> list[int]:
        return [c.index for c in self.cells if c.dim == 1]

    def is_vertex(self, index: int) -> bool:
        return 1 <= index <= self.m and self.cells[index - 1].dim == 0

    def vertex_at(self, x2: int, y2: int, frame: int) -> int | None:
        return self.index_of.get((x2, y2, 2 * frame))

    def dump(self) -> str:
        """One line per cell: ``index kind dim (x2,y2,t2)``."""
        return "".join(
            f"{c.index} {c.kind} {c.dim} ({','.join(map(str, c.cube))})\n"
            for c in self.cells)


def cell_frames(cell: OrderedCell | Cube) -> tuple[int, ...]:
    cube = cell.cube if isinstance(cell, OrderedCell) else cell
    return frames_of(cube)


def _level_key(cube: Cube):
    return (dim(cube), cube[-1], cube[1], cube[0]) + cube[2:-1]


def build_filtration(stacked: StackedComplex) -> SpatiotemporalFiltration:
    by_t2: dict[int, list[Cube]] = {}
    for c in stacked.cells:
        if dim(c) <= 1:
            by_t2.setdefault(c[-1], []).append(c)

    plan = [(SPATIAL, (1,), 2)]
    for j in range(1, stacked.n_frames):
        plan.append((SPATIAL, (j + 1,), 2 * j + 2))
        plan.append((TEMPORAL, (j, j + 1), 2 * j + 1))

    levels, cells = [], []
    for kind, frames, t2 in plan:
        members = sorted(by_t2.get(t2, ()), key=_level_key)
        levels.append(Level(kind, frames, len(cells) + 1, len(members)))
        for cube in members:
            cells.append(OrderedCell(len(cells) + 1, cube, kind, dim(cube)))
    return SpatiotemporalFiltration(levels, cells, stacked.n_frames)
