"""Per-frame cubical complexes built from binary images.

Cells are identified by their barycentric coordinates multiplied by two, so
every coordinate is an integer and the dimension of a cell is the number of
odd coordinates.

Three builders are provided:

* :func:`build_pixel_graph` -- one vertex per foreground pixel, edges between
  4-adjacent pixels (the motivating graph construction).
* :func:`build_foreground_complex` -- each foreground pixel is a closed unit
  square; squares touching at a corner share a vertex, so components follow
  8-connectivity.  The squares live on a lattice shifted by half a pixel:
  pixel ``(x, y)`` is the square with doubled barycenter ``(2x+1, 2y+1)``
  whose corners are the real points ``(x +- 1/2, y +- 1/2)``.
* :func:`build_background_complex` -- one vertex per background point, edges
  between 4-adjacent points and squares on 2x2 background blocks.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .imageio import BinaryImage, complement

Cube = tuple[int, ...]


def dim(cube: Cube) -> int:
    return sum(c & 1 for c in cube)


def facets(cube: Cube) -> list[Cube]:
    """Codimension-one faces."""
    out = []
    for axis, c in enumerate(cube):
        if c & 1:
            for nc in (c - 1, c + 1):
                out.append(cube[:axis] + (nc,) + cube[axis + 1:])
    return out


def faces(cube: Cube) -> set[Cube]:
    """All proper faces of ``cube``, of every lower dimension."""
    out: set[Cube] = set()
    stack = facets(cube)
    while stack:
        face = stack.pop()
        if face not in out:
            out.add(face)
            stack.extend(facets(face))
    return out


def intersection(a: Cube, b: Cube) -> Cube | None:
    """Intersection of two closed cubes, or ``None`` when disjoint."""
    out = []
    for ca, cb in zip(a, b):
        lo = max(ca - (ca & 1), cb - (cb & 1))
        hi = min(ca + (ca & 1), cb + (cb & 1))
        if lo > hi:
            return None
        out.append((lo + hi) // 2)
    return tuple(out)


@dataclass(frozen=True)
class CubicalComplex:
    cells: frozenset[Cube]

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cube):
        return cube in self.cells

    def __iter__(self):
        return iter(self.cells)

    def of_dim(self, d: int) -> list[Cube]:
        return sorted(c for c in self.cells if dim(c) == d)

    @property
    def vertices(self) -> list[Cube]:
        return self.of_dim(0)

    @property
    def edges(self) -> list[Cube]:
        return self.of_dim(1)

    @property
    def squares(self) -> list[Cube]:
        return self.of_dim(2)

    def is_closed(self) -> bool:
        return all(f in self.cells for c in self.cells for f in facets(c))

    def intersections_are_cells(self) -> bool:
        return all(
            (meet := intersection(a, b)) is None or meet in self.cells
            for a, b in combinations(self.cells, 2))

    def count_components(self) -> int:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self.edges:
            a, b = (find(u) for u in facets(e))
            if a != b:
                parent[a] = b
        return sum(1 for v in parent if find(v) == v)


def closure(cells) -> CubicalComplex:
    out = set(cells)
    for c in list(out):
        out |= faces(c)
    return CubicalComplex(frozenset(out))


def build_pixel_graph(image: BinaryImage) -> CubicalComplex:
    fg = image.foreground
    cells = {(2 * x, 2 * y) for x, y in fg}
    for x, y in fg:
        if (x + 1, y) in fg:
            cells.add((2 * x + 1, 2 * y))
        if (x, y + 1) in fg:
            cells.add((2 * x, 2 * y + 1))
    return CubicalComplex(frozenset(cells))


def build_foreground_complex(image: BinaryImage) -> CubicalComplex:
    return closure((2 * x + 1, 2 * y + 1) for x, y in image.foreground)


def build_background_complex(image: BinaryImage) -> CubicalComplex:
    bg = complement(image).foreground
    cells = {(2 * x, 2 * y) for x, y in bg}
    for x, y in bg:
        right, down = (x + 1, y) in bg, (x, y + 1) in bg
        if right:
            cells.add((2 * x + 1, 2 * y))
        if down:
            cells.add((2 * x, 2 * y + 1))
        if right and down and (x + 1, y + 1) in bg:
            cells.add((2 * x + 1, 2 * y + 1))
    return CubicalComplex(frozenset(cells))


BUILDERS = {
    "pixel-graph": build_pixel_graph,
    "foreground": build_foreground_complex,
    "background": build_background_complex,
}


def build_complex(image: BinaryImage, mode: str) -> CubicalComplex:
    try:
        builder = BUILDERS[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}; expected one of {sorted(BUILDERS)}") from None
    return builder(image)


def to_real(coords: Cube, mode: str) -> tuple[float, ...]:
    """Map doubled spatial coordinates back to image-plane coordinates."""
    shift = 0.5 if mode == "foreground" else 0.0
    return tuple(c / 2 - shift for c in coords)
