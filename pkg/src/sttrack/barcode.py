from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .stacking import SpatiotemporalFiltration


@dataclass(frozen=True, order=True)
class Bar:
    birth: int
    death: int
    rep: int

    def __post_init__(self):
        if self.death < self.birth:
            raise ValueError(f"bar dies before it is born: {self}")


class Barcode:
    """Bars keyed by birth index, at most one per birth."""

    def __init__(self, bars: Iterable[Bar] = ()):
        self._bars: dict[int, Bar] = {}
        for bar in bars:
            if bar.birth in self._bars:
                raise ValueError(f"two bars born at {bar.birth}")
            self._bars[bar.birth] = bar

    def __iter__(self) -> Iterator[Bar]:
        return iter(sorted(self._bars.values()))

    def __len__(self):
        return len(self._bars)

    def __contains__(self, item):
        if isinstance(item, Bar):
            return self._bars.get(item.birth) == item
        birth, death = item
        bar = self._bars.get(birth)
        return bar is not None and bar.death == death

    def __getitem__(self, birth: int) -> Bar:
        return self._bars[birth]

    def __eq__(self, other):
        return isinstance(other, Barcode) and self._bars == other._bars

    def __repr__(self):
        return f"Barcode({self.pairs()})"

    @property
    def births(self) -> list[int]:
        return sorted(self._bars)

    def pairs(self) -> list[tuple[int, int]]:
        return [(b.birth, b.death) for b in self]

    def records(self, filtration: SpatiotemporalFiltration) -> list[dict]:
        frame = filtration.frame
        return [{"birth": b.birth, "death": b.death, "rep_vertex": b.rep,
                 "birth_frame": frame[b.birth], "death_frame": frame[b.death]}
                for b in self]

    def frame_span(self, bar: Bar, filtration: SpatiotemporalFiltration) -> int:
        return filtration.frame[bar.death] - filtration.frame[bar.birth]

    def long_bars(self, filtration: SpatiotemporalFiltration, span: int = 2) -> list[Bar]:
        """Bars whose death frame is at least ``span`` frames after their birth frame."""
        return [b for b in self if self.frame_span(b, filtration) >= span]
