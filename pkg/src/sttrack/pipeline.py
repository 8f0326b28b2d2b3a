from __future__ import annotations

from dataclasses import dataclass

from .algorithm import TrackState, consolidate, run_algorithm1
from .barcode import Barcode
from .cubical import build_complex
from .imageio import ImageSequence
from .lineage import TrackingTree, build_tracking_tree
from .oracles import classical_0barcode
from .stacking import SpatiotemporalFiltration, build_filtration, stack

MODES = ("pixel-graph", "foreground", "background")


def sequence_filtration(sequence: ImageSequence, mode: str) -> SpatiotemporalFiltration:
    return build_filtration(stack([build_complex(img, mode) for img in sequence]))


@dataclass
class Analysis:
    mode: str
    filtration: SpatiotemporalFiltration
    state: TrackState
    barcode: Barcode
    tree: TrackingTree

    def classical(self) -> Barcode:
        return classical_0barcode(self.filtration)

    def locate(self, x: float, y: float, frame: int) -> int:
        """Vertex index for image-plane point ``(x, y)`` in ``frame`` (1-based).

        In foreground mode vertices are pixel corners at half-integer
        positions; an integer pixel position selects the pixel's top-left corner.
        """
        shift = 1 if self.mode == "foreground" else 0
        x2, y2 = round(2 * x) + shift, round(2 * y) + shift
        if self.mode == "foreground" and x2 % 2 and y2 % 2:
            x2, y2 = x2 - 1, y2 - 1
        v = self.filtration.vertex_at(x2, y2, frame)
        if v is None:
            raise KeyError(f"no vertex at ({x:g}, {y:g}) in frame {frame} ({self.mode} mode)")
        return v


def analyze(sequence: ImageSequence, mode: str = "foreground", remediate: bool = True) -> Analysis:
    filt = sequence_filtration(sequence, mode)
    state = run_algorithm1(filt, remediate=remediate)
    return Analysis(mode, filt, state, consolidate(state), build_tracking_tree(state, filt))
