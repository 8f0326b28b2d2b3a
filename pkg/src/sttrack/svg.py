from __future__ import annotations

from .barcode import Barcode
from .stacking import SpatiotemporalFiltration

MARGIN_LEFT = 48
MARGIN_TOP = 28
ROW = 12
UNIT_MAX = 24.0
PLOT_WIDTH = 720.0


def render_barcode(barcode: Barcode, filtration: SpatiotemporalFiltration,
                   title: str = "") -> str:
    """Static SVG: x axis is the filtration index, one row per bar.

    Vertical gridlines mark the start of every filtration level.
    """
    m = max(filtration.m, 1)
    unit = min(UNIT_MAX, PLOT_WIDTH / m)

    def x(index: float) -> float:
        return MARGIN_LEFT + (index - 1) * unit

    bars = list(barcode)
    width = x(m) + unit + 24
    height = MARGIN_TOP + ROW * max(len(bars), 1) + 32
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}" font-family="sans-serif" font-size="10">',
        f'<text x="{MARGIN_LEFT}" y="16">{title}</text>',
    ]
    bottom = MARGIN_TOP + ROW * max(len(bars), 1)
    for level in filtration.levels:
        if level.size == 0:
            continue
        gx = x(level.start)
        dash = ' stroke-dasharray="3,3"' if level.kind == "temporal" else ""
        out.append(f'<line class="grid" x1="{gx:.1f}" y1="{MARGIN_TOP - 4}" x2="{gx:.1f}" '
                   f'y2="{bottom}" stroke="#bbb"{dash}/>')
        out.append(f'<text x="{gx:.1f}" y="{bottom + 14}" fill="#666">{level.label}</text>')
    for row, bar in enumerate(bars):
        y = MARGIN_TOP + row * ROW
        w = max((bar.death - bar.birth) * unit, 2.0)
        out.append(f'<rect class="bar" x="{x(bar.birth):.1f}" y="{y + 2}" width="{w:.1f}" '
                   f'height="{ROW - 4}" fill="#1f5fa8"><title>({bar.birth}, {bar.death})</title></rect>')
        out.append(f'<text x="4" y="{y + ROW - 2}">{bar.birth}</text>')
    out.append(f'<text x="{x(m):.1f}" y="{bottom + 26}" text-anchor="end">index (m={filtration.m})</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
