"""Command line front end.

    sttrack run     --mode MODE --input PATH [--out FILE] [--svg FILE]
    sttrack compare --mode MODE --input PATH [--long-span N]
    sttrack track   --mode MODE --input PATH --vertex X,Y,T [--out FILE]
    sttrack dump    --mode MODE --input PATH [--out FILE]
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .imageio import SequenceFormatError, load_path
from .lineage import track
from .pipeline import MODES, Analysis, analyze
from .svg import render_barcode

log = logging.getLogger("sttrack")


@dataclass
class RunConfig:
    mode: str
    input: Path
    format: str = "auto"
    out: Path | None = None
    svg: Path | None = None
    long_span: int = 2

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")


class CommandError(Exception):
    pass


def _load(config: RunConfig) -> Analysis:
    try:
        sequence = load_path(config.input, config.format)
    except (OSError, SequenceFormatError) as exc:
        raise CommandError(f"cannot read {config.input}: {exc}") from exc
    return analyze(sequence, config.mode)


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_run(config: RunConfig) -> int:
    result = _load(config)
    records = result.barcode.records(result.filtration)
    _emit(json.dumps(records, indent=2) + "\n", config.out)
    if config.svg is not None:
        title = f"spatiotemporal barcode ({config.mode}, {config.input.name})"
        Path(config.svg).write_text(render_barcode(result.barcode, result.filtration, title))
    if result.state.remediations:
        log.warning("%d remediation(s) applied", len(result.state.remediations))
    return 0


def compare_report(result: Analysis, long_span: int = 2) -> str:
    filt = result.filtration
    st, cl = result.barcode, result.classical()
    st_long = {b.birth for b in st.long_bars(filt, long_span)}
    cl_long = {b.birth for b in cl.long_bars(filt, long_span)}
    lines = [f"mode={result.mode} m={filt.m} frames={filt.n_frames} "
             f"levels={filt.level_sizes}",
             f"{'birth':>6} {'frame':>5} | {'spatiotemporal':>15} | {'classical':>10}"]
    differing = []
    for birth in st.births:
        a, b = st[birth].death, cl[birth].death
        flag_a = "*" if birth in st_long else " "
        flag_b = "*" if birth in cl_long else " "
        mark = "  <>" if a != b else ""
        lines.append(f"{birth:>6} {filt.frame[birth]:>5} | {a:>14}{flag_a} | {b:>9}{flag_b}{mark}")
        if a != b:
            differing.append((birth, a, b))
    lines.append(f"long bars (span >= {long_span} frames, marked *): "
                 f"spatiotemporal={len(st_long)} classical={len(cl_long)}")
    lines.append("spatiotemporal: " + " ".join(f"({b},{d})" for b, d in st.pairs()))
    lines.append("classical:      " + " ".join(f"({b},{d})" for b, d in cl.pairs()))
    if differing:
        lines.append("differing bars:")
        lines.extend(f"  born {b}: spatiotemporal ({b},{a}) vs classical ({b},{c})"
                     for b, a, c in differing)
    else:
        lines.append("differing bars: none")
    return "\n".join(lines) + "\n"


def cmd_compare(config: RunConfig) -> int:
    _emit(compare_report(_load(config), config.long_span), config.out)
    return 0


def parse_vertex(text: str) -> tuple[float, float, int]:
    try:
        x, y, t = text.split(",")
        return float(x), float(y), int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y,t, got {text!r}") from None


def cmd_track(config: RunConfig, vertex: tuple[float, float, int]) -> int:
    result = _load(config)
    try:
        v = result.locate(*vertex)
    except KeyError as exc:
        raise CommandError(exc.args[0]) from None
    lineage = track(v, result.state, result.filtration, result.tree)
    _emit(json.dumps(lineage.to_dict(result.filtration, result.mode)) + "\n", config.out)
    return 0


def cmd_dump(config: RunConfig) -> int:
    _emit(_load(config).filtration.dump(), config.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sttrack",
        description="Spatiotemporal barcodes and component tracking for binary image sequences.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--mode", choices=MODES, default="foreground")
        p.add_argument("--input", type=Path, required=True,
                       help="JSON sequence file or directory of frame_<k>.pbm files")
        p.add_argument("--format", choices=("auto", "json", "pbm-set"), default="auto")
        p.add_argument("--out", type=Path, help="output file (default: stdout)")
        return p

    run = common(sub.add_parser("run", help="compute the spatiotemporal barcode"))
    run.add_argument("--svg", type=Path, help="also render the barcode as SVG")
    cmp_ = common(sub.add_parser("compare", help="spatiotemporal vs classical barcode"))
    cmp_.add_argument("--long-span", type=int, default=2,
                      help="frames between birth and death for a bar to count as long")
    trk = common(sub.add_parser("track", help="lineage of one vertex"))
    trk.add_argument("--vertex", type=parse_vertex, required=True, metavar="X,Y,T")
    common(sub.add_parser("dump", help="print the filtration order"))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    config = RunConfig(args.mode, args.input, args.format, args.out,
                       getattr(args, "svg", None), getattr(args, "long_span", 2))
    try:
        if args.command == "run":
            return cmd_run(config)
        if args.command == "compare":
            return cmd_compare(config)
        if args.command == "track":
            return cmd_track(config, args.vertex)
        return cmd_dump(config)
    except (CommandError, OSError) as exc:
        print(f"sttrack: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
