"""Finite 2D binary image sequences: parsing, validation and complements.

Coordinates follow the row-major file layout: ``x`` grows to the right,
``y`` grows downward and ``(0, 0)`` is the top-left character / PBM bit.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO, Sequence, Union

import numpy as np

Point = tuple[int, int]
Source = Union[bytes, str, BinaryIO, os.PathLike]


class SequenceFormatError(ValueError):
    """Raised for malformed or inconsistent image sequence input."""


@dataclass(frozen=True)
class BinaryImage:
    width: int
    height: int
    foreground: frozenset[Point]

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise SequenceFormatError(
                f"image domain must be nonempty, got {self.width}x{self.height}")
        object.__setattr__(self, "foreground", frozenset(self.foreground))
        for x, y in self.foreground:
            if not (0 <= x < self.width and 0 <= y < self.height):
                raise SequenceFormatError(f"foreground point {(x, y)} outside domain")

    @property
    def domain(self) -> frozenset[Point]:
        return frozenset((x, y) for y in range(self.height) for x in range(self.width))

    @classmethod
    def from_rows(cls, rows: Sequence[str]) -> "BinaryImage":
        if not rows:
            raise SequenceFormatError("frame has no rows")
        width = len(rows[0])
        points = set()
        for y, row in enumerate(rows):
            if len(row) != width:
                raise SequenceFormatError(f"row {y} has length {len(row)}, expected {width}")
            for x, ch in enumerate(row):
                if ch == "1":
                    points.add((x, y))
                elif ch != "0":
                    raise SequenceFormatError(f"invalid character {ch!r} in row {y}")
        return cls(width, len(rows), frozenset(points))

    @classmethod
    def from_array(cls, array) -> "BinaryImage":
        """Build from a 2D array indexed ``[y, x]``; nonzero entries are foreground."""
        arr = np.asarray(array)
        if arr.ndim != 2:
            raise SequenceFormatError(f"expected a 2D array, got shape {arr.shape}")
        ys, xs = np.nonzero(arr)
        return cls(arr.shape[1], arr.shape[0],
                   frozenset(zip(xs.tolist(), ys.tolist())))

    def to_rows(self) -> list[str]:
        return ["".join("1" if (x, y) in self.foreground else "0"
                        for x in range(self.width))
                for y in range(self.height)]

    def to_array(self) -> np.ndarray:
        arr = np.zeros((self.height, self.width), dtype=bool)
        for x, y in self.foreground:
            arr[y, x] = True
        return arr


@dataclass(frozen=True)
class ImageSequence:
    frames: tuple[BinaryImage, ...]

    def __post_init__(self):
        object.__setattr__(self, "frames", tuple(self.frames))
        if not self.frames:
            raise SequenceFormatError("sequence has zero frames")
        w, h = self.frames[0].width, self.frames[0].height
        for i, frame in enumerate(self.frames, start=1):
            if (frame.width, frame.height) != (w, h):
                raise SequenceFormatError(
                    f"frame {i} is {frame.width}x{frame.height}, expected {w}x{h} "
                    "(dimension mismatch)")

    def __len__(self):
        return len(self.frames)

    def __iter__(self):
        return iter(self.frames)

    def __getitem__(self, i):
        return self.frames[i]

    @property
    def width(self) -> int:
        return self.frames[0].width

    @property
    def height(self) -> int:
        return self.frames[0].height

    @classmethod
    def from_array(cls, array) -> "ImageSequence":
        arr = np.asarray(array)
        if arr.ndim != 3:
            raise SequenceFormatError(
                f"expected an array of shape (n_frames, height, width), got {arr.shape}")
        return cls(tuple(BinaryImage.from_array(a) for a in arr))

    def to_array(self) -> np.ndarray:
        return np.stack([f.to_array() for f in self.frames])


def complement(image: BinaryImage) -> BinaryImage:
    """Background of ``image`` taken inside its finite domain."""
    return BinaryImage(image.width, image.height, image.domain - image.foreground)


# -- JSON ---------------------------------------------------------------------

def _read_bytes(source: Source) -> bytes:
    if isinstance(source, bytes):
        return source
    if isinstance(source, str):
        return source.encode()
    if isinstance(source, os.PathLike):
        return Path(source).read_bytes()
    return source.read()


def parse_json(data: bytes) -> ImageSequence:
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SequenceFormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SequenceFormatError("top-level JSON value must be an object")
    for key in ("width", "height", "frames"):
        if key not in doc:
            raise SequenceFormatError(f"missing key {key!r}")
    width, height, frames = doc["width"], doc["height"], doc["frames"]
    if not (isinstance(width, int) and isinstance(height, int)) or isinstance(width, bool):
        raise SequenceFormatError("width and height must be integers")
    if not isinstance(frames, list) or not frames:
        raise SequenceFormatError("frames must be a nonempty array")
    images = []
    for i, rows in enumerate(frames, start=1):
        if not isinstance(rows, list) or not all(isinstance(r, str) for r in rows):
            raise SequenceFormatError(f"frame {i} must be an array of strings")
        image = BinaryImage.from_rows(rows)
        if (image.width, image.height) != (width, height):
            raise SequenceFormatError(
                f"frame {i} is {image.width}x{image.height}, declared {width}x{height} "
                "(dimension mismatch)")
        images.append(image)
    return ImageSequence(tuple(images))


def dump_json(sequence: ImageSequence) -> str:
    return json.dumps({
        "width": sequence.width,
        "height": sequence.height,
        "frames": [f.to_rows() for f in sequence.frames],
    })


# -- PBM ----------------------------------------------------------------------

def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    # skips whitespace and comment lines before the token
    while True:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if data[pos:pos + 1] == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
            continue
        break
    start = pos
    while pos < len(data) and not data[pos:pos + 1].isspace() and data[pos:pos + 1] != b"#":
        pos += 1
    if start == pos:
        raise SequenceFormatError("unexpected end of PBM header")
    return data[start:pos], pos


def parse_pbm(data: bytes) -> BinaryImage:
    """Parse a plain (P1) or raw (P4) PBM image. Black (1) is foreground."""
    magic, pos = _next_token(data, 0)
    if magic not in (b"P1", b"P4"):
        raise SequenceFormatError(f"not a PBM file (magic {magic!r})")
    try:
        w_tok, pos = _next_token(data, pos)
        h_tok, pos = _next_token(data, pos)
        width, height = int(w_tok), int(h_tok)
    except ValueError as exc:
        raise SequenceFormatError("bad PBM dimensions") from exc
    if width <= 0 or height <= 0:
        raise SequenceFormatError("PBM dimensions must be positive")

    points = set()
    if magic == b"P1":
        bits = re.sub(rb"#[^\n]*", b"", data[pos:])
        bits = bytes(c for c in bits if not chr(c).isspace())
        if len(bits) < width * height or any(c not in b"01" for c in bits[:width * height]):
            raise SequenceFormatError("truncated or invalid P1 raster")
        for k in range(width * height):
            if bits[k] == ord("1"):
                points.add((k % width, k // width))
    else:
        pos += 1  # single whitespace byte after the height
        stride = (width + 7) // 8
        raster = data[pos:pos + stride * height]
        if len(raster) < stride * height:
            raise SequenceFormatError("truncated P4 raster")
        rows = np.unpackbits(np.frombuffer(raster, dtype=np.uint8).reshape(height, stride),
                             axis=1)[:, :width]
        ys, xs = np.nonzero(rows)
        points.update(zip(xs.tolist(), ys.tolist()))
    return BinaryImage(width, height, frozenset(points))


def dump_pbm(image: BinaryImage, raw: bool = False) -> bytes:
    if not raw:
        lines = [b"P1", f"{image.width} {image.height}".encode()]
        lines += [" ".join(r).encode() for r in image.to_rows()]
        return b"\n".join(lines) + b"\n"
    packed = np.packbits(image.to_array(), axis=1)
    return f"P4\n{image.width} {image.height}\n".encode() + packed.tobytes()


def _frame_number(path: Path) -> int:
    m = re.fullmatch(r"frame_(\d+)\.pbm", path.name)
    return int(m.group(1)) if m else -1


def load_pbm_set(directory: Union[str, os.PathLike]) -> ImageSequence:
    directory = Path(directory)
    if not directory.is_dir():
        raise SequenceFormatError(f"{directory} is not a directory")
    files = sorted((p for p in directory.iterdir() if _frame_number(p) >= 0),
                   key=_frame_number)
    if not files:
        raise SequenceFormatError(f"no frame_<k>.pbm files in {directory}")
    numbers = [_frame_number(p) for p in files]
    if numbers != list(range(1, len(files) + 1)):
        raise SequenceFormatError(f"frame files must be numbered 1..{len(files)}, got {numbers}")
    return ImageSequence(tuple(parse_pbm(p.read_bytes()) for p in files))


def write_pbm_set(sequence: ImageSequence, directory: Union[str, os.PathLike],
                  raw: bool = False) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for k, frame in enumerate(sequence.frames, start=1):
        (directory / f"frame_{k}.pbm").write_bytes(dump_pbm(frame, raw=raw))


def load_sequence(source, format: str = "json") -> ImageSequence:
    """Load an image sequence.

    ``format="json"`` reads bytes, text, a binary file object or a path.
    ``format="pbm-set"`` reads a directory of ``frame_<k>.pbm`` files, or an
    iterable of per-frame PBM byte strings in frame order.
    """
    if format == "json":
        return parse_json(_read_bytes(source))
    if format == "pbm-set":
        if isinstance(source, (str, os.PathLike)):
            return load_pbm_set(source)
        return ImageSequence(tuple(parse_pbm(_read_bytes(s)) for s in source))
    raise ValueError(f"unknown format {format!r}")


def load_path(path: Union[str, os.PathLike], format: str = "auto") -> ImageSequence:
    path = Path(path)
    if format == "auto":
        format = "pbm-set" if path.is_dir() else "json"
    return load_sequence(path, format)

