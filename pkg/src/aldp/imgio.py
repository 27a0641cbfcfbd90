"""Grayscale images: representation, border sampling, PGM I/O and synthetic corpora."""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, Union

PathLike = Union[str, Path]


class PGMError(ValueError):
    """Raised for malformed or unsupported PGM data."""


class BorderPolicy(enum.Enum):
    """How neighbourhood reads outside the image are resolved.

    Only clamp-to-edge is supported: an out-of-range coordinate is moved to
    the nearest valid row/column, replicating the border pixels.
    """

    CLAMP = "clamp"


@dataclass(frozen=True, slots=True)
class GrayImage:
    """Immutable 8-bit grayscale image with row-major pixel storage.

    ``x`` indexes rows and ``y`` indexes columns, so pixel ``(x, y)`` lives at
    ``pixels[x * cols + y]``.
    """

    rows: int
    cols: int
    pixels: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"image dimensions must be positive, got {self.rows}x{self.cols}")
        if not isinstance(self.pixels, tuple):
            object.__setattr__(self, "pixels", tuple(self.pixels))
        if len(self.pixels) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} pixels for {self.rows}x{self.cols}, "
                f"got {len(self.pixels)}"
            )
        if self.pixels and (min(self.pixels) < 0 or max(self.pixels) > 255):
            raise ValueError("pixel intensities must lie in [0, 255]")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GrayImage":
        if not rows or not rows[0]:
            raise ValueError("image must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, tuple(int(v) for r in rows for v in r))

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.pixels[x * c:(x + 1) * c]) for x in range(self.rows)]

    def pixel(self, x: int, y: int) -> int:
        if not (0 <= x < self.rows and 0 <= y < self.cols):
            raise IndexError(f"pixel ({x}, {y}) outside {self.rows}x{self.cols} image")
        return self.pixels[x * self.cols + y]

    def crop(self, x0: int, y0: int, height: int, width: int) -> "GrayImage":
        """Return the sub-image with top-left corner ``(x0, y0)``."""
        if x0 < 0 or y0 < 0 or height < 1 or width < 1 or x0 + height > self.rows or y0 + width > self.cols:
            raise ValueError(
                f"crop ({x0}, {y0}, {height}, {width}) does not fit a {self.rows}x{self.cols} image"
            )
        c = self.cols
        px = self.pixels
        out: list[int] = []
        for x in range(x0, x0 + height):
            out.extend(px[x * c + y0:x * c + y0 + width])
        return GrayImage(height, width, tuple(out))

    def map(self, fn) -> "GrayImage":
        return GrayImage(self.rows, self.cols, tuple(fn(v) for v in self.pixels))


def require_extractable(img: GrayImage) -> None:
    """Descriptors need full 3x3 neighbourhoods, hence at least 3x3 pixels."""
    if img.rows < 3 or img.cols < 3:
        raise ValueError(f"descriptor extraction needs at least a 3x3 image, got {img.rows}x{img.cols}")


def sample(img: GrayImage, x: int, y: int, policy: BorderPolicy = BorderPolicy.CLAMP) -> int:
    """Intensity at ``(x, y)`` with out-of-range coordinates clamped to the border."""
    rows = img.rows
    cols = img.cols
    if x < 0:
        x = 0
    elif x >= rows:
        x = rows - 1
    if y < 0:
        y = 0
    elif y >= cols:
        y = cols - 1
    return img.pixels[x * cols + y]


# --- PGM -------------------------------------------------------------------

_WS = b" \t\r\n\v\f"


def _header_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """Read ``count`` whitespace-separated header tokens, skipping # comments.

    Returns the tokens and the offset just past the last token.
    """
    tokens: list[bytes] = []
    i = 0
    n = len(data)
    while len(tokens) < count:
        while i < n and data[i] in _WS:
            i += 1
        if i >= n:
            raise PGMError("truncated PGM header")
        if data[i] == ord("#"):
            while i < n and data[i] not in b"\r\n":
                i += 1
            continue
        start = i
        while i < n and data[i] not in _WS and data[i] != ord("#"):
            i += 1
        tokens.append(data[start:i])
    return tokens, i


def _header_int(token: bytes, what: str) -> int:
    if not token.isdigit():
        raise PGMError(f"bad {what} in PGM header: {token!r}")
    return int(token)


def parse_pgm(data: bytes) -> GrayImage:
    """Decode P2 (ASCII) or P5 (binary) PGM bytes with maxval <= 255."""
    tokens, end = _header_tokens(data, 4)
    magic = tokens[0]
    if magic not in (b"P2", b"P5"):
        raise PGMError(f"not a P2/P5 PGM file (magic {magic!r})")
    width = _header_int(tokens[1], "width")
    height = _header_int(tokens[2], "height")
    maxval = _header_int(tokens[3], "maxval")
    if width < 1 or height < 1:
        raise PGMError(f"bad PGM dimensions {width}x{height}")
    if maxval < 1 or maxval > 255:
        raise PGMError(f"unsupported maxval {maxval}: only 8-bit PGM (maxval <= 255) is supported")
    count = width * height

    if magic == b"P5":
        # exactly one whitespace byte separates maxval from the raster
        if end >= len(data) or data[end] not in _WS:
            raise PGMError("missing whitespace after PGM maxval")
        raster = data[end + 1:end + 1 + count]
        if len(raster) < count:
            raise PGMError(f"truncated P5 raster: expected {count} bytes, got {len(raster)}")
        pixels = tuple(raster)
    else:
        body = re.sub(rb"#[^\r\n]*", b" ", data[end:])
        fields = body.split()
        if len(fields) < count:
            raise PGMError(f"truncated P2 raster: expected {count} values, got {len(fields)}")
        try:
            pixels = tuple(int(f) for f in fields[:count])
        except ValueError as exc:
            raise PGMError(f"non-integer value in P2 raster: {exc}") from None

    if pixels and max(pixels) > maxval:
        raise PGMError(f"pixel value exceeds maxval {maxval}")
    return GrayImage(height, width, pixels)


def load_pgm(path: PathLike) -> GrayImage:
    return parse_pgm(Path(path).read_bytes())


def encode_pgm(img: GrayImage, binary: bool = True) -> bytes:
    header = f"{'P5' if binary else 'P2'}\n{img.cols} {img.rows}\n255\n".encode("ascii")
    if binary:
        return header + bytes(img.pixels)
    lines = [" ".join(map(str, row)) for row in img.to_rows()]
    return header + ("\n".join(lines) + "\n").encode("ascii")


def save_pgm(img: GrayImage, path: PathLike, binary: bool = True) -> None:
    Path(path).write_bytes(encode_pgm(img, binary=binary))


# --- synthetic images --------------------------------------------------------


@dataclass(frozen=True)
class Constant:
    value: int


@dataclass(frozen=True)
class Gradient:
    """Affine ramp: ``pixel(x, y) = min(255, 4*x + y)``."""


@dataclass(frozen=True)
class Checker:
    cell: int


@dataclass(frozen=True)
class RandomSeeded:
    """Uniform 8-bit noise from ``random.Random(seed).randbytes`` (MT19937)."""

    seed: int


SynthKind = Union[Constant, Gradient, Checker, RandomSeeded]


def synth_image(kind: SynthKind, rows: int, cols: int) -> GrayImage:
    if rows < 3 or cols < 3:
        raise ValueError(f"synthetic images must be at least 3x3, got {rows}x{cols}")
    n = rows * cols
    if isinstance(kind, Constant):
        if not 0 <= kind.value <= 255:
            raise ValueError(f"constant value {kind.value} outside [0, 255]")
        pixels = (kind.value,) * n
    elif isinstance(kind, Gradient):
        pixels = tuple(min(255, 4 * x + y) for x in range(rows) for y in range(cols))
    elif isinstance(kind, Checker):
        if kind.cell < 1:
            raise ValueError("checker cell must be positive")
        pixels = tuple(
            255 if (x // kind.cell + y // kind.cell) % 2 else 0 for x in range(rows) for y in range(cols)
        )
    elif isinstance(kind, RandomSeeded):
        pixels = tuple(random.Random(kind.seed).randbytes(n))
    else:
        raise TypeError(f"unknown synthetic image kind: {kind!r}")
    return GrayImage(rows, cols, pixels)


def seeded_corpus(count: int, rows: int, cols: int, seed: int = 0) -> list[GrayImage]:
    """``count`` random images; image ``i`` uses seed ``seed + i``."""
    return [synth_image(RandomSeeded(seed + i), rows, cols) for i in range(count)]


def random_size_corpus(
    count: int, seed: int = 0, min_side: int = 3, max_side: int = 64
) -> Iterable[GrayImage]:
    """Random images whose sides are drawn independently from [min_side, max_side]."""
    rng = random.Random(seed)
    for _ in range(count):
        rows = rng.randint(min_side, max_side)
        cols = rng.randint(min_side, max_side)
        yield GrayImage(rows, cols, tuple(rng.randbytes(rows * cols)))
