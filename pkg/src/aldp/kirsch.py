"""Kirsch compass responses, computed directly or from shared column terms.

Two interchangeable paths produce the eight directional responses
``(m0, ..., m7)`` of a pixel:

* :func:`responses_naive` convolves each of the eight masks with the 3x3
  neighbourhood, sampling the image once per mask weight.
* :func:`column_terms` + :func:`responses_accelerated` read the neighbourhood
  once, build the fifteen distinct mask-column dot products ``A0..A14`` and
  add three of them per direction.

Both return identical integers at every pixel. Arithmetic can be tallied by
passing an :class:`OpCounter`; the tally counts the scalar operations the
code actually executes, by running the same kernels over :class:`Counted`
values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .imgio import BorderPolicy, GrayImage, require_extractable, sample

ResponseVector = tuple[int, int, int, int, int, int, int, int]

# Outer ring of a 3x3 mask, clockwise from the top-left corner, as (row, col) offsets.
RING = ((-1, -1), (-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1), (0, -1))

# Ring weights of mask 0 (east): the three 5s occupy column +1.
_EAST_RING = (-3, -3, 5, 5, 5, -3, -3, -3)


@dataclass(frozen=True)
class KirschMask:
    index: int
    weights: tuple[tuple[int, int, int], ...]


def standard_masks() -> list[KirschMask]:
    """The eight Kirsch masks, east first, turning counter-clockwise.

    Mask ``i + 1`` is mask ``i`` with its outer ring rotated one position, so
    mask 2 (north) carries its 5s on row -1 and mask 4 (west) on column -1.
    """
    masks = []
    for i in range(8):
        grid = [[0, 0, 0] for _ in range(3)]
        for j, (dr, dc) in enumerate(RING):
            grid[dr + 1][dc + 1] = _EAST_RING[(j + i) % 8]
        masks.append(KirschMask(i, tuple(tuple(row) for row in grid)))
    return masks


_MASK_WEIGHTS = tuple(m.weights for m in standard_masks())


# --- operation counting -----------------------------------------------------


@dataclass
class OpCounter:
    multiplications: int = 0
    additions: int = 0

    def as_tuple(self) -> tuple[int, int]:
        return (self.multiplications, self.additions)


class Counted:
    """Integer stand-in that records each ``*``, ``+`` and ``-`` into a counter.

    Subtractions are tallied as additions. Results stay :class:`Counted`, so a
    kernel run on counted samples reports exactly what it executed.
    """

    __slots__ = ("value", "counter")

    def __init__(self, value: int, counter: OpCounter):
        self.value = value
        self.counter = counter

    def _wrap(self, value):
        return Counted(value, self.counter)

    def __mul__(self, other):
        self.counter.multiplications += 1
        return self._wrap(self.value * _raw(other))

    __rmul__ = __mul__

    def __add__(self, other):
        self.counter.additions += 1
        return self._wrap(self.value + _raw(other))

    __radd__ = __add__

    def __sub__(self, other):
        self.counter.additions += 1
        return self._wrap(self.value - _raw(other))

    def __rsub__(self, other):
        self.counter.additions += 1
        return self._wrap(_raw(other) - self.value)

    def __ge__(self, other):
        return self.value >= _raw(other)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Counted({self.value})"


def _raw(v):
    return v.value if isinstance(v, Counted) else v


def counting_sampler(counter: OpCounter):
    def fetch(img, x, y):
        return Counted(sample(img, x, y), counter)

    return fetch


# --- naive path ---------------------------------------------------------------


def _check_bounds(img: GrayImage, x: int, y: int) -> None:
    if not (0 <= x < img.rows and 0 <= y < img.cols):
        raise IndexError(f"pixel ({x}, {y}) outside {img.rows}x{img.cols} image")


def naive_at(img: GrayImage, x: int, y: int, fetch=sample) -> tuple:
    # Every weight, the zero centre included, multiplies a freshly sampled pixel.
    out = []
    for weights in _MASK_WEIGHTS:
        acc = None
        for k, row in enumerate(weights):
            for l, w in enumerate(row):
                term = w * fetch(img, x + k - 1, y + l - 1)
                acc = term if acc is None else acc + term
        out.append(acc)
    return tuple(out)


def responses_naive(
    img: GrayImage,
    x: int,
    y: int,
    policy: BorderPolicy = BorderPolicy.CLAMP,
    counter: Optional[OpCounter] = None,
) -> ResponseVector:
    """Direct 3x3 convolution of all eight masks at ``(x, y)``.

    With a counter this tallies 72 multiplications and 64 additions.
    """
    _check_bounds(img, x, y)
    if counter is None:
        return naive_at(img, x, y)
    return tuple(int(m) for m in naive_at(img, x, y, counting_sampler(counter)))


# --- accelerated path -------------------------------------------------------------


class ColumnTerms(NamedTuple):
    """The fifteen distinct mask-column dot products at one pixel.

    Column offsets are -1 (left), 0 (centre) and +1 (right); rows read top to
    bottom. Each docstring line gives the weights of the column.

    a0: left (-3, -3, -3), shared by masks 0, 1, 7
    a1: centre (-3, ., -3), masks 0, 4
    a2: right (5, 5, 5), mask 0
    a3: centre (5, ., -3), masks 1, 2, 3
    a4: right (5, 5, -3), mask 1
    a5: left (5, -3, -3), mask 2
    a6: right (5, -3, -3), mask 2
    a7: left (5, 5, -3), mask 3
    a8: right (-3, -3, -3), masks 3, 4, 5
    a9: left (5, 5, 5), mask 4
    a10: left (-3, 5, 5), mask 5
    a11: centre (-3, ., 5), masks 5, 6, 7
    a12: left (-3, -3, 5), mask 6
    a13: right (-3, -3, 5), mask 6
    a14: right (-3, 5, 5), mask 7
    """

    a0: int
    a1: int
    a2: int
    a3: int
    a4: int
    a5: int
    a6: int
    a7: int
    a8: int
    a9: int
    a10: int
    a11: int
    a12: int
    a13: int
    a14: int


def patch_at(img: GrayImage, x: int, y: int, fetch=sample) -> tuple:
    """The 3x3 neighbourhood as (nw, n, ne, w, c, e, sw, s, se), each sampled once."""
    return (
        fetch(img, x - 1, y - 1), fetch(img, x - 1, y), fetch(img, x - 1, y + 1),
        fetch(img, x, y - 1), fetch(img, x, y), fetch(img, x, y + 1),
        fetch(img, x + 1, y - 1), fetch(img, x + 1, y), fetch(img, x + 1, y + 1),
    )


def terms_from_patch(nw, n, ne, w, c, e, sw, s, se) -> tuple:
    # Same-coefficient pixels are summed before the single multiply.
    return (
        -3 * (nw + w + sw),
        -3 * (n + s),
        5 * (ne + e + se),
        5 * n + -3 * s,
        5 * (ne + e) + -3 * se,
        5 * nw + -3 * (w + sw),
        5 * ne + -3 * (e + se),
        5 * (nw + w) + -3 * sw,
        -3 * (ne + e + se),
        5 * (nw + w + sw),
        -3 * nw + 5 * (w + sw),
        -3 * n + 5 * s,
        -3 * (nw + w) + 5 * sw,
        -3 * (ne + e) + 5 * se,
        -3 * ne + 5 * (e + se),
    )


def responses_from_terms(a: Sequence) -> tuple:
    a0, a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12, a13, a14 = a
    return (
        a0 + a1 + a2,
        a0 + a3 + a4,
        a5 + a3 + a6,
        a7 + a3 + a8,
        a9 + a1 + a8,
        a10 + a11 + a8,
        a12 + a11 + a13,
        a0 + a11 + a14,
    )


def accelerated_at(img: GrayImage, x: int, y: int, fetch=sample) -> tuple:
    return responses_from_terms(terms_from_patch(*patch_at(img, x, y, fetch)))


def column_terms(
    img: GrayImage,
    x: int,
    y: int,
    policy: BorderPolicy = BorderPolicy.CLAMP,
    counter: Optional[OpCounter] = None,
) -> ColumnTerms:
    _check_bounds(img, x, y)
    fetch = sample if counter is None else counting_sampler(counter)
    return ColumnTerms(*(int(t) for t in terms_from_patch(*patch_at(img, x, y, fetch))))


def responses_accelerated(terms: Sequence[int], counter: Optional[OpCounter] = None) -> ResponseVector:
    """Sum three column terms per direction (16 additions, no multiplications)."""
    if len(terms) != 15:
        raise ValueError(f"expected 15 column terms, got {len(terms)}")
    if counter is None:
        return responses_from_terms(terms)
    return tuple(int(m) for m in responses_from_terms([Counted(t, counter) for t in terms]))


# --- whole image --------------------------------------------------------------------


class ResponsePath(enum.Enum):
    NAIVE = "naive"
    ACCELERATED = "accelerated"


def kernel_for(path: ResponsePath):
    """Per-pixel response function ``(img, x, y) -> responses`` for a path."""
    if path is ResponsePath.NAIVE:
        return naive_at
    if path is ResponsePath.ACCELERATED:
        return accelerated_at
    raise ValueError(f"unknown response path: {path!r}")


def response_field(img: GrayImage, path: ResponsePath = ResponsePath.ACCELERATED) -> list[list[ResponseVector]]:
    """Responses for every pixel, as ``field[x][y]``."""
    require_extractable(img)
    kernel = kernel_for(path)
    return [[kernel(img, x, y) for y in range(img.cols)] for x in range(img.rows)]
