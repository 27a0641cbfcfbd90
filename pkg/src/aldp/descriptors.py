"""LDP and LBP codes and their histogram feature vectors."""

from __future__ import annotations

import enum
from typing import Optional, Sequence

from . import kirsch
from .imgio import BorderPolicy, GrayImage, require_extractable, sample
from .kirsch import OpCounter, ResponsePath, counting_sampler

LDP_K = 3

# Valid k=3 codes in ascending numeric order; histogram bin i counts LDP_CODES[i].
LDP_CODES: tuple[int, ...] = tuple(c for c in range(256) if bin(c).count("1") == LDP_K)
LDP_BINS = len(LDP_CODES)
LBP_BINS = 256

_RANK = [-1] * 256
for _i, _c in enumerate(LDP_CODES):
    _RANK[_c] = _i
del _i, _c


class Descriptor(enum.Enum):
    LBP = "lbp"
    LDP = "ldp"
    ALDP = "aldp"

    @property
    def bins(self) -> int:
        return LBP_BINS if self is Descriptor.LBP else LDP_BINS


def code_rank(code: int) -> int:
    """Histogram bin of a 3-bit LDP code."""
    rank = _RANK[code] if 0 <= code < 256 else -1
    if rank < 0:
        raise ValueError(f"{code} is not a valid k={LDP_K} LDP code")
    return rank


def code_unrank(index: int) -> int:
    return LDP_CODES[index]


def ldp_code(responses: Sequence[int], k: int = LDP_K) -> int:
    """Set the bits of the ``k`` strongest responses.

    Directions are ranked by response (descending), ties going to the lower
    direction index, so exactly ``k`` bits are set even on flat regions.
    """
    if not 1 <= k <= 7:
        raise ValueError(f"k must be in 1..7, got {k}")
    # sorted(reverse=True) is stable, so equal responses keep index order
    code = 0
    for i in sorted(range(8), key=responses.__getitem__, reverse=True)[:k]:
        code |= 1 << i
    return code


def ldp_histogram(
    img: GrayImage, k: int = LDP_K, path: ResponsePath = ResponsePath.ACCELERATED
) -> list[int]:
    if k != LDP_K:
        raise ValueError(f"only k={LDP_K} histograms (56 bins) are supported, got k={k}")
    require_extractable(img)
    respond = kirsch.kernel_for(path)
    hist = [0] * LDP_BINS
    rank = _RANK
    for x in range(img.rows):
        for y in range(img.cols):
            hist[rank[ldp_code(respond(img, x, y))]] += 1
    return hist


def ldp_feature_vector(img: GrayImage, path: ResponsePath = ResponsePath.ACCELERATED) -> tuple[int, ...]:
    """The 56-bin LDP histogram as an immutable feature vector."""
    return tuple(ldp_histogram(img, LDP_K, path))


# Clockwise from the top-left; neighbour i carries weight 2**i.
LBP_NEIGHBOURS = ((-1, -1), (-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1), (0, -1))


def _lbp_at(img: GrayImage, x: int, y: int, fetch=sample) -> int:
    centre = fetch(img, x, y)
    code = 0
    for bit, (dx, dy) in enumerate(LBP_NEIGHBOURS):
        if fetch(img, x + dx, y + dy) - centre >= 0:
            code |= 1 << bit
    return code


def lbp_code(
    img: GrayImage,
    x: int,
    y: int,
    policy: BorderPolicy = BorderPolicy.CLAMP,
    counter: Optional[OpCounter] = None,
) -> int:
    """LBP label of ``(x, y)``: bit i is set when neighbour i >= centre.

    Each threshold is a subtraction, so a counter records 8 additions.
    """
    if not (0 <= x < img.rows and 0 <= y < img.cols):
        raise IndexError(f"pixel ({x}, {y}) outside {img.rows}x{img.cols} image")
    if counter is None:
        return _lbp_at(img, x, y)
    return _lbp_at(img, x, y, counting_sampler(counter))


def lbp_histogram(img: GrayImage, policy: BorderPolicy = BorderPolicy.CLAMP) -> list[int]:
    require_extractable(img)
    hist = [0] * LBP_BINS
    for x in range(img.rows):
        for y in range(img.cols):
            hist[_lbp_at(img, x, y)] += 1
    return hist


def extract(img: GrayImage, descriptor: Descriptor) -> list[int]:
    """Whole-image histogram for any descriptor."""
    if descriptor is Descriptor.LBP:
        return lbp_histogram(img)
    if descriptor is Descriptor.LDP:
        return ldp_histogram(img, LDP_K, ResponsePath.NAIVE)
    if descriptor is Descriptor.ALDP:
        return ldp_histogram(img, LDP_K, ResponsePath.ACCELERATED)
    raise ValueError(f"unknown descriptor: {descriptor!r}")
