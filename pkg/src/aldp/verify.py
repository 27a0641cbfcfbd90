"""Naive-vs-accelerated equivalence sweep over image corpora."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from . import kirsch
from .imgio import GrayImage, random_size_corpus

DEFAULT_IMAGES = 1000


@dataclass(frozen=True)
class Mismatch:
    image: int
    x: int
    y: int
    direction: int
    naive: int
    accelerated: int

    def __str__(self) -> str:
        return (
            f"image {self.image}, pixel ({self.x}, {self.y}), direction {self.direction}: "
            f"naive {self.naive} != accelerated {self.accelerated}"
        )


@dataclass
class SweepResult:
    images: int = 0
    pixels: int = 0
    mismatch: Optional[Mismatch] = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    @property
    def comparisons(self) -> int:
        return 8 * self.pixels


def check_image(index: int, img: GrayImage) -> tuple[int, Optional[Mismatch]]:
    """Compare both paths at every pixel; returns (pixels checked, first mismatch)."""
    checked = 0
    for x in range(img.rows):
        for y in range(img.cols):
            naive = kirsch.responses_naive(img, x, y)
            fast = kirsch.responses_accelerated(kirsch.column_terms(img, x, y))
            checked += 1
            if naive != fast:
                d = next(i for i in range(8) if naive[i] != fast[i])
                return checked, Mismatch(index, x, y, d, naive[d], fast[d])
    return checked, None


def _check_pair(pair):
    return check_image(*pair)


def equivalence_sweep(corpus: Iterable[GrayImage], jobs: int = 1) -> SweepResult:
    """Stop at the first image with a differing response; ``jobs > 1`` fans out over processes."""
    result = SweepResult()
    pairs = enumerate(corpus)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = pool.map(_check_pair, pairs, chunksize=16)
            return _collect(result, outcomes)
    return _collect(result, (check_image(i, img) for i, img in pairs))


def _collect(result: SweepResult, outcomes) -> SweepResult:
    for checked, mismatch in outcomes:
        result.images += 1
        result.pixels += checked
        if mismatch is not None:
            result.mismatch = mismatch
            break
    return result


def default_corpus(count: int = DEFAULT_IMAGES, seed: int = 0) -> Iterable[GrayImage]:
    """Seeded random images with sides in [3, 64]; at least one image."""
    return random_size_corpus(max(count, 1), seed=seed, min_side=3, max_side=64)
