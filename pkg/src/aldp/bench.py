"""Wall-clock benchmarks and per-pixel operation counts for LBP, LDP and ALDP.

Timings use :mod:`timeit`. A calibration pass, which doubles as warm-up, grows
the batch size until one batch lasts at least ``MIN_BATCH_S`` so short runs are
measured over several calls; the median of ``repeats`` batches is then
reported per call.
"""

from __future__ import annotations

import csv
import statistics
import timeit
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, TextIO

from .descriptors import Descriptor, extract, lbp_code
from .imgio import GrayImage, RandomSeeded, synth_image
from .kirsch import OpCounter, column_terms, responses_accelerated, responses_naive
from .windowing import make_grid, windowed_features

CSV_HEADER = ("descriptor", "images", "window", "grid_total", "elapsed_s", "mults_per_pixel", "adds_per_pixel")
IMAGE_COUNTS = (1, 2, 4, 6, 8, 10)
MIN_REPEATS = 3
MIN_BATCH_S = 0.2

# Per-pixel (multiplications, additions) as published; the ALDP row is an upper bound.
PUBLISHED_OP_COUNTS = {
    Descriptor.ALDP: (30, 46),
    Descriptor.LDP: (72, 64),
    Descriptor.LBP: (0, 8),
}


@dataclass(frozen=True)
class BenchRecord:
    descriptor: Descriptor
    images: int
    window: Optional[int]
    grid_total: int
    elapsed_s: float
    mults_per_pixel: int
    adds_per_pixel: int

    def csv_row(self) -> list[str]:
        return [
            self.descriptor.name,
            str(self.images),
            "none" if self.window is None else str(self.window),
            str(self.grid_total),
            f"{self.elapsed_s:.6f}",
            str(self.mults_per_pixel),
            str(self.adds_per_pixel),
        ]


def write_csv(records: Iterable[BenchRecord], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.csv_row())


# --- operation counts ------------------------------------------------------------


def _count_pixel(descriptor: Descriptor, img: GrayImage, x: int, y: int) -> tuple[int, int]:
    counter = OpCounter()
    if descriptor is Descriptor.LDP:
        responses_naive(img, x, y, counter=counter)
    elif descriptor is Descriptor.ALDP:
        responses_accelerated(column_terms(img, x, y, counter=counter), counter=counter)
    elif descriptor is Descriptor.LBP:
        lbp_code(img, x, y, counter=counter)
    else:
        raise ValueError(f"unknown descriptor: {descriptor!r}")
    return counter.as_tuple()


def op_counts(descriptor: Descriptor, probe: Optional[GrayImage] = None) -> tuple[int, int]:
    """Per-pixel (multiplications, additions) of a descriptor's kernel.

    Every pixel of ``probe`` (borders included) is instrumented; the tally
    must be the same everywhere.
    """
    if probe is None:
        probe = synth_image(RandomSeeded(0), 4, 5)
    seen = {_count_pixel(descriptor, probe, x, y) for x in range(probe.rows) for y in range(probe.cols)}
    if len(seen) != 1:
        raise AssertionError(f"{descriptor.name} op counts vary across pixels: {sorted(seen)}")
    return seen.pop()


def op_count_report() -> dict[Descriptor, tuple[int, int]]:
    return {d: op_counts(d) for d in (Descriptor.ALDP, Descriptor.LDP, Descriptor.LBP)}


def op_count_failures(report: dict[Descriptor, tuple[int, int]]) -> list[str]:
    """LDP and LBP must match the published counts exactly; ALDP must not exceed them."""
    problems = []
    for d, (mults, adds) in report.items():
        ref_m, ref_a = PUBLISHED_OP_COUNTS[d]
        if d is Descriptor.ALDP:
            ok = mults <= ref_m and adds <= ref_a
        else:
            ok = (mults, adds) == (ref_m, ref_a)
        if not ok:
            problems.append(f"{d.name}: measured ({mults}, {adds}), expected {'<=' if d is Descriptor.ALDP else '=='} ({ref_m}, {ref_a})")
    return problems


# --- timing ----------------------------------------------------------------------


def time_call(fn: Callable[[], object], repeats: int = MIN_REPEATS) -> float:
    """Median seconds per call of ``fn`` over ``repeats`` timed batches."""
    if repeats < MIN_REPEATS:
        raise ValueError(f"repeats must be at least {MIN_REPEATS}, got {repeats}")
    timer = timeit.Timer(fn)
    number = 1
    while timer.timeit(number) < MIN_BATCH_S:
        number *= 2
    return statistics.median(timer.repeat(repeat=repeats, number=number)) / number


def run_time_series(
    corpus: Sequence[GrayImage],
    descriptor: Descriptor,
    repeats: int = MIN_REPEATS,
    counts: Sequence[int] = IMAGE_COUNTS,
) -> list[BenchRecord]:
    """Extraction time for each corpus prefix whose length is in ``counts``."""
    if not corpus:
        raise ValueError("corpus is empty")
    if repeats < MIN_REPEATS:
        raise ValueError(f"repeats must be at least {MIN_REPEATS}, got {repeats}")
    mults, adds = op_counts(descriptor)
    records = []
    for n in sorted(set(counts)):
        if not 1 <= n <= len(corpus):
            continue
        batch = corpus[:n]
        elapsed = time_call(lambda: [extract(img, descriptor) for img in batch], repeats)
        records.append(BenchRecord(descriptor, n, None, 1, elapsed, mults, adds))
    return records


def run_window_series(
    img: GrayImage,
    windows: Sequence[int],
    descriptor: Descriptor,
    repeats: int = MIN_REPEATS,
) -> list[BenchRecord]:
    if repeats < MIN_REPEATS:
        raise ValueError(f"repeats must be at least {MIN_REPEATS}, got {repeats}")
    grids = [make_grid(img, w) for w in windows]  # validate every window before timing
    mults, adds = op_counts(descriptor)
    records = []
    for grid in grids:
        elapsed = time_call(lambda: windowed_features(img, grid.window, descriptor), repeats)
        records.append(BenchRecord(descriptor, 1, grid.window, grid.total, elapsed, mults, adds))
    return records


def scaling_ratio(descriptor: Descriptor, side: int, repeats: int = MIN_REPEATS, seed: int = 0) -> float:
    """Time on a ``2*side`` square image divided by time on a ``side`` square image."""
    small = synth_image(RandomSeeded(seed), side, side)
    large = synth_image(RandomSeeded(seed), 2 * side, 2 * side)
    t_small = time_call(lambda: extract(small, descriptor), repeats)
    t_large = time_call(lambda: extract(large, descriptor), repeats)
    return t_large / t_small
