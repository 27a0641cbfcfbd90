"""Exit criteria for the package; each test logs one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines inline;
they are also collected into an "acceptance criteria" terminal summary.
Timing criteria assert ratios and orderings only, never absolute seconds.
"""

import pytest

from aldp import (
    Constant,
    Descriptor,
    GrayImage,
    RandomSeeded,
    ResponsePath,
    code_rank,
    column_terms,
    extract,
    lbp_code,
    ldp_code,
    ldp_histogram,
    lbp_histogram,
    make_grid,
    responses_accelerated,
    responses_naive,
    synth_image,
    windowed_features,
)
from aldp import bench, verify
from aldp.imgio import random_size_corpus, seeded_corpus

ORDER = (Descriptor.LBP, Descriptor.ALDP, Descriptor.LDP)


@pytest.fixture(scope="module")
def ten_image_records():
    corpus = seeded_corpus(10, 260, 260, seed=0)
    return {d: bench.run_time_series(corpus, d, repeats=3, counts=(10,))[0] for d in ORDER}


@pytest.fixture(scope="module")
def small_time_series():
    corpus = seeded_corpus(10, 64, 64, seed=100)
    return {d: bench.run_time_series(corpus, d, repeats=3) for d in ORDER}


@pytest.fixture(scope="module")
def window_series():
    frame = synth_image(RandomSeeded(300), 300, 300)
    return {d: bench.run_window_series(frame, (25, 50, 100), d, repeats=3) for d in ORDER}


def test_criterion_1_equivalence(record_criterion):
    corpus = list(verify.default_corpus(1000, seed=0))
    sides = [s for img in corpus for s in (img.rows, img.cols)]
    result = verify.equivalence_sweep(corpus)
    passed = result.ok and result.images == 1000 and min(sides) == 3 and max(sides) == 64
    detail = f"{result.images} images ({min(sides)}..{max(sides)} px sides), {result.comparisons} responses compared"
    if result.mismatch:
        detail += f"; first mismatch {result.mismatch}"
    assert record_criterion(1, "accelerated responses == naive responses, exactly", passed, detail)


def test_criterion_2_op_counts(record_criterion):
    report = bench.op_count_report()
    problems = bench.op_count_failures(report)
    detail = ", ".join(f"{d.name}=({m} mult, {a} add)" for d, (m, a) in report.items())
    passed = (
        not problems
        and report[Descriptor.LDP] == (72, 64)
        and report[Descriptor.LBP] == (0, 8)
        and report[Descriptor.ALDP][0] <= 30
        and report[Descriptor.ALDP][1] <= 46
    )
    assert record_criterion(2, "per-pixel op counts (LDP 72/64, LBP 0/8, ALDP <= 30/46)", passed, detail), problems


def test_criterion_3_speedup(record_criterion, ten_image_records):
    ldp = ten_image_records[Descriptor.LDP].elapsed_s
    aldp = ten_image_records[Descriptor.ALDP].elapsed_s
    ratio = aldp / ldp
    detail = f"ten 260x260 images: LDP {ldp:.3f}s, ALDP {aldp:.3f}s, ALDP/LDP = {ratio:.3f} ({ldp / aldp:.2f}x)"
    assert record_criterion(3, "median ALDP time <= 0.5 x median LDP time", ratio <= 0.5, detail)


def test_criterion_4_linear_scaling(record_criterion):
    ratios = {d: bench.scaling_ratio(d, 260, repeats=3) for d in (Descriptor.ALDP, Descriptor.LDP)}
    passed = all(3.2 <= r <= 5.2 for r in ratios.values())
    detail = ", ".join(f"{d.name} x{r:.2f}" for d, r in ratios.items())
    assert record_criterion(4, "260x260 -> 520x520 time factor within [3.2, 5.2]", passed, detail)


def test_criterion_5_window_counts(record_criterion):
    frame = GrayImage(300, 300, (0,) * 90000)
    totals = {w: make_grid(frame, w).total for w in (25, 50, 100)}
    passed = totals == {25: 144, 50: 36, 100: 9}
    detail = f"{totals}; 10x10 on this frame gives {make_grid(frame, 10).total}, not the published 784"
    assert record_criterion(5, "300x300 frame: windows 25/50/100 -> 144/36/9", passed, detail)


def test_criterion_6_ordering(record_criterion, ten_image_records, small_time_series, window_series):
    points = [("10 x 260x260", {d: ten_image_records[d].elapsed_s for d in ORDER})]
    for i, n in enumerate(r.images for r in small_time_series[Descriptor.LBP]):
        points.append((f"{n} x 64x64", {d: small_time_series[d][i].elapsed_s for d in ORDER}))
    for i, w in enumerate(r.window for r in window_series[Descriptor.LBP]):
        points.append((f"300x300 window {w}", {d: window_series[d][i].elapsed_s for d in ORDER}))
    bad = [label for label, t in points if not t[Descriptor.LBP] < t[Descriptor.ALDP] < t[Descriptor.LDP]]
    detail = f"{len(points)} points checked" + (f"; out of order at {bad}" if bad else "")
    assert record_criterion(6, "elapsed LBP < ALDP < LDP at every measured point", not bad, detail)


def test_time_series_shape(small_time_series):
    for d, records in small_time_series.items():
        assert [r.images for r in records] == list(bench.IMAGE_COUNTS)
        elapsed = [r.elapsed_s for r in records]
        assert elapsed == sorted(elapsed), (d, elapsed)
    for ldp, aldp in zip(small_time_series[Descriptor.LDP], small_time_series[Descriptor.ALDP]):
        if ldp.images >= 4:
            assert aldp.elapsed_s <= 0.5 * ldp.elapsed_s


def test_criterion_7_histograms(record_criterion):
    failures = []
    images = list(random_size_corpus(12, seed=7, min_side=3, max_side=24))
    images += [synth_image(Constant(v), 5 + v % 4, 6) for v in (0, 128, 255)]
    for img in images:
        n = img.rows * img.cols
        for d in Descriptor:
            hist = extract(img, d)
            if len(hist) != d.bins or sum(hist) != n:
                failures.append((d.name, img.rows, img.cols))
        for hist in windowed_features(img, 3, Descriptor.ALDP):
            if len(hist) != 56 or sum(hist) != 9:
                failures.append(("ALDP window", img.rows, img.cols))
    for v in (0, 128, 255):
        img = synth_image(Constant(v), 10, 10)
        for path in ResponsePath:
            if ldp_histogram(img, path=path)[code_rank(7)] != 100:
                failures.append(("constant LDP", v, path.value))
        if lbp_histogram(img)[255] != 100:
            failures.append(("constant LBP", v))
    detail = f"{len(images)} images x 3 descriptors + windows" + (f"; failures {failures}" if failures else "")
    assert record_criterion(7, "56/256 bins summing to rows*cols; constant images peak at codes 7/255", not failures, detail)


def test_criterion_8_golden(record_criterion, golden):
    failures = []
    checked = 0
    for name, fx in golden.items():
        img = fx["image"]
        for x in range(img.rows):
            for y in range(img.cols):
                key = f"{x},{y}"
                naive = list(responses_naive(img, x, y))
                terms = list(column_terms(img, x, y))
                fast = list(responses_accelerated(terms))
                checked += 1
                if not (naive == fast == fx["responses"][key]):
                    failures.append((name, key, "responses"))
                if terms != fx["column_terms"][key]:
                    failures.append((name, key, "column terms"))
                if ldp_code(naive) != fx["ldp_codes"][key] or ldp_code(fast) != fx["ldp_codes"][key]:
                    failures.append((name, key, "ldp code"))
                if lbp_code(img, x, y) != fx["lbp_codes"][key]:
                    failures.append((name, key, "lbp code"))
        for path in ResponsePath:
            if ldp_histogram(img, path=path) != fx["ldp_histogram"]:
                failures.append((name, path.value, "ldp histogram"))
        if lbp_histogram(img) != fx["lbp_histogram"]:
            failures.append((name, "lbp histogram"))
    detail = f"{len(golden)} fixtures, {checked} pixels" + (f"; failures {failures[:5]}" if failures else "")
    assert record_criterion(8, "golden fixtures matched by both paths", not failures, detail)
