"""Command-line interface: ``aldp {extract,verify,bench,compare}``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Data goes to stdout (or ``--out``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bench, verify
from .descriptors import LBP_BINS, LDP_CODES, Descriptor, extract
from .imgio import PGMError, load_pgm, seeded_corpus, synth_image, RandomSeeded
from .windowing import make_grid, windowed_features

DEFAULT_TIME_SIZE = 260
DEFAULT_WINDOW_SIZE = 300
DEFAULT_WINDOWS = (10, 20, 25, 50, 100)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _descriptor(text: str) -> Descriptor:
    try:
        return Descriptor(text.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown descriptor {text!r} (choose lbp, ldp or aldp)") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aldp", add_help=False, description=__doc__.splitlines()[0])
    parser.add_argument("--help", action="help", help="show this help message and exit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text, add_help=False)
        p.add_argument("--help", action="help", help="show this help message and exit")
        return p

    p = add("extract", "write one feature histogram row per image (or per window)")
    p.add_argument("inputs", nargs="+", type=Path, metavar="PGM")
    p.add_argument("--descriptor", type=_descriptor, default=Descriptor.ALDP, help="lbp, ldp or aldp (default aldp)")
    p.add_argument("--window", type=int, help="tile side length; one row per tile")
    p.add_argument("--out", type=Path, help="CSV destination (default stdout)")

    p = add("verify", "check naive and accelerated responses agree everywhere, and op counts")
    p.add_argument("inputs", nargs="*", type=Path, metavar="PGM", help="images to check instead of a random corpus")
    p.add_argument("--images", type=int, default=verify.DEFAULT_IMAGES, help="random corpus size (default 1000)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the sweep")

    p = add("bench", "time extraction against image count and/or window size; CSV report")
    p.add_argument("--series", choices=("images", "window", "both"), default="both")
    p.add_argument("--size", type=int, help=f"square image side (default {DEFAULT_TIME_SIZE} for images, {DEFAULT_WINDOW_SIZE} for window)")
    p.add_argument("--counts", type=_int_list, default=list(bench.IMAGE_COUNTS), help="image counts, e.g. 1,2,4")
    p.add_argument("--windows", type=_int_list, default=list(DEFAULT_WINDOWS), help="window sides, e.g. 25,50,100")
    p.add_argument("--descriptor", type=_descriptor, action="append", help="repeatable; default all three")
    p.add_argument("--repeats", type=int, default=bench.MIN_REPEATS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, help="CSV destination (default stdout)")

    p = add("compare", "per-pixel multiplication/addition counts of each descriptor")
    p.add_argument("--out", type=Path, help="CSV destination (default stdout)")
    return parser


@contextlib.contextmanager
def _output(path: Optional[Path]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _err(msg: str) -> None:
    print(f"aldp: {msg}", file=sys.stderr)


def cmd_extract(args) -> int:
    d: Descriptor = args.descriptor
    if args.window is not None and args.window < 3:
        _err(f"--window must be at least 3, got {args.window}")
        return 2
    images = []
    for path in args.inputs:
        try:
            images.append((path, load_pgm(path)))
        except (OSError, PGMError) as exc:
            _err(f"cannot read {path}: {exc}")
            return 2

    labels = [f"code_{c}" for c in LDP_CODES] if d is not Descriptor.LBP else [f"code_{c}" for c in range(LBP_BINS)]
    rows = []
    for path, img in images:
        try:
            if args.window is None:
                rows.append([path.name, d.value, *extract(img, d)])
            else:
                make_grid(img, args.window)
                for i, hist in enumerate(windowed_features(img, args.window, d)):
                    rows.append([f"{path.name}#{i}", d.value, *hist])
        except ValueError as exc:
            _err(f"{path}: {exc}")
            return 2

    with _output(args.out) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["id", "descriptor", *labels])
        writer.writerows(rows)
    return 0


def cmd_verify(args) -> int:
    if args.inputs:
        try:
            corpus = [load_pgm(p) for p in args.inputs]
        except (OSError, PGMError) as exc:
            _err(f"cannot read input: {exc}")
            return 2
    else:
        if args.images < 1:
            _err(f"--images {args.images} raised to 1")
        corpus = verify.default_corpus(args.images, args.seed)

    result = verify.equivalence_sweep(corpus, jobs=args.jobs)
    print(f"checked {result.images} images, {result.pixels} pixels, {result.comparisons} responses")
    status = 0
    if not result.ok:
        print(f"MISMATCH at {result.mismatch}")
        status = 1
    else:
        print("equivalence: PASS")

    report = bench.op_count_report()
    for d, (m, a) in report.items():
        print(f"ops {d.name}: {m} multiplications, {a} additions per pixel")
    problems = bench.op_count_failures(report)
    for p in problems:
        print(f"op count FAIL {p}")
    if problems:
        status = 1
    else:
        print("op counts: PASS")
    return status


def cmd_bench(args) -> int:
    if args.repeats < bench.MIN_REPEATS:
        _err(f"--repeats must be at least {bench.MIN_REPEATS}, got {args.repeats}")
        return 2
    if args.size is not None and args.size < 3:
        _err(f"--size must be at least 3, got {args.size}")
        return 2
    if any(c < 1 for c in args.counts):
        _err("--counts entries must be positive")
        return 2
    descriptors = args.descriptor or [Descriptor.LBP, Descriptor.ALDP, Descriptor.LDP]
    records = []

    if args.series in ("window", "both"):
        side = args.size or DEFAULT_WINDOW_SIZE
        frame = synth_image(RandomSeeded(args.seed), side, side)
        try:
            for w in args.windows:
                make_grid(frame, w)
        except ValueError as exc:
            _err(str(exc))
            return 2

    if args.series in ("images", "both"):
        side = args.size or DEFAULT_TIME_SIZE
        corpus = seeded_corpus(max(args.counts), side, side, seed=args.seed)
        for d in descriptors:
            _err(f"timing {d.name} on up to {len(corpus)} {side}x{side} images")
            records.extend(bench.run_time_series(corpus, d, args.repeats, args.counts))

    if args.series in ("window", "both"):
        for d in descriptors:
            _err(f"timing {d.name} on a {side}x{side} frame, windows {args.windows}")
            records.extend(bench.run_window_series(frame, args.windows, d, args.repeats))

    with _output(args.out) as fh:
        bench.write_csv(records, fh)
    return 0


def cmd_compare(args) -> int:
    report = bench.op_count_report()
    with _output(args.out) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["descriptor", "mults_per_pixel", "adds_per_pixel", "published_mults", "published_adds"])
        for d, (m, a) in report.items():
            writer.writerow([d.name, m, a, *bench.PUBLISHED_OP_COUNTS[d]])
    problems = bench.op_count_failures(report)
    for p in problems:
        _err(p)
    return 1 if problems else 0


COMMANDS = {"extract": cmd_extract, "verify": cmd_verify, "bench": cmd_bench, "compare": cmd_compare}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
