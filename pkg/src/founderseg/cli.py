"""Command-line interface.

Exit codes: 0 on success, 1 when no segmentation exists (``n < L``) or a
verification fails, 2 on unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
import time
from typing import Iterator, List, Optional, TextIO

from . import __version__
from .bench import median_time, random_columns, touch_ratio
from .errors import InfeasibleLength, InputError
from .founders import decode_founders, founders_for
from .io import (
    FORMATS,
    ColumnStream,
    read_rows,
    sniff_format,
    write_founders_fasta,
    write_parses,
    write_segmentation,
)
from .model import Segmentation
from .segmenter import MODES, backtrack, run_streaming, segment
from .verify import DEFAULT_SEED, run_verify

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT = 2


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _segment_colstream(path: str, min_length: int, mode: str) -> Segmentation:
    # two passes over the file: the solve, then per-segment cardinalities
    with ColumnStream(path) as stream:
        m, n = stream.m, stream.n
        res = run_streaming(stream, m, n, min_length, mode=mode)
    with ColumnStream(path) as stream:
        return backtrack(res.bt, n, min_length, stream, m)


def cmd_segment(args: argparse.Namespace) -> int:
    fmt = sniff_format(args.input) if args.format == "auto" else args.format
    if fmt == "colstream":
        seg = _segment_colstream(args.input, args.L, args.mode)
    else:
        seg, _ = segment(read_rows(args.input, fmt), args.L, mode=args.mode)
    with _output(args.output) as out:
        write_segmentation(out, seg)
    return EXIT_OK


def cmd_founders(args: argparse.Namespace) -> int:
    matrix = read_rows(args.input, args.format)
    seg, _ = segment(matrix, args.L, mode=args.mode)
    fs = founders_for(matrix, seg)
    with _output(args.output) as out:
        write_founders_fasta(out, decode_founders(matrix, fs))
    if args.parses:
        with open(args.parses, "w") as out:
            write_parses(out, fs)
    print(f"K={fs.K} segments={len(seg)} crossovers={fs.crossover_count}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verify(
        cases=args.cases, max_n=args.max_n, max_m=args.max_m, max_L=args.max_L,
        seed=args.seed, mode=args.mode,
    )
    for line in report.failures:
        print(line, file=sys.stderr)
    status = "ok" if report.passed else "FAILED"
    print(f"{report.ok}/{report.cases} {status}")
    return EXIT_OK if report.passed else 1


def cmd_bench(args: argparse.Namespace) -> int:
    columns = random_columns(args.m, args.n, args.sigma, seed=args.seed)
    start = time.perf_counter()
    median = median_time(columns, args.m, args.L, mode=args.mode, repeats=args.repeats)
    total = time.perf_counter() - start
    print(f"m={args.m} n={args.n} sigma={args.sigma} L={args.L} mode={args.mode}")
    print(f"median_seconds\t{median:.4f}")
    print(f"columns_per_second\t{args.n / median:.1f}")
    print(f"total_seconds\t{total:.4f}")
    sample = columns[: min(args.n, 2000)]
    print(f"maxd_touches_per_m_log_sigma\t{touch_ratio(sample, args.m, args.sigma):.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="founderseg",
        description="Minimum segmentation and founder sequences for haplotype panels.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_solver_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("-L", type=_positive, required=True, help="minimum segment length")
        p.add_argument("--mode", choices=MODES, default="jump")
        p.add_argument("--format", choices=FORMATS, default="auto")
        p.add_argument("input")

    p = sub.add_parser("segment", help="compute an optimal segmentation (TSV)")
    add_solver_args(p)
    p.add_argument("-o", "--output", help="segmentation TSV (default: stdout)")
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("founders", help="build founder sequences (FASTA)")
    add_solver_args(p)
    p.add_argument("-o", "--output", help="founders FASTA (default: stdout)")
    p.add_argument("--parses", help="write recombinant/segment/founder TSV here")
    p.set_defaults(func=cmd_founders)

    p = sub.add_parser("verify", help="check the solver against brute-force oracles")
    p.add_argument("--cases", type=_positive, default=500)
    p.add_argument("--max-n", type=_positive, default=16)
    p.add_argument("--max-m", type=_positive, default=8)
    p.add_argument("--max-L", type=_positive, default=6)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--mode", choices=MODES, default="jump")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the solver on random panels")
    p.add_argument("--m", type=_positive, default=50)
    p.add_argument("--n", type=_positive, default=20000)
    p.add_argument("--sigma", type=_positive, default=4)
    p.add_argument("-L", type=_positive, default=10)
    p.add_argument("--mode", choices=MODES, default="jump")
    p.add_argument("--repeats", type=_positive, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleLength as exc:
        print(f"founderseg: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (InputError, OSError, UnicodeDecodeError) as exc:
        print(f"founderseg: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
