"""Command-line interface.

Exit codes: 0 success (including "no annulus"), 1 usage or parse error,
2 general-position violation, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from . import fileio
from .degenerate import solve_point_inner
from .geometry import validate_general_position
from .harness import bench, bench_table, generate_points, verify
from .oracle import brute_max_annulus
from .solver import solve_max_annulus

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(args) -> list:
    try:
        inst = fileio.read_instance(args.input)
    except OSError as exc:
        raise CliError(f"cannot read {args.input}: {exc.strerror}", EXIT_USAGE)
    except fileio.InstanceParseError as exc:
        raise CliError(f"{args.input}: {exc}", EXIT_USAGE)
    violations = validate_general_position(inst.points)
    if violations:
        if not args.perturb:
            detail = "; ".join(inst.describe(v) for v in violations[:5])
            raise CliError(f"{args.input}: points not in general position: {detail}",
                           EXIT_INVALID)
        return fileio.perturb(inst.points)
    return inst.points


def _emit(args, points, solution, algorithm: str, elapsed_ms: float) -> None:
    rec = fileio.result_record(solution, algorithm, round(elapsed_ms, 3))
    if args.json:
        print(fileio.record_json(rec))
    else:
        sys.stdout.write(fileio.record_text(rec))
        if getattr(args, "timing", False):
            print(f"elapsed_ms: {rec['elapsed_ms']}")
    if args.svg:
        fileio.write_svg(args.svg, points, solution)


def _timed(fn, *a, **kw):
    start = time.perf_counter()
    result = fn(*a, **kw)
    return result, (time.perf_counter() - start) * 1000.0


def cmd_solve(args) -> int:
    points = _load(args)
    sol, ms = _timed(solve_max_annulus, points, parallel=args.parallel)
    _emit(args, points, sol, "sweep", ms)
    return EXIT_OK


def cmd_brute(args) -> int:
    points = _load(args)
    if len(points) > args.max_n:
        raise CliError(f"brute force is O(n^5); n={len(points)} exceeds --max-n {args.max_n}",
                       EXIT_USAGE)
    sol, ms = _timed(brute_max_annulus, points)
    _emit(args, points, sol, "brute", ms)
    return EXIT_OK


def cmd_degenerate(args) -> int:
    points = _load(args)
    sol, ms = _timed(solve_point_inner, points)
    _emit(args, points, sol, "degenerate", ms)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        points = generate_points(args.n, args.seed, args.coord_max)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE)
    coord_max = args.coord_max if args.coord_max is not None else 10 * args.n
    text = fileio.format_instance(points, f"n={args.n} seed={args.seed} coord_max={coord_max}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        lo_i, hi_i = int(lo), int(hi if sep else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    if not 1 <= lo_i <= hi_i:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo_i, hi_i


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not sizes or sizes != sorted(sizes):
        raise argparse.ArgumentTypeError("sizes must be ascending")
    return sizes


def cmd_verify(args) -> int:
    if args.mode == "sweep" and args.n_range[1] > args.max_n:
        raise CliError(f"n-range upper bound {args.n_range[1]} exceeds --max-n {args.max_n}",
                       EXIT_USAGE)
    report = verify(args.n_range, args.trials, args.seed, mode=args.mode,
                    fault=args.inject_fault, coord_max=args.coord_max)
    if report.ok:
        print(f"{report.agreed}/{report.trials} agree")
        return EXIT_OK
    ce = report.counterexample
    text = fileio.format_instance(
        ce, f"counterexample ({args.mode}), minimized from n={len(report.original)} "
            f"trial seed {report.seed}")
    print(f"MISMATCH after {report.agreed}/{report.trials} agreeing trials")
    sys.stdout.write(text)
    if args.artifact:
        with open(args.artifact, "w") as fh:
            fh.write(text)
    return EXIT_MISMATCH


def cmd_bench(args) -> int:
    rows = bench(args.sizes, args.trials, args.seed, degenerate=args.degenerate,
                 parallel=args.parallel)
    print(bench_table(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rectannulus",
                     description="Maximum-width axis-parallel empty rectangular annulus.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def solver_command(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help="instance file: one 'x y' per line, '#' comments")
        p.add_argument("--json", action="store_true", help="print the result record as JSON")
        p.add_argument("--svg", metavar="PATH", help="write a figure of the result")
        p.add_argument("--perturb", action="store_true",
                       help="break coordinate ties instead of rejecting the input")
        p.set_defaults(func=func)
        return p

    p = solver_command("solve", cmd_solve, "strip-sweep solver, O(n^3)")
    p.add_argument("--parallel", type=int, default=1, metavar="N", help="worker processes")
    p.add_argument("--timing", action="store_true", help="also print elapsed time (text mode)")
    p = solver_command("brute", cmd_brute, "exhaustive reference solver, O(n^5)")
    p.add_argument("--max-n", type=int, default=64)
    solver_command("degenerate", cmd_degenerate, "inner rectangle collapsed to one point")

    p = sub.add_parser("gen", help="write a random instance in general position")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coord-max", type=int, default=None, help="default 10*n")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="differential test against the brute-force oracle")
    p.add_argument("--n-range", type=_n_range, default=(6, 16), metavar="A..B")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("sweep", "degenerate"), default="sweep")
    p.add_argument("--coord-max", type=int, default=None)
    p.add_argument("--max-n", type=int, default=20, help="largest n allowed for the oracle")
    p.add_argument("--artifact", metavar="PATH", help="write the minimized counterexample here")
    p.add_argument("--inject-fault", choices=("swap-shift",), default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="median runtimes and growth exponents")
    p.add_argument("--sizes", type=_sizes, default=[64, 128, 256])
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degenerate", action="store_true")
    p.add_argument("--parallel", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
