"""Instance generation, differential verification with shrinking, and benchmarks."""

from __future__ import annotations

import math
import random
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .degenerate import solve_point_inner
from .geometry import Point, as_points
from .oracle import brute_max_annulus, brute_point_inner
from .solver import solve_max_annulus


def generate_points(n: int, seed: int, coord_max: Optional[int] = None) -> list[Point]:
    """n points with distinct integer x's and distinct integer y's in [0, coord_max]."""
    if coord_max is None:
        coord_max = 10 * n
    if n < 1:
        raise ValueError("n must be at least 1")
    if coord_max < n:
        raise ValueError(f"coord-max {coord_max} < n {n}: cannot draw distinct coordinates")
    rng = random.Random(seed)
    xs = rng.sample(range(coord_max + 1), n)
    ys = rng.sample(range(coord_max + 1), n)
    return as_points(zip(xs, ys))


def _width(sol):
    return None if sol is None else sol.width


def sweep_mismatch(fault: Optional[str] = None) -> Callable[[Sequence[Point]], bool]:
    def differs(points):
        return _width(solve_max_annulus(points, fault=fault)) != _width(brute_max_annulus(points))
    return differs


def degenerate_mismatch(points: Sequence[Point]) -> bool:
    return _width(solve_point_inner(points)) != _width(brute_point_inner(points))


def shrink(points: Sequence[Point], failing: Callable[[Sequence[Point]], bool]) -> list[Point]:
    """Greedily delete points while ``failing`` still holds; ids are renumbered."""
    current = as_points((p.x, p.y) for p in points)
    progress = True
    while progress:
        progress = False
        for i in range(len(current)):
            candidate = as_points((p.x, p.y) for j, p in enumerate(current) if j != i)
            if failing(candidate):
                current, progress = candidate, True
                break
    return current


@dataclass
class VerifyReport:
    trials: int
    agreed: int = 0
    counterexample: Optional[list[Point]] = None
    original: Optional[list[Point]] = None
    seed: Optional[int] = None
    failures: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.agreed == self.trials


def verify(n_range: tuple[int, int], trials: int, seed: int, *, mode: str = "sweep",
           fault: Optional[str] = None, coord_max: Optional[int] = None,
           stop_on_failure: bool = True) -> VerifyReport:
    """Compare the fast solver against its oracle on seeded random instances."""
    lo, hi = n_range
    if mode == "sweep":
        differs = sweep_mismatch(fault)
    elif mode == "degenerate":
        differs = degenerate_mismatch
    else:
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    report = VerifyReport(trials)
    for t in range(trials):
        n = rng.randint(lo, hi)
        trial_seed = rng.getrandbits(32)
        points = generate_points(n, trial_seed, coord_max)
        if not differs(points):
            report.agreed += 1
            continue
        report.failures.append(t)
        if report.counterexample is None:
            report.original, report.seed = points, trial_seed
            report.counterexample = shrink(points, differs)
        if stop_on_failure:
            report.trials = t + 1
            break
    return report


@dataclass
class BenchRow:
    n: int
    median_s: float
    ratio: Optional[float] = None
    slope: Optional[float] = None


def bench(sizes: Sequence[int], trials: int, seed: int = 0, *, degenerate: bool = False,
          parallel: int = 1) -> list[BenchRow]:
    """Median wall time per size and the log-log slope between consecutive sizes."""
    rng = random.Random(seed)
    rows: list[BenchRow] = []
    for n in sizes:
        times = []
        for _ in range(trials):
            points = generate_points(n, rng.getrandbits(32))
            start = time.perf_counter()
            if degenerate:
                solve_point_inner(points)
            else:
                solve_max_annulus(points, parallel=parallel)
            times.append(time.perf_counter() - start)
        row = BenchRow(n, statistics.median(times))
        if rows:
            prev = rows[-1]
            row.ratio = row.median_s / prev.median_s
            row.slope = math.log(row.ratio) / math.log(n / prev.n)
        rows.append(row)
    return rows


def bench_table(rows: Sequence[BenchRow]) -> str:
    out = [f"{'n':>8} {'median_s':>12} {'ratio':>8} {'slope':>7}"]
    for r in rows:
        ratio = "" if r.ratio is None else f"{r.ratio:.2f}"
        slope = "" if r.slope is None else f"{r.slope:.2f}"
        out.append(f"{r.n:>8} {r.median_s:>12.5f} {ratio:>8} {slope:>7}")
    return "\n".join(out)
