"""Global driver: best annulus over every strip, O(n^3) time, O(n) extra space."""

from __future__ import annotations

import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional, Sequence

from .geometry import Point, require_general_position
from .sweep import Solution, SortedPoints, best_in_strip, build_strip, strip_solution

_shared: Optional[SortedPoints] = None


def _better(sol: Optional[Solution], best: Optional[Solution]) -> bool:
    if sol is None:
        return False
    if best is None or sol.width > best.width:
        return True
    return sol.width == best.width and _strip_ids(sol) < _strip_ids(best)


def _strip_ids(sol: Solution):
    return sol.origin.strip


def _solve_tops(sp: SortedPoints, tops: Iterable[int], fault: Optional[str]) -> Optional[Solution]:
    """Best solution over all strips whose top point is ``by_y_desc[k]`` for k in ``tops``."""
    order = sp.by_y_desc
    n = len(order)
    best = None
    for k in tops:
        a = order[k]
        # a strip needs two points strictly between its top and bottom rows
        for m in range(k + 3, n):
            strip = build_strip(sp, a, order[m])
            state, label = best_in_strip(strip, fault=fault)
            if state is None or (best is not None and state.best_width < best.width):
                continue
            sol = strip_solution(strip, state, label)
            if _better(sol, best):
                best = sol
    return best


def _init_worker(points: Sequence[Point]) -> None:
    global _shared
    _shared = SortedPoints(points)


def _worker(tops: list[int], fault: Optional[str]) -> Optional[Solution]:
    return _solve_tops(_shared, tops, fault)


def solve_max_annulus(points: Sequence[Point], *, parallel: int = 1,
                      fault: Optional[str] = None) -> Optional[Solution]:
    """Maximum-width axis-parallel empty rectangular annulus of ``points``.

    Every ordered pair (a, b) with y(a) > y(b) is a strip, solved
    independently. Equal widths are resolved toward the smallest
    ``(a.id, b.id)``, so the result does not depend on ``parallel``.
    Returns None when no annulus exists (always the case for n < 4).
    """
    points = list(points)
    require_general_position(points)
    n = len(points)
    if n < 4:
        return None
    tops = list(range(n - 3))
    if parallel <= 1:
        return _solve_tops(SortedPoints(points), tops, fault)

    # round-robin so high (long) and low (short) top rows mix within a chunk
    nchunks = min(len(tops), 4 * parallel)
    chunks = [tops[c::nchunks] for c in range(nchunks)]
    ctx = multiprocessing.get_context("fork")
    with ProcessPoolExecutor(parallel, mp_context=ctx, initializer=_init_worker,
                             initargs=(points,)) as pool:
        results = list(pool.map(_worker, chunks, [fault] * nchunks))
    best = None
    for sol in results:
        if _better(sol, best):
            best = sol
    return best
