"""Slow, obviously-correct reference solvers used as ground truth in tests.

Completeness of the outer-rectangle enumeration: take any empty annulus whose
eight edges each pass through an input point. Its outer edges already sit on
input coordinates, so it is one of the enumerated tuples (top, bottom, left,
right). For that outer rectangle the inner rectangle must contain every
strictly interior point, and the interior bounding box is the widest such
choice. Hence the enumeration, with the bounding-box inner rectangle, finds
an annulus at least as wide as any valid one.

Nothing here touches the strip sweep, so agreement between the two is a
genuine differential check.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .degenerate import PointAnnulus
from .evaluate import inner_from_outer
from .geometry import Annulus, AxisRect, Point, chebyshev, mirror_points
from .sweep import Origin, Solution, Strip


def _supported(ann: Annulus) -> bool:
    return all(pid is not None for pid in ann.outer_support)


def _positive(ann: Annulus) -> bool:
    w = ann.widths
    return w.top > 0 and w.bottom > 0 and w.left > 0 and w.right > 0


def brute_max_annulus(points: Sequence[Point]) -> Optional[Solution]:
    """Try every outer rectangle spanned by input coordinates; O(n^5)."""
    xs = sorted({p.x for p in points})
    ys = sorted({p.y for p in points})
    best: Optional[Annulus] = None
    for bi, bottom in enumerate(ys):
        for top in ys[bi + 1:]:
            band = [p for p in points if bottom <= p.y <= top]
            if len(band) < 4:
                continue
            for li, left in enumerate(xs):
                for right in xs[li + 1:]:
                    ann = inner_from_outer(AxisRect(left, right, bottom, top), band)
                    if ann is None or not _supported(ann) or not _positive(ann):
                        continue
                    if best is None or ann.width > best.width:
                        best = ann
    if best is None:
        return None
    return Solution(best, best.width, Origin("brute"))


def brute_strip_enumeration(strip: Strip, points: Sequence[Point]) -> list[Annulus]:
    """Every annulus with top edge through ``a`` and bottom edge through ``b``.

    Works from the raw input (mirrored to the strip's frame when needed) and
    only uses ``strip.a`` and ``strip.b``. Results are in the strip's frame.
    """
    frame = mirror_points(points) if strip.mirrored else list(points)
    a, b = strip.a, strip.b
    band = [p for p in frame if b.y <= p.y <= a.y]
    lefts = sorted(p.x for p in band if p.x <= min(a.x, b.x))
    rights = sorted(p.x for p in band if p.x >= max(a.x, b.x))
    found = []
    for left in lefts:
        for right in rights:
            ann = inner_from_outer(AxisRect(left, right, b.y, a.y), band)
            if ann is None or not _supported(ann) or not _positive(ann):
                continue
            if ann.outer_support.top != a.id or ann.outer_support.bottom != b.id:
                continue
            found.append(ann)
    return found


def brute_point_inner(points: Sequence[Point]) -> Optional[Solution]:
    """Pairwise scan for the widest annulus whose inner rectangle is a single point."""
    if len(points) < 2:
        return None
    best_p, best_w = None, None
    for p in points:
        w = min(chebyshev(p, q) for q in points if q.id != p.id)
        if best_w is None or w > best_w or (w == best_w and p.id < best_p.id):
            best_p, best_w = p, w
    return Solution(PointAnnulus.centered(best_p, best_w), best_w, Origin("brute"))
