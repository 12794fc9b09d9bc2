"""Widest empty annulus whose inner rectangle shrinks to one input point.

Centred on ``p``, the outer square of half-side ``w`` stays empty exactly when
no other point is closer than ``w`` in the Chebyshev (L-infinity) metric, and
an axis-parallel outer rectangle can never beat that square. The answer is
therefore the point whose Chebyshev nearest neighbour is farthest away.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Real
from typing import Optional, Sequence

import numpy as np
from scipy.spatial import cKDTree

from .geometry import AxisRect, Point, chebyshev, require_general_position
from .sweep import Origin, Solution

# float64 holds every integer below this exactly
_EXACT_INT = 2**53


@dataclass(frozen=True)
class PointAnnulus:
    outer: AxisRect
    center: Point
    width: Real

    @classmethod
    def centered(cls, p: Point, w: Real) -> "PointAnnulus":
        return cls(AxisRect(p.x - w, p.x + w, p.y - w, p.y + w), p, w)


def _float_exact(points: Sequence[Point]) -> bool:
    for p in points:
        for v in (p.x, p.y):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                return False
            if isinstance(v, int) and abs(v) >= _EXACT_INT:
                return False
    return True


def chebyshev_all_nearest_neighbors(points: Sequence[Point], candidates: int = 4) -> list:
    """Chebyshev distance from each point to its nearest other point.

    A k-d tree under the L-infinity norm proposes ``candidates`` neighbours
    per point in O(n log n); the distance is then recomputed from the raw
    coordinates so the result is bit-identical to a pairwise scan.
    """
    n = len(points)
    if n < 2:
        raise ValueError("need at least two points")
    xy = np.array([(float(p.x), float(p.y)) for p in points])
    k = min(n, candidates)
    _, idx = cKDTree(xy).query(xy, k=k, p=np.inf)
    self_ = np.arange(n)[:, None]

    if _float_exact(points):
        dist = np.maximum(np.abs(xy[idx, 0] - xy[self_, 0]), np.abs(xy[idx, 1] - xy[self_, 1]))
        dist[idx == self_] = np.inf
        nearest = dist.min(axis=1)
        if all(isinstance(v, int) for p in points for v in (p.x, p.y)):
            return [int(d) for d in nearest]
        return nearest.tolist()

    out = []
    for i, row in enumerate(idx):
        out.append(min(chebyshev(points[i], points[j]) for j in row if j != i))
    return out


def solve_point_inner(points: Sequence[Point]) -> Optional[Solution]:
    """Point-inner annulus of maximum width; ties go to the smallest point id."""
    points = list(points)
    if len(points) < 2:
        return None
    require_general_position(points)
    nearest = chebyshev_all_nearest_neighbors(points)
    best = max(range(len(points)), key=lambda i: (nearest[i], -points[i].id))
    p, w = points[best], nearest[best]
    return Solution(PointAnnulus.centered(p, w), w, Origin("degenerate"))
