"""Exact geometric primitives for axis-parallel rectangular annuli.

Coordinates are used as given (ints, floats or Fractions) and never compared
with an epsilon. Every derived quantity is a difference of two input
coordinates, so integer inputs give exact widths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real
from typing import Iterable, NamedTuple, Optional, Sequence


class GeometryError(ValueError):
    """Raised when a rectangle or annulus is geometrically invalid."""


class GeneralPositionError(ValueError):
    """Raised when two input points share an x- or a y-coordinate."""

    def __init__(self, violations: Sequence["Violation"]):
        self.violations = list(violations)
        first = self.violations[0]
        more = f" (+{len(self.violations) - 1} more)" if len(self.violations) > 1 else ""
        super().__init__(
            f"points {first.first} and {first.second} share {first.axis}={first.value}{more}"
        )


class Point(NamedTuple):
    id: int
    x: Real
    y: Real


class Violation(NamedTuple):
    axis: str
    first: int
    second: int
    value: Real


class Support(NamedTuple):
    """Ids of the points lying on the top, right, bottom and left edges."""

    top: Optional[int]
    right: Optional[int]
    bottom: Optional[int]
    left: Optional[int]

    def mirrored(self) -> "Support":
        return Support(self.top, self.left, self.bottom, self.right)


@dataclass(frozen=True, slots=True)
class AxisRect:
    xmin: Real
    xmax: Real
    ymin: Real
    ymax: Real

    def __post_init__(self):
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise GeometryError(f"rectangle has zero or negative area: {self}")

    @classmethod
    def bounding(cls, points: Iterable[Point]) -> "AxisRect":
        pts = list(points)
        return cls(
            min(p.x for p in pts), max(p.x for p in pts),
            min(p.y for p in pts), max(p.y for p in pts),
        )

    def contains_rect(self, other: "AxisRect") -> bool:
        return (
            self.xmin <= other.xmin and other.xmax <= self.xmax
            and self.ymin <= other.ymin and other.ymax <= self.ymax
        )

    def contains(self, p: Point) -> bool:
        """Closed containment: boundary points count as contained."""
        return self.xmin <= p.x <= self.xmax and self.ymin <= p.y <= self.ymax

    def on_edge(self, p: Point, edge: str) -> bool:
        """True if ``p`` lies on the closed segment of the named edge."""
        if edge == "top":
            return p.y == self.ymax and self.xmin <= p.x <= self.xmax
        if edge == "bottom":
            return p.y == self.ymin and self.xmin <= p.x <= self.xmax
        if edge == "left":
            return p.x == self.xmin and self.ymin <= p.y <= self.ymax
        if edge == "right":
            return p.x == self.xmax and self.ymin <= p.y <= self.ymax
        raise ValueError(f"unknown edge {edge!r}")

    def mirrored(self) -> "AxisRect":
        return AxisRect(-self.xmax, -self.xmin, self.ymin, self.ymax)

    def translated(self, dx: Real, dy: Real) -> "AxisRect":
        return AxisRect(self.xmin + dx, self.xmax + dx, self.ymin + dy, self.ymax + dy)


EDGES = ("top", "right", "bottom", "left")


@dataclass(frozen=True, slots=True)
class WidthProfile:
    top: Real
    bottom: Real
    left: Real
    right: Real

    @property
    def width(self) -> Real:
        return min(self.top, self.bottom, self.left, self.right)

    def mirrored(self) -> "WidthProfile":
        return WidthProfile(self.top, self.bottom, self.right, self.left)


@dataclass(frozen=True, slots=True)
class Annulus:
    outer: AxisRect
    inner: AxisRect
    widths: WidthProfile
    inner_support: Support
    outer_support: Support

    @classmethod
    def build(cls, outer: AxisRect, inner: AxisRect,
              inner_support: Support, outer_support: Support) -> "Annulus":
        return cls(outer, inner, annulus_widths(outer, inner), inner_support, outer_support)

    @property
    def width(self) -> Real:
        return self.widths.width

    def mirrored(self) -> "Annulus":
        """Reflect through the y-axis (x -> -x); left and right swap roles."""
        return Annulus(
            self.outer.mirrored(), self.inner.mirrored(), self.widths.mirrored(),
            self.inner_support.mirrored(), self.outer_support.mirrored(),
        )


def validate_general_position(points: Sequence[Point]) -> list[Violation]:
    """Return every adjacent pair sharing a coordinate; an empty list means ok.

    Non-finite coordinates are reported with ``axis`` set to ``"x!"`` or ``"y!"``
    and the same id in both slots.
    """
    violations: list[Violation] = []
    for axis in ("x", "y"):
        for p in points:
            v = getattr(p, axis)
            if isinstance(v, float) and not math.isfinite(v):
                violations.append(Violation(axis + "!", p.id, p.id, v))
        ordered = sorted(points, key=lambda p: (getattr(p, axis), p.id))
        for u, v in zip(ordered, ordered[1:]):
            if getattr(u, axis) == getattr(v, axis):
                violations.append(Violation(axis, u.id, v.id, getattr(u, axis)))
    return violations


def require_general_position(points: Sequence[Point]) -> None:
    violations = validate_general_position(points)
    if violations:
        raise GeneralPositionError(violations)


def strictly_inside(p: Point, r: AxisRect) -> bool:
    return r.xmin < p.x < r.xmax and r.ymin < p.y < r.ymax


def annulus_widths(outer: AxisRect, inner: AxisRect) -> WidthProfile:
    if not outer.contains_rect(inner):
        raise GeometryError(f"inner {inner} is not contained in outer {outer}")
    return WidthProfile(
        top=outer.ymax - inner.ymax,
        bottom=inner.ymin - outer.ymin,
        left=inner.xmin - outer.xmin,
        right=outer.xmax - inner.xmax,
    )


def is_empty_annulus(annulus: Annulus, points: Iterable[Point]) -> bool:
    """No point lies in the open region between the two rectangles."""
    outer, inner = annulus.outer, annulus.inner
    return all(inner.contains(p) for p in points if strictly_inside(p, outer))


def edge_support_holds(annulus: Annulus, points: Sequence[Point]) -> bool:
    """Every one of the eight edges has a recorded point lying on it."""
    by_id = {p.id: p for p in points}
    for rect, support in ((annulus.outer, annulus.outer_support),
                          (annulus.inner, annulus.inner_support)):
        for edge, pid in zip(EDGES, support):
            if pid is None or pid not in by_id or not rect.on_edge(by_id[pid], edge):
                return False
    return True


def mirror_points(points: Iterable[Point]) -> list[Point]:
    return [Point(p.id, -p.x, p.y) for p in points]


def translate_points(points: Iterable[Point], dx: Real, dy: Real) -> list[Point]:
    return [Point(p.id, p.x + dx, p.y + dy) for p in points]


def as_points(coords: Iterable[Sequence[Real]]) -> list[Point]:
    """Number (x, y) pairs by their position in the input."""
    return [Point(i, x, y) for i, (x, y) in enumerate(coords)]


def chebyshev(p: Point, q: Point) -> Real:
    return max(abs(p.x - q.x), abs(p.y - q.y))
