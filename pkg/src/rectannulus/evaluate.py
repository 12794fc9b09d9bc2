"""Best empty annulus for a fixed outer rectangle, and its incremental update."""

from __future__ import annotations

from operator import attrgetter
from typing import Iterable, Optional, Sequence

from .geometry import EDGES, Annulus, AxisRect, Point, Support, strictly_inside

_x = attrgetter("x")
_y = attrgetter("y")


class InvalidUpdateError(ValueError):
    """Raised when an edge move does not satisfy the absorb preconditions."""


def annulus_from_interior(outer: AxisRect, interior: Sequence[Point],
                          outer_support: Support) -> Annulus:
    """Annulus whose inner rectangle is the bounding box of ``interior``.

    ``interior`` must be exactly the points strictly inside ``outer``; with
    two or more points in general position the box has non-zero area.
    """
    top = max(interior, key=_y)
    bottom = min(interior, key=_y)
    left = min(interior, key=_x)
    right = max(interior, key=_x)
    inner = AxisRect(left.x, right.x, bottom.y, top.y)
    return Annulus.build(outer, inner, Support(top.id, right.id, bottom.id, left.id), outer_support)


def inner_from_outer(outer: AxisRect, points: Iterable[Point]) -> Optional[Annulus]:
    """The maximum-width empty annulus with the given outer rectangle.

    The inner rectangle must contain every point strictly inside ``outer``
    and shrinking it can only widen the gaps, so the bounding box of those
    points is optimal. Returns None when fewer than two points are strictly
    inside (no inner rectangle of non-zero area exists). Outer support ids
    are the points found on each closed outer edge, or None for an edge no
    point touches.
    """
    interior = []
    found = dict.fromkeys(EDGES)
    for p in points:
        if strictly_inside(p, outer):
            interior.append(p)
        elif outer.contains(p):
            for edge in EDGES:
                if found[edge] is None and outer.on_edge(p, edge):
                    found[edge] = p.id
    if len(interior) < 2:
        return None
    return annulus_from_interior(outer, interior, Support(**found))


def absorb_point(annulus: Annulus, new_outer: AxisRect, absorbed: Optional[Point],
                 support: Optional[Point] = None, *, check: bool = True) -> Annulus:
    """Update ``annulus`` after one outer edge moves outward, in O(1).

    ``absorbed`` is the point that sat on the old edge and is now strictly
    inside ``new_outer``; pass None when the vacated point stays on another
    edge (a corner point). ``support`` is the point on the moved edge.
    ``check=False`` skips the precondition checks for callers that already
    guarantee them.
    """
    old = annulus.outer
    if new_outer.xmin != old.xmin:
        edge = "left"
    elif new_outer.xmax != old.xmax:
        edge = "right"
    elif new_outer.ymin != old.ymin:
        edge = "bottom"
    else:
        edge = "top"
    if check:
        _check_absorb(old, new_outer, absorbed)

    inner, isup = annulus.inner, annulus.inner_support
    if absorbed is not None:
        x, y = absorbed.x, absorbed.y
        top, right, bottom, left = isup
        xmin, xmax, ymin, ymax = inner.xmin, inner.xmax, inner.ymin, inner.ymax
        if x < xmin:
            xmin, left = x, absorbed.id
        elif x > xmax:
            xmax, right = x, absorbed.id
        if y < ymin:
            ymin, bottom = y, absorbed.id
        elif y > ymax:
            ymax, top = y, absorbed.id
        inner, isup = AxisRect(xmin, xmax, ymin, ymax), Support(top, right, bottom, left)

    osup = annulus.outer_support._replace(**{edge: None if support is None else support.id})
    return Annulus.build(new_outer, inner, isup, osup)


def _check_absorb(old: AxisRect, new_outer: AxisRect, absorbed: Optional[Point]) -> None:
    moved = [
        edge for edge, was, now in (
            ("left", old.xmin, new_outer.xmin), ("right", old.xmax, new_outer.xmax),
            ("bottom", old.ymin, new_outer.ymin), ("top", old.ymax, new_outer.ymax),
        ) if was != now
    ]
    if len(moved) != 1:
        raise InvalidUpdateError(f"expected exactly one moved edge, got {moved}")
    edge = moved[0]
    if not new_outer.contains_rect(old):
        raise InvalidUpdateError(f"{edge} edge moved inward")
    if absorbed is not None and not (old.on_edge(absorbed, edge)
                                     and strictly_inside(absorbed, new_outer)):
        raise InvalidUpdateError(f"point {absorbed.id} was not on the vacated {edge} edge")
