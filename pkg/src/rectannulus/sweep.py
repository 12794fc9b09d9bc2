"""Maximum-width empty annulus inside one horizontal strip.

A strip is fixed by two points ``a`` (on the outer top edge) and ``b`` (on the
outer bottom edge). Working in a frame where ``x(a) > x(b)``, the outer left
edge can only sit on a point at or left of ``b`` and the outer right edge on a
point at or right of ``a``. Walking outward from ``b`` gives the left event
sequence ``b, q, q', q1, ...``; walking outward from ``a`` gives the right
event sequence ``a, p, p', p1, ...``.

With the left edge at left event ``i`` and the right edge at right event
``j``, the left gap depends only on ``i``, the right gap only on ``j``, and
the top/bottom gaps never grow as either edge moves out. So from any start
``(i, j)`` the sweep repeatedly discards either the whole quadrant (top or
bottom gap is the minimum), the row ``i`` (left gap is the minimum) or the
column ``j`` (right gap is the minimum), visiting at most ``|L| + |R|`` states.
The start configurations depend on how many points lie strictly between
``a`` and ``b`` horizontally, and together they cover every start from
which a non-degenerate inner rectangle exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from operator import attrgetter
from typing import NamedTuple, Optional, Sequence

from .evaluate import absorb_point, annulus_from_interior
from .geometry import Annulus, AxisRect, Point, Support, WidthProfile

VERTICAL, LEFT, RIGHT = "vertical", "left", "right"


@dataclass(frozen=True)
class Origin:
    kind: str  # "sweep", "brute" or "degenerate"
    strip: Optional[tuple[int, int]] = None
    case: Optional[str] = None
    config: Optional[str] = None


@dataclass(frozen=True)
class Solution:
    annulus: object  # Annulus, or PointAnnulus for the point-inner variant
    width: object
    origin: Origin


class SortedPoints:
    """The input ordered once by x (also mirrored) and by descending y."""

    def __init__(self, points: Sequence[Point]):
        self.points = list(points)
        self.by_x = sorted(self.points, key=attrgetter("x"))
        self.mirror = {p.id: Point(p.id, -p.x, p.y) for p in self.points}
        self.by_x_mirrored = [self.mirror[p.id] for p in reversed(self.by_x)]
        self.by_y_desc = sorted(self.points, key=attrgetter("y"), reverse=True)


class Strip(NamedTuple):
    a: Point
    b: Point
    Q: tuple[Point, ...]
    L: tuple[Point, ...]
    M: tuple[Point, ...]
    R: tuple[Point, ...]
    mirrored: bool

    @property
    def l(self) -> Point:  # noqa: E743
        return self.Q[0]

    @property
    def r(self) -> Point:
        return self.Q[-1]

    @property
    def left_events(self) -> tuple[Point, ...]:
        """Left edge positions, starting at ``b`` and moving outward."""
        return self.L[::-1]

    @property
    def right_events(self) -> tuple[Point, ...]:
        """Right edge positions, starting at ``a`` and moving outward."""
        return self.R

    def left_of_b(self, k: int) -> Optional[Point]:
        """The k-th point of the strip left of ``b`` (k=1 is q, 2 is q', 3 is q1)."""
        return self.L[-1 - k] if k < len(self.L) else None

    def right_of_a(self, k: int) -> Optional[Point]:
        """The k-th point of the strip right of ``a`` (k=1 is p, 2 is p', 3 is p1)."""
        return self.R[k] if k < len(self.R) else None

    @property
    def case(self) -> str:
        m = len(self.M)
        return "I" if m >= 2 else ("III" if m == 1 else "II")


def build_strip(sp: SortedPoints, a: Point, b: Point) -> Strip:
    if not a.y > b.y:
        raise ValueError(f"strip needs y(a) > y(b), got a={a}, b={b}")
    mirrored = a.x < b.x
    if mirrored:
        order, a, b = sp.by_x_mirrored, sp.mirror[a.id], sp.mirror[b.id]
    else:
        order = sp.by_x
    ya, yb = a.y, b.y
    Q = tuple([p for p in order if yb <= p.y <= ya])
    ib, ia = Q.index(b), Q.index(a)
    return Strip(a, b, Q, Q[:ib + 1], Q[ib + 1:ia], Q[ia:], mirrored)


class StartConfig(NamedTuple):
    label: str
    annulus: Annulus
    left_index: int
    right_index: int


def configuration(strip: Strip, i: int, j: int) -> Optional[Annulus]:
    """The annulus with outer edges at left event ``i`` and right event ``j``."""
    left_ev, right_ev = strip.left_events, strip.right_events
    if i >= len(left_ev) or j >= len(right_ev):
        return None
    s, t = left_ev[i], right_ev[j]
    # b and a sit on the bottom/top edges, so only events beyond them are interior
    interior = [*strip.M, *left_ev[1:i], *right_ev[1:j]]
    if len(interior) < 2:
        return None
    outer = AxisRect(s.x, t.x, strip.b.y, strip.a.y)
    return annulus_from_interior(outer, interior, Support(strip.a.id, t.id, strip.b.id, s.id))


_STARTS = {
    "I": (("A", 0, 0),),
    "II": (("A1", 3, 0), ("A2", 0, 3), ("A3", 2, 2)),
    "III": (("A1", 2, 0), ("A2", 0, 2)),
}


def initial_configurations(strip: Strip) -> list[StartConfig]:
    """Start annuli for the strip's case; infeasible ones are left out.

    Case I (two or more points between a and b): outer corners at b and a.
    Case III (one point z between): inner spanned by {q, z} or {p, z}.
    Case II (none between): inner spanned by {q, q'}, {p, p'} or {p, q}.
    """
    configs = []
    for label, i, j in _STARTS[strip.case]:
        ann = configuration(strip, i, j)
        if ann is not None:
            configs.append(StartConfig(label, ann, i, j))
    return configs


def determining_side(w: WidthProfile) -> str:
    """Which gap sets the width; top/bottom win ties, then left beats right."""
    if min(w.top, w.bottom) <= min(w.left, w.right):
        return VERTICAL
    return LEFT if w.left <= w.right else RIGHT


@dataclass
class SweepState:
    annulus: Annulus
    left_index: int
    right_index: int
    best: Annulus
    best_width: object
    steps: int = 0
    visited: Optional[list[Annulus]] = field(default=None, repr=False)


_SWAPPED = {VERTICAL: VERTICAL, LEFT: RIGHT, RIGHT: LEFT}


def sweep_one(config: StartConfig, strip: Strip, *, trace: bool = False,
              fault: Optional[str] = None) -> SweepState:
    """Run the edge-shifting loop from one start configuration.

    ``fault="swap-shift"`` moves the edge opposite to the determining side;
    it exists only so the verification harness can prove it catches bugs.
    """
    left_ev, right_ev = strip.left_events, strip.right_events
    last_left, last_right = len(left_ev) - 1, len(right_ev) - 1
    ann = config.annulus
    st = SweepState(ann, config.left_index, config.right_index, ann, ann.width,
                    visited=[ann] if trace else None)
    while True:
        side = determining_side(ann.widths)
        if fault == "swap-shift":
            side = _SWAPPED[side]
        if side == VERTICAL:
            break
        if side == LEFT:
            i = st.left_index
            if i == last_left:
                break
            new = left_ev[i + 1]
            o = ann.outer
            ann = absorb_point(ann, AxisRect(new.x, o.xmax, o.ymin, o.ymax),
                               left_ev[i] if i > 0 else None, new, check=False)
            st.left_index = i + 1
        else:
            j = st.right_index
            if j == last_right:
                break
            new = right_ev[j + 1]
            o = ann.outer
            ann = absorb_point(ann, AxisRect(o.xmin, new.x, o.ymin, o.ymax),
                               right_ev[j] if j > 0 else None, new, check=False)
            st.right_index = j + 1
        st.annulus = ann
        st.steps += 1
        if trace:
            st.visited.append(ann)
        if ann.width > st.best_width:
            st.best, st.best_width = ann, ann.width
    return st


def best_in_strip(strip: Strip, *, fault: Optional[str] = None
                  ) -> tuple[Optional[SweepState], Optional[str]]:
    """Best sweep over the strip's start configurations, in the strip's frame."""
    best: Optional[SweepState] = None
    best_label = None
    for config in initial_configurations(strip):
        st = sweep_one(config, strip, fault=fault)
        if best is None or st.best_width > best.best_width:
            best, best_label = st, config.label
    return best, best_label


def strip_solution(strip: Strip, state: SweepState, label: str) -> Solution:
    ann = state.best.mirrored() if strip.mirrored else state.best
    origin = Origin("sweep", (strip.a.id, strip.b.id), strip.case, label)
    return Solution(ann, state.best_width, origin)


def sweep_strip(strip: Strip, *, fault: Optional[str] = None) -> Optional[Solution]:
    """Widest annulus of the strip, reported in the original (unmirrored) frame."""
    state, label = best_in_strip(strip, fault=fault)
    return None if state is None else strip_solution(strip, state, label)
