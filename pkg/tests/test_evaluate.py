import random

import pytest

from rectannulus.evaluate import InvalidUpdateError, absorb_point, inner_from_outer
from rectannulus.geometry import (AxisRect, Point, Support, annulus_widths, as_points,
                                  edge_support_holds, is_empty_annulus, strictly_inside)

from conftest import random_points


def test_inner_is_interior_bbox():
    pts = as_points([(4, 4), (6, 7), (12, 3), (0, 10)])
    ann = inner_from_outer(AxisRect(0, 10, 0, 10), pts)
    assert ann.inner == AxisRect(4, 6, 4, 7)
    assert ann.width == 3


def test_single_interior_point_gives_none():
    assert inner_from_outer(AxisRect(0, 10, 0, 10), as_points([(5, 5), (20, 1)])) is None


def test_golden_outer(golden4):
    ann = inner_from_outer(AxisRect(2, 8, 0, 10), golden4)
    assert ann.inner == AxisRect(4, 5, 3, 6)
    assert ann.width == 2
    assert is_empty_annulus(ann, golden4)
    assert ann.outer_support == Support(top=0, right=0, bottom=1, left=1)
    assert ann.inner_support == Support(top=2, right=3, bottom=3, left=2)


def test_unsupported_edges_are_none():
    ann = inner_from_outer(AxisRect(0, 10, 0, 10), as_points([(4, 4), (6, 7)]))
    assert ann.outer_support == Support(None, None, None, None)


def test_maximality_against_enumerated_inner_rects():
    rng = random.Random(5)
    checked = 0
    while checked < 60:
        pts = random_points(rng, 9, 30)
        xs = sorted(p.x for p in pts)
        ys = sorted(p.y for p in pts)
        outer = AxisRect(xs[0], xs[-1], ys[0], ys[-1])
        ann = inner_from_outer(outer, pts)
        if ann is None:
            continue
        interior = [p for p in pts if strictly_inside(p, outer)]
        cands_x = sorted({outer.xmin, outer.xmax, *xs})
        cands_y = sorted({outer.ymin, outer.ymax, *ys})
        for x0 in cands_x:
            for x1 in cands_x:
                for y0 in cands_y:
                    for y1 in cands_y:
                        if x0 >= x1 or y0 >= y1:
                            continue
                        r = AxisRect(x0, x1, y0, y1)
                        if outer.contains_rect(r) and all(r.contains(p) for p in interior):
                            assert annulus_widths(outer, r).width <= ann.width
        checked += 1


def test_absorb_expands_bbox():
    # (2, 0) sits on the bottom edge of [1, 8] x [0, 10]; dropping that edge absorbs it
    pts = as_points([(8, 10), (2, 0), (4, 6), (5, 3), (1, 5), (3, -2)])
    ann = inner_from_outer(AxisRect(1, 8, 0, 10), pts)
    assert ann.inner == AxisRect(4, 5, 3, 6)
    new = absorb_point(ann, AxisRect(1, 8, -2, 10), pts[1], pts[5])
    assert new.inner == AxisRect(2, 5, 0, 6)
    assert new.inner_support.left == 1 and new.inner_support.bottom == 1
    assert new.outer_support.bottom == 5
    assert new == inner_from_outer(AxisRect(1, 8, -2, 10), pts)


def test_absorb_within_inner_span_changes_one_side():
    pts = as_points([(4, 4), (6, 9), (0, 5), (-2, 8), (5, 0), (7, 10), (10, 2)])
    ann = inner_from_outer(AxisRect(0, 10, 0, 10), pts)
    new = absorb_point(ann, AxisRect(-2, 10, 0, 10), pts[2], pts[3])
    assert (new.inner.ymin, new.inner.ymax, new.inner.xmax) == (4, 9, 6)
    assert new.inner.xmin == 0
    assert (new.widths.top, new.widths.bottom) == (ann.widths.top, ann.widths.bottom)


def test_corner_vacated_without_absorption():
    pts = as_points([(8, 10), (2, 0), (4, 6), (5, 3), (1, 5)])
    ann = inner_from_outer(AxisRect(2, 8, 0, 10), pts)
    new = absorb_point(ann, AxisRect(1, 8, 0, 10), None, pts[4])
    assert new.inner == ann.inner
    assert new.widths.left == 3
    assert new == inner_from_outer(AxisRect(1, 8, 0, 10), pts)


@pytest.mark.parametrize("new_outer", [
    AxisRect(-2, 12, 0, 10),   # two edges moved
    AxisRect(1, 10, 0, 10),    # moved inward
])
def test_absorb_rejects_bad_moves(new_outer):
    pts = as_points([(4, 4), (6, 7), (0, 5)])
    ann = inner_from_outer(AxisRect(0, 10, 0, 10), pts)
    with pytest.raises(InvalidUpdateError):
        absorb_point(ann, new_outer, pts[2])


def test_absorb_rejects_point_not_on_old_edge():
    pts = as_points([(4, 4), (6, 7), (0, 5)])
    ann = inner_from_outer(AxisRect(0, 10, 0, 10), pts)
    with pytest.raises(InvalidUpdateError):
        absorb_point(ann, AxisRect(-2, 10, 0, 10), pts[1])


def random_supported_annulus(rng, n=10, coord_max=40):
    """A random instance plus an annulus whose four outer edges are supported."""
    while True:
        pts = random_points(rng, n, coord_max)
        xs = sorted(rng.sample([p.x for p in pts], 2))
        ys = sorted(rng.sample([p.y for p in pts], 2))
        ann = inner_from_outer(AxisRect(xs[0], xs[1], ys[0], ys[1]), pts)
        if ann is not None and None not in ann.outer_support:
            return pts, ann


def random_edge_move(rng, pts, ann):
    """Move one outer edge out to the next point it meets; None if none exists."""
    o = ann.outer
    by_id = {p.id: p for p in pts}
    edge = rng.choice(["left", "right", "bottom", "top"])
    if edge in ("left", "right"):
        band = [p for p in pts if o.ymin <= p.y <= o.ymax]
        beyond = [p for p in band if (p.x < o.xmin if edge == "left" else p.x > o.xmax)]
        if not beyond:
            return None
        nxt = max(beyond, key=lambda p: p.x) if edge == "left" else min(beyond, key=lambda p: p.x)
        new_outer = (AxisRect(nxt.x, o.xmax, o.ymin, o.ymax) if edge == "left"
                     else AxisRect(o.xmin, nxt.x, o.ymin, o.ymax))
    else:
        band = [p for p in pts if o.xmin <= p.x <= o.xmax]
        beyond = [p for p in band if (p.y < o.ymin if edge == "bottom" else p.y > o.ymax)]
        if not beyond:
            return None
        nxt = max(beyond, key=lambda p: p.y) if edge == "bottom" else min(beyond, key=lambda p: p.y)
        new_outer = (AxisRect(o.xmin, o.xmax, nxt.y, o.ymax) if edge == "bottom"
                     else AxisRect(o.xmin, o.xmax, o.ymin, nxt.y))
    vacated = by_id[getattr(ann.outer_support, edge)]
    absorbed = vacated if strictly_inside(vacated, new_outer) else None
    return new_outer, absorbed, nxt


def test_absorb_matches_recomputation_small():
    rng = random.Random(17)
    done = 0
    while done < 200:
        pts, ann = random_supported_annulus(rng)
        move = random_edge_move(rng, pts, ann)
        if move is None:
            continue
        new_outer, absorbed, nxt = move
        assert absorb_point(ann, new_outer, absorbed, nxt) == inner_from_outer(new_outer, pts)
        done += 1


def test_inner_from_outer_results_are_valid():
    rng = random.Random(2)
    for _ in range(100):
        pts, ann = random_supported_annulus(rng)
        assert is_empty_annulus(ann, pts)
        assert edge_support_holds(ann, pts)
