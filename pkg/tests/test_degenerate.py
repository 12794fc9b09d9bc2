import random
from fractions import Fraction

import pytest

from rectannulus.degenerate import chebyshev_all_nearest_neighbors, solve_point_inner
from rectannulus.geometry import Point, as_points, chebyshev, strictly_inside
from rectannulus.oracle import brute_point_inner

from conftest import random_points


def pairwise(points):
    return [min(chebyshev(p, q) for q in points if q.id != p.id) for p in points]


def test_golden(golden3):
    sol = solve_point_inner(golden3)
    assert sol.width == 5
    assert sol.annulus.center.id == 0


def test_two_points():
    sol = solve_point_inner(as_points([(0, 0), (3, 1)]))
    assert sol.width == 3 and sol.annulus.center.id == 0


def test_fewer_than_two():
    assert solve_point_inner(as_points([(1, 2)])) is None


@pytest.mark.parametrize("pts,expected", [
    ([(0, 0), (3, 1)], [3, 3]),
    ([(0, 0), (1, 4), (5, 5)], [4, 4, 4]),
])
def test_nearest_neighbours_examples(pts, expected):
    assert chebyshev_all_nearest_neighbors(as_points(pts)) == expected


def test_nearest_neighbours_int_results_are_ints():
    out = chebyshev_all_nearest_neighbors(as_points([(0, 0), (3, 1)]))
    assert all(type(d) is int for d in out)


def test_fraction_coordinates_take_exact_path():
    pts = [Point(0, Fraction(1, 3), 0), Point(1, Fraction(2, 3), 5), Point(2, 7, Fraction(1, 7))]
    assert chebyshev_all_nearest_neighbors(pts) == pairwise(pts)


def test_float_coordinates_match_pairwise():
    rng = random.Random(3)
    pts = as_points((rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(300))
    assert chebyshev_all_nearest_neighbors(pts) == pairwise(pts)


def test_outer_square_is_empty_and_scaled():
    rng = random.Random(9)
    for _ in range(20):
        pts = random_points(rng, rng.randint(2, 60))
        sol = solve_point_inner(pts)
        c = sol.annulus.center
        assert not any(strictly_inside(p, sol.annulus.outer) for p in pts if p.id != c.id)
        scaled = solve_point_inner([Point(p.id, 3 * p.x, 3 * p.y) for p in pts])
        assert scaled.width == 3 * sol.width
        assert scaled.annulus.center.id == c.id


def test_matches_oracle_small():
    rng = random.Random(10)
    for _ in range(30):
        pts = random_points(rng, rng.randint(2, 40))
        assert solve_point_inner(pts).width == brute_point_inner(pts).width
