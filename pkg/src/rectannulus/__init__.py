"""Maximum-width axis-parallel empty rectangular annulus of a planar point set."""

from .degenerate import PointAnnulus, chebyshev_all_nearest_neighbors, solve_point_inner
from .evaluate import InvalidUpdateError, absorb_point, inner_from_outer
from .geometry import (Annulus, AxisRect, GeneralPositionError, GeometryError, Point, Support,
                       WidthProfile, annulus_widths, as_points, is_empty_annulus,
                       strictly_inside, validate_general_position)
from .oracle import brute_max_annulus, brute_point_inner, brute_strip_enumeration
from .solver import solve_max_annulus
from .sweep import (Origin, Solution, SortedPoints, Strip, build_strip, initial_configurations,
                    sweep_one, sweep_strip)

__all__ = [
    "Annulus", "AxisRect", "GeneralPositionError", "GeometryError", "InvalidUpdateError",
    "Origin", "Point", "PointAnnulus", "Solution", "SortedPoints", "Strip", "Support",
    "WidthProfile", "absorb_point", "annulus_widths", "as_points", "brute_max_annulus",
    "brute_point_inner", "brute_strip_enumeration", "build_strip",
    "chebyshev_all_nearest_neighbors", "inner_from_outer", "initial_configurations",
    "is_empty_annulus", "solve_max_annulus", "solve_point_inner", "strictly_inside",
    "sweep_one", "sweep_strip", "validate_general_position",
]
