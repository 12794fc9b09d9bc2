import random

import pytest

from rectannulus.geometry import as_points


def random_points(rng: random.Random, n: int, coord_max: int = None):
    coord_max = coord_max or 10 * n
    return as_points(zip(rng.sample(range(coord_max + 1), n), rng.sample(range(coord_max + 1), n)))


@pytest.fixture
def golden4():
    return as_points([(8, 10), (2, 0), (4, 6), (5, 3)])


@pytest.fixture
def golden3():
    return as_points([(0, 0), (5, 0.5), (10, 1)])
