"""Shared fixtures: a handful of domains the whole suite reuses."""

import math

import pytest

from escobar.geometry import (
    Arc,
    Segment,
    make_disk,
    make_domain,
    make_polygon,
    make_regular_polygon,
)


@pytest.fixture
def unit_disk():
    return make_disk()


@pytest.fixture
def square():
    # regular 4-gon with circumradius 1, side sqrt(2)
    return make_regular_polygon(4)


@pytest.fixture
def hexagon():
    return make_regular_polygon(6)


@pytest.fixture
def lshape():
    # nonconvex hexagon with one reflex corner at (1, 1)
    return make_polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])


@pytest.fixture
def half_disk():
    # one straight edge plus the upper unit semicircle; two right-angle corners
    return make_domain(
        [Segment((-1.0, 0.0), (1.0, 0.0)), Arc((0.0, 0.0), 1.0, 0.0, math.pi)]
    )


def rectangle(w: float, h: float):
    return make_polygon(
        [(-w / 2, -h / 2), (w / 2, -h / 2), (w / 2, h / 2), (-w / 2, h / 2)]
    )
