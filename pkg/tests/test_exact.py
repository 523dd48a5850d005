"""Closed-form Escobar constants for the disk and regular polygons."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from escobar.errors import InvalidParameterError, NotApplicableError
from escobar.exact import (
    Bound,
    BoundKind,
    disk_dominance_check,
    ik_disk,
    ik_exact,
    ik_monotone_check,
    ik_regular_polygon,
    polygon_upper_bound,
)
from escobar.geometry import make_disk, make_polygon, make_regular_polygon

# Frozen reference values (evaluated by hand from the closed forms):
#   I_2(disk) = sin(pi/2)/(pi/2) = 2/pi
#   I_3(disk) = sin(pi/3)/(pi/3) = 3*sqrt(3)/(2*pi)
I2_DISK = 0.6366197723675814
I3_DISK = 0.8269933431326881


def test_disk_values_frozen():
    assert ik_disk(2).value == pytest.approx(I2_DISK, abs=1e-15)
    assert ik_disk(3).value == pytest.approx(I3_DISK, abs=1e-15)


@pytest.mark.parametrize("k", range(2, 20))
def test_disk_formula(k):
    b = ik_disk(k)
    assert b.value == pytest.approx(math.sin(math.pi / k) / (math.pi / k), rel=1e-15)
    assert b.kind is BoundKind.EXACT


def test_disk_k1_is_zero():
    b = ik_disk(1)
    assert b.value == 0.0
    assert b.kind is BoundKind.EXACT


def test_disk_k_must_be_positive():
    with pytest.raises(InvalidParameterError):
        ik_disk(0)


# ---------------------------------------------------------------------------
# regular polygons
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(3, 13))
def test_saturation(n):
    """Once k >= n the constant freezes at cos(pi/n)."""
    want = math.cos(math.pi / n)
    for k in (n, n + 1, 2 * n, 50):
        b = ik_regular_polygon(n, k)
        assert b.value == pytest.approx(want, abs=1e-15)
        assert b.kind is BoundKind.EXACT


@pytest.mark.parametrize(
    "n,k,want",
    [
        (4, 2, 0.5),  # sin(pi/2)*2/(4*tan(pi/4)) = 1/2
        (6, 3, 0.75),  # 3/4
        (6, 2, math.sqrt(3) / 3),
        (8, 4, math.sin(math.pi / 4) / (2 * math.tan(math.pi / 8))),
        (9, 3, math.sin(math.pi / 3) / (3 * math.tan(math.pi / 9))),
        (10, 5, math.sin(math.pi / 5) / (2 * math.tan(math.pi / 10))),
        (12, 4, math.sin(math.pi / 4) / (3 * math.tan(math.pi / 12))),
    ],
)
def test_divisor_formula(n, k, want):
    b = ik_regular_polygon(n, k)
    assert b.value == pytest.approx(want, abs=1e-15)
    assert b.kind is BoundKind.EXACT


def test_nondivisor_is_upper_bound():
    b = ik_regular_polygon(5, 2)
    assert b.kind is BoundKind.UPPER_BOUND
    # never exceeds the saturated value
    assert b.value <= math.cos(math.pi / 5) + 1e-15
    assert b.value > 0


def test_regular_polygon_k1():
    assert ik_regular_polygon(7, 1).value == 0.0


def test_regular_polygon_validation():
    with pytest.raises(InvalidParameterError):
        ik_regular_polygon(2, 2)
    with pytest.raises(InvalidParameterError):
        ik_regular_polygon(5, 0)


# ---------------------------------------------------------------------------
# dispatch, bounds, checks
# ---------------------------------------------------------------------------


def test_ik_exact_dispatch(unit_disk, hexagon, lshape):
    assert ik_exact(unit_disk, 4).value == pytest.approx(ik_disk(4).value, abs=1e-15)
    assert ik_exact(hexagon, 6).value == pytest.approx(math.cos(math.pi / 6), abs=1e-15)
    with pytest.raises(NotApplicableError):
        ik_exact(lshape, 2)


def test_polygon_upper_bound_right_triangle():
    tri = make_polygon([(0, 0), (2, 0), (0, 1)])
    theta_min = min(tri.interior_angles)
    b = polygon_upper_bound(tri)
    assert b.value == pytest.approx(math.sin(theta_min / 2), rel=1e-12)
    assert b.kind is BoundKind.UPPER_BOUND


def test_polygon_upper_bound_ignores_reflex(lshape):
    # the reflex corner (interior angle 3*pi/2) is not a competitor
    assert polygon_upper_bound(lshape).value == pytest.approx(
        math.sin(math.pi / 4), abs=1e-12
    )


def test_polygon_upper_bound_needs_a_corner(unit_disk):
    with pytest.raises(NotApplicableError):
        polygon_upper_bound(unit_disk)


def test_monotone_check():
    assert ik_monotone_check(6, 50)
    assert ik_monotone_check(11, 40)


# The disk-dominance inequality I_k(D_n) <= I_k(disk) fails at exactly these
# (n, k) pairs in the scan range: for k > n/2 the saturation value cos(pi/n)
# is exact (each region would need an arc holding two strictly interior
# vertices to beat it, and 2k > n makes that impossible), and at these pairs
# cos(pi/n) exceeds the disk value.  Confirmed independently by enumeration +
# refinement, which attain cos(pi/n) to 1e-15 and never go below.
DOMINANCE_COUNTEREXAMPLES = {(7, 4), (9, 5), (11, 6)}


@pytest.mark.parametrize(
    "n,k",
    [
        (n, k)
        for n in range(3, 13)
        for k in range(2, n)
        if (n, k) not in DOMINANCE_COUNTEREXAMPLES
    ],
)
def test_disk_dominance(n, k):
    ok, bound_dn, bound_disk = disk_dominance_check(n, k)
    assert ok
    assert bound_dn.value <= bound_disk.value + 1e-9


@pytest.mark.parametrize("n,k", sorted(DOMINANCE_COUNTEREXAMPLES))
def test_disk_dominance_counterexamples(n, k):
    """The three pairs where the polygon honestly beats the disk."""
    ok, bound_dn, bound_disk = disk_dominance_check(n, k)
    assert not ok
    # the reported bound is the (exact) extended saturation value cos(pi/n)
    assert bound_dn.value == pytest.approx(math.cos(math.pi / n), abs=1e-12)
    assert bound_dn.value > bound_disk.value + 1e-4


def test_disk_dominance_requires_k_below_n():
    with pytest.raises(InvalidParameterError):
        disk_dominance_check(5, 5)


def test_bound_str_uses_12_digits():
    text = str(ik_disk(3))
    assert "0.826993343133" in text
    assert "exact" in text


def test_bound_is_frozen():
    b = ik_disk(2)
    with pytest.raises(AttributeError):
        b.value = 0.0


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(k=st.integers(min_value=1, max_value=200))
def test_disk_values_in_unit_interval(k):
    v = ik_disk(k).value
    assert 0.0 <= v < 1.0


@settings(max_examples=60, deadline=None)
@given(k=st.integers(min_value=1, max_value=199))
def test_disk_values_nondecreasing(k):
    assert ik_disk(k + 1).value >= ik_disk(k).value


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=3, max_value=24),
    k=st.integers(min_value=1, max_value=48),
)
def test_polygon_below_disk_where_proven(n, k):
    """Dominance holds wherever it is a theorem: k >= n and divisor pairs.

    (It is *false* in general: see DOMINANCE_COUNTEREXAMPLES above.)
    """
    if k >= n or n % k == 0:
        assert ik_regular_polygon(n, k).value <= ik_disk(k).value + 1e-12
