"""Symmetrization: axis-centered caps, crossover, envelope, audits."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from escobar.errors import InvalidParameterError, NotApplicableError
from escobar.exact import ik_regular_polygon
from escobar.geometry import make_disk, make_regular_polygon
from escobar.regions import Cap, eta_partial
from escobar.symmetry import (
    audit_symmetrization,
    cap_eta_limit,
    crossover_threshold,
    envelope_value,
    lower_envelope_check,
    monotonicity_check,
    symmetrization_inequality_check,
    symmetrize,
)


# ---------------------------------------------------------------------------
# symmetrize: measured caps vs closed forms
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8, 12])
def test_vertex_centered_plateau(n):
    """For lam <= 2s the vertex-centered cap has eta = cos(pi/n) exactly."""
    dom = make_regular_polygon(n)
    s = dom.perimeter / n
    for frac in (0.3, 1.0, 1.7):
        lam = frac * s
        if lam > dom.perimeter / 2:
            continue
        vertex, _ = symmetrize(dom, lam)
        expected, degenerate = cap_eta_limit(n, lam, "vertex-centered", side=s)
        assert not degenerate
        assert vertex.eta == pytest.approx(expected, abs=1e-12)
        assert vertex.eta == pytest.approx(math.cos(math.pi / n), abs=1e-12)


@pytest.mark.parametrize("n", [4, 5, 6, 8, 12])
def test_edge_centered_formula(n):
    """For s < lam <= 3s the edge-centered eta follows the linear-chord law."""
    dom = make_regular_polygon(n)
    s = dom.perimeter / n
    for frac in (1.2, 1.8, 2.5):
        lam = frac * s
        if lam > dom.perimeter / 2:
            continue
        _, edge = symmetrize(dom, lam)
        expected, degenerate = cap_eta_limit(n, lam, "edge-centered", side=s)
        assert not degenerate
        assert edge.eta == pytest.approx(expected, abs=1e-12)
        assert edge.eta == pytest.approx(
            (s + (lam - s) * math.cos(2 * math.pi / n)) / lam, abs=1e-12
        )


def test_edge_centered_degenerate():
    dom = make_regular_polygon(4)
    s = dom.perimeter / 4
    _, edge = symmetrize(dom, 0.5 * s)
    assert edge.degenerate
    assert edge.eta == 1.0
    eta, degenerate = cap_eta_limit(4, 0.5, "edge-centered")
    assert degenerate and eta == 1.0


def test_symmetrize_validation():
    dom = make_regular_polygon(5)
    with pytest.raises(InvalidParameterError):
        symmetrize(dom, 0.0)
    with pytest.raises(InvalidParameterError):
        symmetrize(dom, 0.51 * dom.perimeter)
    with pytest.raises(NotApplicableError):
        symmetrize(make_disk(), 1.0)


def test_cap_eta_limit_ranges():
    with pytest.raises(NotApplicableError):
        cap_eta_limit(6, 3.5, "edge-centered")
    with pytest.raises(NotApplicableError):
        cap_eta_limit(6, 2.5, "vertex-centered")
    with pytest.raises(InvalidParameterError):
        cap_eta_limit(6, 1.0, "face-centered")
    with pytest.raises(InvalidParameterError):
        cap_eta_limit(2, 1.0, "vertex-centered")
    with pytest.raises(InvalidParameterError):
        cap_eta_limit(6, -1.0, "vertex-centered")


# ---------------------------------------------------------------------------
# crossover: bisection oracle on *measured* etas
# ---------------------------------------------------------------------------


def measured_crossover(n):
    """Bisect for the exterior length where the edge-centered cap catches up.

    Uses only measured etas from symmetrize(), so it is independent of the
    closed-form threshold it is checked against.
    """
    dom = make_regular_polygon(n)
    per = dom.perimeter
    s = per / n
    lo = s * (1.0 + 1e-9)  # just past degeneracy: edge eta near 1
    hi = min(2.0 * s, per / 2.0)

    def gap(lam):
        vertex, edge = symmetrize(dom, lam)
        return edge.eta - vertex.eta

    assert gap(lo) > 0.0
    assert gap(hi) <= 1e-12
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if gap(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8])
def test_crossover_matches_bisection(n):
    dom = make_regular_polygon(n)
    s = dom.perimeter / n
    assert crossover_threshold(n, side=s) == pytest.approx(
        measured_crossover(n), abs=1e-8 * dom.perimeter
    )


def test_crossover_known_values():
    assert crossover_threshold(3) == pytest.approx(1.5, abs=1e-12)
    assert crossover_threshold(4) == pytest.approx(math.sqrt(2), abs=1e-12)
    # decreasing toward the flat limit 4/3
    ratios = [crossover_threshold(n) for n in range(3, 41)]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert all(1.0 < r <= 1.5 + 1e-12 for r in ratios)
    assert 4 / 3 < crossover_threshold(100) < 1.34


# ---------------------------------------------------------------------------
# envelope at equal-split lengths
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "n,ell,k", [(6, 2, 3), (6, 3, 2), (8, 2, 4), (8, 4, 2), (12, 3, 4)]
)
def test_envelope_matches_equal_split_constant(n, ell, k):
    """At lam = ell*s with ell = n/k the envelope is the k-split constant."""
    assert envelope_value(n, ell) == pytest.approx(
        ik_regular_polygon(n, k).value, abs=1e-12
    )


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9])
def test_lower_envelope_all_ell(n):
    dom = make_regular_polygon(n)
    s = dom.perimeter / n
    for ell in range(1, n // 2 + 1):
        check = lower_envelope_check(n, ell * s, dom)
        assert check.ok
        assert check.ell == ell
        assert check.expected_kind == (
            "vertex-centered" if ell % 2 else "edge-centered"
        )
        assert min(check.vertex_eta, check.edge_eta) == pytest.approx(
            envelope_value(n, ell), abs=1e-9
        )


def test_lower_envelope_rejects_off_grid():
    with pytest.raises(InvalidParameterError):
        lower_envelope_check(6, 1.37)
    with pytest.raises(InvalidParameterError):
        envelope_value(6, 4)  # ell > n//2


# ---------------------------------------------------------------------------
# inequality, monotonicity, audit
# ---------------------------------------------------------------------------


def test_inequality_check_simple(hexagon):
    per = hexagon.perimeter
    cap = Cap(0.13 * per, 0.52 * per)
    ok, eta, bound = symmetrization_inequality_check(hexagon, cap)
    assert ok
    assert eta == pytest.approx(eta_partial(hexagon, cap), abs=1e-15)
    assert bound <= eta + 1e-12


def test_inequality_check_rejects_long_caps(hexagon):
    per = hexagon.perimeter
    with pytest.raises(InvalidParameterError):
        symmetrization_inequality_check(hexagon, Cap(0.0, 0.75 * per))


@pytest.mark.parametrize("n", range(3, 9))
def test_monotonicity(n):
    assert monotonicity_check(n)


@pytest.mark.parametrize("n", [3, 5, 8])
def test_audit(n):
    report = audit_symmetrization(n, trials=120, seed=3)
    assert report.ok
    assert report.n == n and report.trials == 120
    assert report.inequality_violations == 0
    assert report.worst_slack >= -1e-12
    assert report.crossover_in_range and 1.0 < report.crossover_ratio <= 1.5
    assert report.monotone_ok and report.envelope_ok


def test_audit_needs_trials():
    with pytest.raises(InvalidParameterError):
        audit_symmetrization(4, trials=0)


@given(
    start=st.floats(0.0, 1.0, allow_nan=False),
    frac=st.floats(0.01, 0.5, allow_nan=False),
)
@settings(max_examples=60, deadline=None)
def test_inequality_property_hexagon(start, frac):
    dom = make_regular_polygon(6)
    per = dom.perimeter
    cap = Cap(start * per, (start * per + frac * per) % per)
    ok, _, _ = symmetrization_inequality_check(dom, cap)
    assert ok
