"""Closed-form Escobar constants and certified comparisons.

The k-th Escobar constant of a bounded planar domain M is

    I_k(M) = inf max_j eta(Omega_j),

the infimum running over k-tuples of mutually disjoint boundary regions.
Closed forms are known for disks and regular polygons; for general polygons
the smallest corner gives an upper bound.  Every returned value is tagged
with how much it certifies: ``exact``, ``upper-bound`` (a valid competitor
or a proven inequality), or ``estimate`` (numerical, uncertified).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import InvalidParameterError, NotApplicableError
from .geometry import PlanarDomain, is_disk, make_regular_polygon, regular_ngon_order

#: Numeric tolerance for closed-form comparisons.
TAU_NUM = 1e-9


class BoundKind(str, Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper-bound"
    ESTIMATE = "estimate"


@dataclass(frozen=True)
class Bound:
    """A value for (or above) an Escobar constant, with its certification."""

    value: float
    kind: BoundKind
    provenance: str

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return f"{self.value:.12g} [{self.kind.value}] ({self.provenance})"


def ik_disk(k: int) -> Bound:
    """I_k of the unit disk: sin(pi/k) / (pi/k), with I_1 = 0."""
    if k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k}")
    if k == 1:
        return Bound(0.0, BoundKind.EXACT, "single region: shrink a cap, eta -> 0")
    x = math.pi / k
    return Bound(
        math.sin(x) / x,
        BoundKind.EXACT,
        "disk closed form sin(pi/k)/(pi/k), attained by k equal-arc caps",
    )


def ik_regular_polygon(n: int, k: int) -> Bound:
    """I_k of the regular n-gon D_n.

    Exact for k >= n (the saturation value cos(pi/n)) and for k dividing n
    (equal boundary split through edge midpoints); otherwise the best
    certified upper bound available in closed form/competitor form.
    """
    if n < 3:
        raise InvalidParameterError(f"regular polygon needs n >= 3, got {n}")
    if k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k}")
    if k == 1:
        return Bound(0.0, BoundKind.EXACT, "single region: shrink a corner cap, eta -> 0")
    if k >= n:
        return Bound(
            math.cos(math.pi / n),
            BoundKind.EXACT,
            "saturation: corner regions force eta >= cos(pi/n) once k >= n",
        )
    if n % k == 0:
        value = math.sin(math.pi / k) * k / (n * math.tan(math.pi / n))
        return Bound(
            value,
            BoundKind.EXACT,
            "equal boundary split through edge midpoints, k | n",
        )
    # k < n, k does not divide n: compare the two certified competitors
    cos_bound = math.cos(math.pi / n)
    candidates = [(cos_bound, "monotonicity: I_k <= I_n = cos(pi/n)")]
    eb = _equal_boundary_eta(n, k)
    if eb is not None:
        candidates.append((eb, "measured equal-boundary competitor from an edge midpoint"))
    value, why = min(candidates, key=lambda t: t[0])
    return Bound(value, BoundKind.UPPER_BOUND, why)


@lru_cache(maxsize=None)
def _equal_boundary_eta(n: int, k: int):
    """Best max-eta over start offsets of the k-fold equal-boundary split of D_n.

    The offset only matters modulo one symmetry period (perimeter/n).  The
    measured optima of this family sit on anchored cut patterns (cuts through
    vertices or through edge midpoints), both of which lie exactly on the
    sampling grid; in any case every sampled split is itself a competitor, so
    the minimum is a certified upper bound at any resolution.  The winner is
    re-measured from a fully validated tuple.
    """
    from .constructions import equal_boundary_tuple
    from .regions import max_eta

    dom = make_regular_polygon(n)
    period = dom.perimeter / n
    samples = 192
    best_off, best_val = None, math.inf
    for j in range(samples):
        off = j * period / samples
        try:
            # equal splits of a convex polygon are always valid; skip the
            # per-sample validation and validate the winner once below
            tc = equal_boundary_tuple(dom, k, start_offset=off, validate=False)
            val = max_eta(tc)
        except Exception:
            continue
        if val < best_val:
            best_val, best_off = val, off
    if best_off is None:
        return None
    try:
        tc = equal_boundary_tuple(dom, k, start_offset=best_off)
    except Exception:
        return None
    return max_eta(tc)


def polygon_upper_bound(domain: PlanarDomain) -> Bound:
    """Upper bound sin(theta_min / 2) from the sharpest convex corner.

    Valid for every k: regions concentrated at the sharpest corner have eta
    arbitrarily close to sin(theta_min/2).  Raises
    :class:`~escobar.errors.NotApplicableError` when the boundary has no
    convex corner (e.g. a disk).
    """
    angles = [t for t in domain.interior_angles if t < math.pi - 1e-9]
    if not angles:
        raise NotApplicableError("domain has no convex corner to concentrate at")
    theta = min(angles)
    return Bound(
        math.sin(theta / 2.0),
        BoundKind.UPPER_BOUND,
        f"corner concentration at interior angle {theta:.12g}",
    )


def ik_exact(domain: PlanarDomain, k: int) -> Bound:
    """Dispatch to the closed forms when the domain is recognised.

    Raises :class:`~escobar.errors.NotApplicableError` for domains without a
    known closed form (use the search module for those).
    """
    if is_disk(domain):
        return ik_disk(k)
    n = regular_ngon_order(domain)
    if n is not None:
        return ik_regular_polygon(n, k)
    raise NotApplicableError(
        "no closed form for this domain; only disks and regular polygons are recognised"
    )


def ik_monotone_check(n: int, k_max: int, *, tol: float = TAU_NUM) -> bool:
    """Whether the exactly-known I_k(D_n) values are nondecreasing in k."""
    last = -math.inf
    for k in range(1, k_max + 1):
        b = ik_regular_polygon(n, k)
        if b.kind is not BoundKind.EXACT:
            continue
        if b.value < last - tol:
            return False
        last = b.value
    return True


def disk_dominance_check(n: int, k: int, *, tol: float = TAU_NUM) -> tuple[bool, Bound, Bound]:
    """Compare I_k(D_n) against I_k(disk) for k < n.

    Returns ``(satisfied, dn_bound, disk_bound)`` where ``satisfied`` means
    the best certified value for D_n does not exceed the disk value (so the
    domination inequality holds for this pair).
    """
    if not 1 <= k < n:
        raise InvalidParameterError(f"comparison needs 1 <= k < n, got k={k}, n={n}")
    dn = ik_regular_polygon(n, k)
    dk = ik_disk(k)
    return dn.value <= dk.value + tol, dn, dk
