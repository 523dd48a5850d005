"""Boundary regions (caps and strips) and disjoint k-tuples of them.

A *cap* ``Cap(a, b)`` is the piece of a domain cut off by the chord between
the boundary points at arclengths ``a`` and ``b``: its exterior boundary is
the counterclockwise boundary walk from ``a`` to ``b`` and the chord closes
it.  A *strip* is the set difference of two nested caps.

For a region Ω the ratio eta(Ω) = |interior boundary| / |exterior boundary|
compares the chord length(s) inside the domain against the boundary length
shared with the ambient domain.  Tuples of mutually disjoint regions are the
competitors over which the k-th Escobar constant is minimised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import InvalidGeometryError
from .geometry import (
    TAU_GEOM,
    Arc,
    PlanarDomain,
    Segment,
    _cross,
    _GOLDEN_ANGLE,
    _seg_seg_intersections,
    _solve_quadratic,
    _sub,
    chord_is_interior,
    project_to_boundary,
)

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Cap:
    """Chord-cut piece whose exterior boundary runs ccw from ``a`` to ``b``."""

    a: float
    b: float


@dataclass(frozen=True)
class Strip:
    """Difference of two nested caps (``inner`` strictly inside ``outer``)."""

    inner: Cap
    outer: Cap


Region = Union[Cap, Strip]


@dataclass(frozen=True)
class TupleCandidate:
    """A k-tuple of candidate regions on one domain."""

    domain: PlanarDomain
    regions: tuple[Region, ...]

    @property
    def k(self) -> int:
        return len(self.regions)


@dataclass(frozen=True)
class TupleViolation:
    """One failed disjointness/validity predicate for a tuple.

    ``first``/``second`` are region indices (equal for single-region
    problems); ``predicate`` is one of ``region-invalid``, ``arc-overlap``,
    ``chord-crossing``, ``containment``.
    """

    first: int
    second: int
    predicate: str
    detail: str


# ---------------------------------------------------------------------------
# Basic measurements
# ---------------------------------------------------------------------------


def exterior_intervals(domain: PlanarDomain, region: Region) -> list[tuple[float, float]]:
    """Arclength intervals (ccw) of the region's exterior boundary."""
    if isinstance(region, Cap):
        return [(region.a, region.b)]
    return [
        (region.outer.a, region.inner.a),
        (region.inner.b, region.outer.b),
    ]


def interior_chords(domain: PlanarDomain, region: Region) -> list[tuple[float, float]]:
    """Arclength endpoint pairs of the region's chords."""
    if isinstance(region, Cap):
        return [(region.a, region.b)]
    return [
        (region.inner.a, region.inner.b),
        (region.outer.a, region.outer.b),
    ]


def exterior_length(domain: PlanarDomain, region: Region) -> float:
    per = domain.perimeter
    return sum((s1 - s0) % per for s0, s1 in exterior_intervals(domain, region))


def interior_length(domain: PlanarDomain, region: Region) -> float:
    return sum(
        math.dist(domain.point_at(s0), domain.point_at(s1))
        for s0, s1 in interior_chords(domain, region)
    )


def eta_partial(domain: PlanarDomain, region: Region) -> float:
    """eta(Ω) = chord length / exterior boundary length (inf if no exterior)."""
    ext = exterior_length(domain, region)
    if ext <= 0.0:
        return math.inf
    return interior_length(domain, region) / ext


def max_eta(tc: TupleCandidate) -> float:
    """The tuple's figure of merit: the worst eta among its regions."""
    return max(eta_partial(tc.domain, r) for r in tc.regions)


def _cap_area(domain: PlanarDomain, cap: Cap) -> float:
    pa = domain.point_at(cap.a)
    pb = domain.point_at(cap.b)
    return domain.boundary_green(cap.a, cap.b) + 0.5 * _cross(pb, pa)


def region_area(domain: PlanarDomain, region: Region) -> float:
    """Enclosed area of the region (Green's theorem, exact per edge)."""
    if isinstance(region, Cap):
        return _cap_area(domain, region)
    return _cap_area(domain, region.outer) - _cap_area(domain, region.inner)


# ---------------------------------------------------------------------------
# Membership (ray parity against the region's closed boundary curve)
# ---------------------------------------------------------------------------


def _region_curve(domain, region):
    """Boundary-walk intervals and chord segments forming the region's boundary."""
    pieces = exterior_intervals(domain, region)
    segments = [
        (domain.point_at(s0), domain.point_at(s1))
        for s0, s1 in interior_chords(domain, region)
    ]
    return pieces, segments


def region_contains_point(
    domain: PlanarDomain, region: Region, p: tuple[float, float], *, tol: float = TAU_GEOM
) -> bool:
    """Point-in-region test for the closed region."""
    tol_abs = tol * domain.scale
    pieces, segments = _region_curve(domain, region)

    # on a chord?
    for a, b in segments:
        r = _sub(b, a)
        ll = r[0] * r[0] + r[1] * r[1]
        if ll <= 0.0:
            continue
        u = min(max(((p[0] - a[0]) * r[0] + (p[1] - a[1]) * r[1]) / ll, 0.0), 1.0)
        if math.dist(p, (a[0] + u * r[0], a[1] + u * r[1])) <= tol_abs:
            return True
    # on the exterior boundary?
    s, d = project_to_boundary(domain, p)
    if d <= tol_abs:
        per = domain.perimeter
        for s0, s1 in pieces:
            span = (s1 - s0) % per
            off = (s - s0) % per
            if off <= span + tol_abs or off >= per - tol_abs:
                return True
        return False

    for attempt in range(32):
        ang = 0.7391 + _GOLDEN_ANGLE * attempt
        direction = (math.cos(ang), math.sin(ang))
        parity = _curve_parity_once(domain, pieces, segments, p, direction, tol_abs)
        if parity is not None:
            return parity
    raise InvalidGeometryError(f"could not classify point {p} against region boundary")


def _ray_segment_hit(p, direction, a, b) -> tuple[int, bool]:
    """Crossing count (0/1) of ray p+u*dir with segment a-b; True flags degeneracy."""
    r = _sub(b, a)
    lr = math.hypot(*r)
    if lr == 0.0:
        return 0, False
    denom = _cross(direction, r)
    qp = _sub(a, p)
    if abs(denom) <= 1e-14 * lr:
        if abs(_cross(r, qp)) <= 1e-12 * lr * max(math.hypot(*qp), 1.0):
            return 0, True
        return 0, False
    u = _cross(qp, r) / denom
    v = _cross(qp, direction) / denom
    if u <= 0.0:
        return 0, False
    if v < -1e-9 or v > 1.0 + 1e-9:
        return 0, False
    if v < 1e-9 or v > 1.0 - 1e-9:
        return 0, True
    return 1, False


def _curve_parity_once(domain, pieces, segments, p, direction, tol_abs):
    """Parity of ray crossings with the closed curve, or None if degenerate."""
    count = 0
    for s0, s1 in pieces:
        for i, t0, t1 in domain.boundary_pieces(s0, s1):
            edge = domain.edges[i]
            if isinstance(edge, Segment):
                c, degen = _ray_segment_hit(
                    p, direction, edge.point_at_local(t0), edge.point_at_local(t1)
                )
                if degen:
                    return None
                count += c
            else:
                f = _sub(p, edge.center)
                roots = _solve_quadratic(
                    1.0, 2.0 * (direction[0] * f[0] + direction[1] * f[1]),
                    f[0] * f[0] + f[1] * f[1] - edge.radius * edge.radius,
                )
                eps_t = max(tol_abs, 1e-9 * edge.radius)
                for u in roots:
                    if u <= tol_abs:
                        if abs(u) <= tol_abs:
                            return None
                        continue
                    hit = (p[0] + u * direction[0], p[1] + u * direction[1])
                    phi = edge.angle_of_point(hit)
                    if edge.ccw:
                        t = ((phi - edge.start_angle) % _TWO_PI) * edge.radius
                    else:
                        t = ((edge.start_angle - phi) % _TWO_PI) * edge.radius
                    if t0 - eps_t <= t <= t1 + eps_t:
                        if t < t0 + eps_t or t > t1 - eps_t:
                            return None
                        count += 1
                    elif min(abs(t - t0), abs(t - t1)) <= eps_t:
                        return None
    for a, b in segments:
        c, degen = _ray_segment_hit(p, direction, a, b)
        if degen:
            return None
        count += c
    return count % 2 == 1


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate_region(
    domain: PlanarDomain, region: Region, *, tol: float = TAU_GEOM
) -> list[str]:
    """Problems with a single region (empty list = valid)."""
    per = domain.perimeter
    tol_len = tol * per
    problems: list[str] = []

    def check_cap(cap: Cap, label: str) -> None:
        ext = (cap.b - cap.a) % per
        if ext <= tol_len:
            problems.append(f"{label}: zero-length exterior boundary (a == b)")
            return
        if per - ext <= tol_len:
            problems.append(f"{label}: cap swallows the whole boundary")
            return
        if not chord_is_interior(domain, cap.a, cap.b, tol=tol):
            problems.append(
                f"{label}: chord between s={cap.a:.6g} and s={cap.b:.6g} "
                "does not cut through the interior"
            )

    if isinstance(region, Cap):
        check_cap(region, "cap")
        return problems

    check_cap(region.inner, "inner cap")
    check_cap(region.outer, "outer cap")
    if problems:
        return problems
    # nesting: outer.a < inner.a < inner.b < outer.b in ccw order from outer.a
    da = (region.inner.a - region.outer.a) % per
    db = (region.inner.b - region.outer.a) % per
    dw = (region.outer.b - region.outer.a) % per
    if not (tol_len < da < db - tol_len and db < dw - tol_len):
        problems.append(
            "strip caps are not strictly nested "
            f"(offsets from outer.a: inner.a={da:.6g}, inner.b={db:.6g}, outer.b={dw:.6g})"
        )
        return problems
    # the two chords must not cross each other
    pa = domain.point_at(region.inner.a)
    pb = domain.point_at(region.inner.b)
    qa = domain.point_at(region.outer.a)
    qb = domain.point_at(region.outer.b)
    hits, overlap = _seg_seg_intersections(pa, pb, qa, qb)
    excl = max(1e-12 * domain.scale, 1e-6 * min(math.dist(pa, pb), math.dist(qa, qb)))
    if overlap:
        problems.append("inner and outer chords overlap")
    else:
        for pt, _u, _v in hits:
            if all(math.dist(pt, q) > excl for q in (pa, pb, qa, qb)):
                problems.append("inner and outer chords cross")
                break
    return problems


def _interval_overlap_mod(per, s0, l0, s1, l1) -> float:
    """Overlap length of two circular arclength intervals."""
    total = 0.0
    base = s0 % per
    for shift in (-per, 0.0, per):
        o = (s1 % per) + shift
        lo = max(base, o)
        hi = min(base + l0, o + l1)
        if hi > lo:
            total += hi - lo
    return total


def _chords_conflict(domain, c1, c2, *, strict: bool, tol: float):
    """None if chords may coexist, otherwise a description string."""
    p1 = domain.point_at(c1[0])
    q1 = domain.point_at(c1[1])
    p2 = domain.point_at(c2[0])
    q2 = domain.point_at(c2[1])
    tol_abs = tol * domain.scale
    same = (
        math.dist(p1, p2) <= tol_abs
        and math.dist(q1, q2) <= tol_abs
    ) or (
        math.dist(p1, q2) <= tol_abs
        and math.dist(q1, p2) <= tol_abs
    )
    if same:
        return "identical chords" if strict else None
    shared = any(
        math.dist(x, y) <= tol_abs for x in (p1, q1) for y in (p2, q2)
    )
    if strict and shared:
        return "chords share an endpoint"
    hits, overlap = _seg_seg_intersections(p1, q1, p2, q2)
    if overlap:
        return "chords overlap along a stretch"
    excl = max(1e-12 * domain.scale, 1e-6 * min(math.dist(p1, q1), math.dist(p2, q2)))
    for pt, _u, _v in hits:
        if all(math.dist(pt, e) > excl for e in (p1, q1, p2, q2)):
            return f"chords cross at {pt}"
    return None


def validate_tuple(
    tc: TupleCandidate, *, strict: bool = False, tol: float = TAU_GEOM
) -> list[TupleViolation]:
    """All violated predicates for a candidate tuple.

    In the default (lenient) mode adjacent regions may share boundary cut
    points and two regions may share an identical chord, as long as their
    interiors stay disjoint; ``strict=True`` additionally forbids any shared
    endpoints.
    """
    domain = tc.domain
    per = domain.perimeter
    tol_len = tol * per
    out: list[TupleViolation] = []

    region_problems = []
    for i, region in enumerate(tc.regions):
        probs = validate_region(domain, region, tol=tol)
        region_problems.append(bool(probs))
        for pr in probs:
            out.append(TupleViolation(i, i, "region-invalid", pr))

    n = len(tc.regions)
    for i in range(n):
        if region_problems[i]:
            continue
        ints_i = exterior_intervals(domain, tc.regions[i])
        chords_i = interior_chords(domain, tc.regions[i])
        for j in range(i + 1, n):
            if region_problems[j]:
                continue
            ints_j = exterior_intervals(domain, tc.regions[j])
            chords_j = interior_chords(domain, tc.regions[j])

            clash = False
            for s0, s1 in ints_i:
                l0 = (s1 - s0) % per
                for u0, u1 in ints_j:
                    l1 = (u1 - u0) % per
                    ov = _interval_overlap_mod(per, s0, l0, u0, l1)
                    if ov > tol_len:
                        out.append(
                            TupleViolation(
                                i, j, "arc-overlap",
                                f"exterior arcs overlap over length {ov:.6g}",
                            )
                        )
                        clash = True
                    elif strict:
                        # closed intervals may not even touch
                        gap1 = min((u0 - s1) % per, (s0 - u1) % per)
                        if ov > 0.0 or gap1 <= tol_len:
                            out.append(
                                TupleViolation(
                                    i, j, "arc-overlap",
                                    "exterior arcs touch (strict mode)",
                                )
                            )
                            clash = True
                    if clash:
                        break
                if clash:
                    break

            for c1 in chords_i:
                for c2 in chords_j:
                    msg = _chords_conflict(domain, c1, c2, strict=strict, tol=tol)
                    if msg:
                        out.append(TupleViolation(i, j, "chord-crossing", msg))

            if not clash:
                _check_containment(domain, tc.regions[i], tc.regions[j], i, j, out, tol)
    return out


def _check_containment(domain, ri, rj, i, j, out, tol) -> None:
    """Defensive check that one region's bulk is not inside the other.

    With valid chords, disjoint arcs and non-crossing chords this cannot
    happen for chord-cut regions of a simply connected domain, but it is
    cheap insurance against borderline numerics.  A representative interior
    point of each region is tested against the other; the point is only
    trusted when it verifiably lies in its own region.
    """
    delta = 1e-7 * domain.scale
    for (a_idx, b_idx, ra, rb) in ((i, j, ri, rj), (j, i, rj, ri)):
        s0, s1 = exterior_intervals(domain, ra)[0]
        mid = (s0 + ((s1 - s0) % domain.perimeter) / 2.0) % domain.perimeter
        t = domain.tangent_after(mid)
        pm = domain.point_at(mid)
        rep = (pm[0] - delta * t[1], pm[1] + delta * t[0])
        try:
            if region_contains_point(domain, ra, rep, tol=tol) and region_contains_point(
                domain, rb, rep, tol=tol
            ):
                out.append(
                    TupleViolation(
                        a_idx, b_idx, "containment",
                        f"interior point {rep} of region {a_idx} lies in region {b_idx}",
                    )
                )
                return
        except InvalidGeometryError:
            continue


def is_valid_tuple(tc: TupleCandidate, *, strict: bool = False, tol: float = TAU_GEOM) -> bool:
    return not validate_tuple(tc, strict=strict, tol=tol)


# ---------------------------------------------------------------------------
# JSON round trip
# ---------------------------------------------------------------------------


def region_to_json(region: Region) -> dict:
    if isinstance(region, Cap):
        return {"kind": "cap", "a": region.a, "b": region.b}
    return {
        "kind": "strip",
        "inner": region_to_json(region.inner),
        "outer": region_to_json(region.outer),
    }


def region_from_json(data: dict) -> Region:
    try:
        kind = data["kind"]
        if kind == "cap":
            return Cap(float(data["a"]), float(data["b"]))
        if kind == "strip":
            inner = region_from_json(data["inner"])
            outer = region_from_json(data["outer"])
            if not (isinstance(inner, Cap) and isinstance(outer, Cap)):
                raise InvalidGeometryError("strip caps must be caps")
            return Strip(inner, outer)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidGeometryError(f"malformed region JSON ({exc})") from exc
    raise InvalidGeometryError(f"unknown region kind {kind!r}")


def tuple_to_json(tc: TupleCandidate) -> dict:
    return {"regions": [region_to_json(r) for r in tc.regions]}


def tuple_from_json(domain: PlanarDomain, data: dict) -> TupleCandidate:
    if not isinstance(data, dict) or "regions" not in data:
        raise InvalidGeometryError("tuple JSON must be an object with a 'regions' list")
    return TupleCandidate(
        domain, tuple(region_from_json(r) for r in data["regions"])
    )
