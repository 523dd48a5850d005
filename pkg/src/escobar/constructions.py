"""Constructions of competitor tuples with known or controllable eta.

Each function builds a :class:`~escobar.regions.TupleCandidate` from scratch
and (by default) validates it, so the measured ``max_eta`` of the result is a
certified upper bound for I_k of the domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    ConstructionFailedError,
    InvalidGeometryError,
    InvalidParameterError,
    NotApplicableError,
)
from .geometry import (
    Arc,
    PlanarDomain,
    Segment,
    angle_in_sweep,
    circle_circle_intersections,
    is_disk,
    make_disk,
    make_regular_polygon,
    segment_circle_intersections,
)
from .regions import Cap, Strip, TupleCandidate, validate_tuple


def _raise_if_invalid(tc: TupleCandidate, what: str) -> TupleCandidate:
    violations = validate_tuple(tc)
    if violations:
        lines = "; ".join(
            f"[{v.first},{v.second}] {v.predicate}: {v.detail}" for v in violations[:4]
        )
        raise ConstructionFailedError(f"{what} produced an invalid tuple: {lines}")
    return tc


# ---------------------------------------------------------------------------
# Equal-boundary splits
# ---------------------------------------------------------------------------


def equal_boundary_tuple(
    domain: PlanarDomain,
    k: int,
    start_offset: Optional[float] = None,
    *,
    validate: bool = True,
) -> TupleCandidate:
    """k caps cutting the boundary into arcs of equal length.

    ``start_offset`` is the arclength of the first cut; by default the
    midpoint of the longest edge (ties broken towards the lowest index).
    """
    if k < 2:
        raise InvalidParameterError(f"equal-boundary split needs k >= 2, got {k}")
    per = domain.perimeter
    if start_offset is None:
        i = max(range(len(domain.edges)), key=lambda j: (domain.edge_lengths[j], -j))
        start_offset = float(domain.cumlens[i]) + domain.edge_lengths[i] / 2.0
    cuts = [(start_offset + j * per / k) % per for j in range(k)]
    regions = tuple(Cap(cuts[j], cuts[(j + 1) % k]) for j in range(k))
    tc = TupleCandidate(domain, regions)
    if validate:
        _raise_if_invalid(tc, f"equal-boundary split (k={k}, offset={start_offset:.6g})")
    return tc


def disk_equal_arc_tuple(k: int, domain: Optional[PlanarDomain] = None) -> TupleCandidate:
    """The optimal k-tuple on a disk: k caps over equal arcs.

    Realises eta = sin(pi/k)/(pi/k) for every region.
    """
    if domain is None:
        domain = make_disk()
    if not is_disk(domain):
        raise NotApplicableError("equal-arc construction expects a disk domain")
    return equal_boundary_tuple(domain, k, start_offset=0.0)


def inscribed_kgon_tuple(n: int, k: int) -> TupleCandidate:
    """For k dividing n: caps of D_n cut along the inscribed k-gon.

    The cuts run through edge midpoints n/k edges apart; every region has
    eta = sin(pi/k) * k / (n * tan(pi/n)) exactly.
    """
    if n < 3:
        raise InvalidParameterError(f"regular polygon needs n >= 3, got {n}")
    if k < 2 or n % k != 0:
        raise InvalidParameterError(f"inscribed split needs k >= 2 dividing n, got k={k}, n={n}")
    dom = make_regular_polygon(n)
    return equal_boundary_tuple(dom, k, start_offset=dom.edge_lengths[0] / 2.0)


# ---------------------------------------------------------------------------
# Corner constructions
# ---------------------------------------------------------------------------


def walk_to_distance(
    domain: PlanarDomain, start_s: float, dist: float, *, forward: bool = True
) -> float:
    """Arclength of the first boundary point at euclidean distance ``dist``
    from the boundary point at ``start_s``, walking ccw (``forward``) or cw.

    The walk is limited to half the perimeter.  Raises
    :class:`~escobar.errors.ConstructionFailedError` when no such point is
    found within that range.
    """
    if dist <= 0.0:
        raise InvalidParameterError(f"walk distance must be positive, got {dist}")
    per = domain.perimeter
    origin = domain.point_at(start_s)
    n_edges = len(domain.edges)

    i, t0 = domain.edge_index_at(start_s)
    if not forward and t0 <= 0.0:
        i = (i - 1) % n_edges
        t0 = domain.edge_lengths[i]

    walked = 0.0
    for _ in range(n_edges + 1):
        edge = domain.edges[i]
        lo, hi = (t0, edge.length) if forward else (0.0, t0)
        if hi - lo > 0.0:
            hit_t = _first_circle_hit(edge, lo, hi, origin, dist, forward)
            if hit_t is not None:
                s = (float(domain.cumlens[i]) + hit_t) % per
                return s
            walked += hi - lo
            if walked > per / 2.0:
                break
        if forward:
            i = (i + 1) % n_edges
            t0 = 0.0
        else:
            i = (i - 1) % n_edges
            t0 = domain.edge_lengths[i]
    raise ConstructionFailedError(
        f"no boundary point at distance {dist:.6g} from s={start_s:.6g} "
        f"within half the perimeter ({'ccw' if forward else 'cw'})"
    )


def _first_circle_hit(edge, lo, hi, origin, dist, forward):
    """First local arclength in [lo, hi] (walk order) where the edge meets
    the circle of radius ``dist`` about ``origin``, or None."""
    hits: list[float] = []
    if isinstance(edge, Segment):
        a = edge.point_at_local(lo)
        b = edge.point_at_local(hi)
        anchor_tol = 1e-12 * max(dist, edge.length)
        # exact shortcuts: the circle centre sits at an end of the walked piece
        if math.dist(a, origin) <= anchor_tol:
            return lo + dist if dist <= hi - lo else None
        if math.dist(b, origin) <= anchor_tol:
            return hi - dist if dist <= hi - lo else None
        for _pt, u in segment_circle_intersections(a, b, origin, dist):
            t = lo + u * (hi - lo)
            if lo - 1e-12 * edge.length <= t <= hi + 1e-12 * edge.length:
                hits.append(min(max(t, lo), hi))
    else:
        for pt in circle_circle_intersections(origin, dist, edge.center, edge.radius):
            phi = edge.angle_of_point(pt)
            inside, margin = angle_in_sweep(edge, phi)
            if not inside and margin * edge.radius > 1e-9 * edge.length:
                continue
            t = edge.local_t_of_angle(phi)
            if lo - 1e-9 * edge.length <= t <= hi + 1e-9 * edge.length:
                hits.append(min(max(t, lo), hi))
    if not hits:
        return None
    return min(hits) if forward else max(hits)


def corner_chain_tuple(
    domain: PlanarDomain,
    corner_index: int,
    legs: Sequence[float],
    *,
    validate: bool = True,
) -> TupleCandidate:
    """Nested corner regions at one convex corner with prescribed legs.

    ``legs`` must be strictly increasing euclidean distances from the corner;
    the first region is the corner cap cut at ``legs[0]``, each further
    region the strip between consecutive cuts.  While the cuts stay on the
    two edges adjacent to the corner, the cap has eta = sin(theta/2) and the
    strip between legs t' < t has eta = sin(theta/2) * (t + t') / (t - t').
    """
    n = len(domain.edges)
    if not 0 <= corner_index < n:
        raise InvalidParameterError(f"corner index {corner_index} out of range")
    theta = domain.interior_angles[corner_index]
    if theta >= math.pi - 1e-9:
        raise InvalidParameterError(
            f"vertex {corner_index} is not a strictly convex corner (angle {theta:.6g})"
        )
    legs = [float(t) for t in legs]
    if not legs or any(t <= 0 for t in legs):
        raise InvalidParameterError("legs must be positive")
    if any(b <= a for a, b in zip(legs, legs[1:])):
        raise InvalidParameterError(f"legs must be strictly increasing, got {legs}")

    vs = domain.vertex_arclength(corner_index)
    caps = []
    for t in legs:
        b = walk_to_distance(domain, vs, t, forward=True)
        a = walk_to_distance(domain, vs, t, forward=False)
        caps.append(Cap(a, b))
    regions = [caps[0]]
    regions.extend(Strip(caps[j - 1], caps[j]) for j in range(1, len(caps)))
    tc = TupleCandidate(domain, tuple(regions))
    if validate:
        _raise_if_invalid(tc, f"corner chain at vertex {corner_index}")
    return tc


@dataclass(frozen=True)
class CornerScheduleParams:
    """Parameters of the geometric corner schedule.

    ``epsilon`` controls how tightly the k nested regions hug the corner;
    smaller epsilon pushes every region's eta closer to sin(theta/2).
    """

    corner_index: int
    k: int
    epsilon: float = 1e-6


def corner_schedule_legs(k: int, epsilon: float) -> list[float]:
    """Leg distances t_1 < ... < t_k of the standard corner schedule.

    With delta_j = epsilon ** (-1/(k - j + 1)) for j = 0..k-1, the legs are
    the partial sums t_j = epsilon * (delta_0 + ... + delta_{j-1}).  The
    innermost strip then dominates the tuple with

        max eta = sin(theta/2) * (1 + 2 * epsilon ** (1/(k(k+1)))),

    an exact power law in epsilon (the remaining strips decay strictly
    faster), which is what the convergence-rate tests pin down.

    The values are dimensionless; :func:`corner_tuple` multiplies them by
    the domain perimeter so the construction is scale invariant (eta only
    depends on leg ratios, so the power law is unaffected).
    """
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}")
    if not 0.0 < epsilon < 1.0:
        raise InvalidParameterError(f"epsilon must lie in (0, 1), got {epsilon}")
    deltas = [epsilon ** (-1.0 / (k - j + 1)) for j in range(k)]
    legs = []
    acc = 0.0
    for j in range(k):
        acc += deltas[j]
        legs.append(epsilon * acc)
    return legs


def corner_tuple(
    domain: PlanarDomain,
    params: CornerScheduleParams,
    *,
    validate: bool = True,
    max_halvings: int = 60,
) -> TupleCandidate:
    """Corner chain with the geometric schedule, shrinking epsilon to fit.

    Schedule legs are measured in units of the domain perimeter, so the
    resulting tuple (and its eta values) is invariant under rescaling the
    domain.  If the requested epsilon produces legs that run off the
    adjacent geometry (or an invalid tuple), epsilon is halved up to
    ``max_halvings`` times before giving up.
    """
    eps = params.epsilon
    last_err: Exception | None = None
    for _ in range(max_halvings + 1):
        legs = [t * domain.perimeter for t in corner_schedule_legs(params.k, eps)]
        if legs[-1] <= 0.245 * domain.perimeter:
            try:
                return corner_chain_tuple(
                    domain, params.corner_index, legs, validate=validate
                )
            except (ConstructionFailedError, InvalidGeometryError) as err:
                last_err = err
        eps /= 2.0
        if eps <= 0.0:
            break
    raise ConstructionFailedError(
        f"corner schedule at vertex {params.corner_index} (k={params.k}) "
        f"does not fit even after shrinking epsilon: {last_err}"
    )


def geometric_legs(t_min: float, t_max: float, k: int) -> list[float]:
    """k legs in geometric progression from t_min to t_max (inclusive)."""
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}")
    if not 0.0 < t_min <= t_max:
        raise InvalidParameterError(f"need 0 < t_min <= t_max, got {t_min}, {t_max}")
    if k == 1:
        return [t_max]
    ratio = (t_max / t_min) ** (1.0 / (k - 1))
    return [t_min * ratio**j for j in range(k)]


# ---------------------------------------------------------------------------
# Stripes on a rectangle
# ---------------------------------------------------------------------------


def stripe_tuple(
    domain: PlanarDomain, k: int, stripe_height: Optional[float] = None
) -> TupleCandidate:
    """k parallel stripes across an axis-aligned rectangle.

    Stripes run perpendicular to the long axis, starting from the low end:
    the first region is an end cap of the given height, the rest are bands
    between consecutive cuts.  On a thin rectangle of width 2*eps, every band
    has eta = 2*eps / height.  The default height is 1 (the canonical unit
    stripes, giving eta = 2*eps) whenever k unit stripes fit; otherwise the
    stripes share the extent evenly with one stripe-height of slack.
    """
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}")
    edges = domain.edges
    if len(edges) != 4 or not all(isinstance(e, Segment) for e in edges):
        raise NotApplicableError("stripe construction expects an axis-aligned rectangle")
    tol_abs = 1e-9 * domain.scale
    for e in edges:
        if abs(e.end[0] - e.start[0]) > tol_abs and abs(e.end[1] - e.start[1]) > tol_abs:
            raise NotApplicableError("stripe construction expects an axis-aligned rectangle")

    x0, y0, x1, y1 = domain.bbox
    axis = 1 if (y1 - y0) >= (x1 - x0) else 0
    lo_u, hi_u = (y0, y1) if axis == 1 else (x0, x1)
    height_total = hi_u - lo_u

    if stripe_height is None:
        slack = max(tol_abs, 1e-12 * height_total)
        stripe_height = 1.0 if k * 1.0 < height_total - slack else height_total / (k + 1)
    if stripe_height <= 0:
        raise InvalidParameterError("stripe height must be positive")
    if k * stripe_height >= height_total - max(tol_abs, 1e-12 * height_total):
        raise ConstructionFailedError(
            f"{k} stripes of height {stripe_height:.6g} do not fit in extent "
            f"{height_total:.6g} (the last cut must stay inside)"
        )

    # the two edges running parallel to the long axis, split by direction
    dec = inc = None
    for i, e in enumerate(edges):
        d = e.end[axis] - e.start[axis]
        if abs(d) > tol_abs:
            if d > 0:
                inc = (i, e)
            else:
                dec = (i, e)
    if inc is None or dec is None:
        raise NotApplicableError("could not identify the two long sides")

    per = domain.perimeter

    def cut(u: float) -> Cap:
        a = (float(domain.cumlens[dec[0]]) + (dec[1].start[axis] - u)) % per
        b = (float(domain.cumlens[inc[0]]) + (u - inc[1].start[axis])) % per
        return Cap(a, b)

    caps = [cut(lo_u + j * stripe_height) for j in range(1, k + 1)]
    regions = [caps[0]]
    regions.extend(Strip(caps[j - 1], caps[j]) for j in range(1, k))
    tc = TupleCandidate(domain, tuple(regions))
    return _raise_if_invalid(tc, f"stripe construction (k={k}, h={stripe_height:.6g})")
