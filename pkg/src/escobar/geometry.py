"""Planar domains bounded by line segments and circular arcs.

A domain is a closed, simple chain of edges traversed counterclockwise
(the interior lies on the left).  All boundary bookkeeping is done in
arclength: a boundary point is addressed by its distance ``s`` from the
start of edge 0, measured counterclockwise, with ``s`` taken modulo the
perimeter.

The module provides constructors (:func:`make_domain`, :func:`make_polygon`,
:func:`make_disk`, :func:`make_regular_polygon`), geometric queries used by
the rest of the package (point/tangent lookup, interior-chord tests, point
containment, projection onto the boundary, Green-theorem areas), and a JSON
round trip for domains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import InvalidGeometryError, InvalidParameterError

#: Geometric tolerance, relative to the domain scale (bounding-box diagonal).
TAU_GEOM = 1e-9

_TWO_PI = 2.0 * math.pi
_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))

Point = tuple[float, float]


def _cross(a: Point, b: Point) -> float:
    return a[0] * b[1] - a[1] * b[0]


def _dot(a: Point, b: Point) -> float:
    return a[0] * b[0] + a[1] * b[1]


def _sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


# ---------------------------------------------------------------------------
# Edges
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Segment:
    """Straight edge from ``start`` to ``end``."""

    start: Point
    end: Point

    @cached_property
    def length(self) -> float:
        return math.dist(self.start, self.end)

    def point_at_local(self, t: float) -> Point:
        u = t / self.length
        return (
            self.start[0] + u * (self.end[0] - self.start[0]),
            self.start[1] + u * (self.end[1] - self.start[1]),
        )

    def tangent_at_local(self, t: float) -> Point:
        return (
            (self.end[0] - self.start[0]) / self.length,
            (self.end[1] - self.start[1]) / self.length,
        )

    def reversed(self) -> "Segment":
        return Segment(self.end, self.start)


@dataclass(frozen=True)
class Arc:
    """Circular-arc edge.

    The arc starts at ``start_angle`` (radians, measured at ``center``) and
    sweeps towards ``end_angle`` in the direction given by ``ccw``.  The
    angular extent is normalised into ``(0, 2*pi]``, so a full circle is
    written with ``end_angle = start_angle + 2*pi`` (counterclockwise).
    """

    center: Point
    radius: float
    start_angle: float
    end_angle: float
    ccw: bool = True

    @cached_property
    def sweep(self) -> float:
        """Angular extent in ``(0, 2*pi]``, independent of direction."""
        raw = (
            self.end_angle - self.start_angle
            if self.ccw
            else self.start_angle - self.end_angle
        )
        if raw == 0.0:
            raise InvalidGeometryError(
                "arc has zero sweep; for a full circle use "
                "end_angle = start_angle +/- 2*pi"
            )
        s = raw % _TWO_PI
        return _TWO_PI if s == 0.0 else s

    @cached_property
    def length(self) -> float:
        return self.radius * self.sweep

    def _angle_at(self, t: float) -> float:
        d = t / self.radius
        return self.start_angle + d if self.ccw else self.start_angle - d

    def point_at_local(self, t: float) -> Point:
        a = self._angle_at(t)
        return (
            self.center[0] + self.radius * math.cos(a),
            self.center[1] + self.radius * math.sin(a),
        )

    def tangent_at_local(self, t: float) -> Point:
        a = self._angle_at(t)
        if self.ccw:
            return (-math.sin(a), math.cos(a))
        return (math.sin(a), -math.cos(a))

    def reversed(self) -> "Arc":
        return Arc(self.center, self.radius, self.end_angle, self.start_angle, not self.ccw)

    @property
    def start(self) -> Point:
        return (
            self.center[0] + self.radius * math.cos(self.start_angle),
            self.center[1] + self.radius * math.sin(self.start_angle),
        )

    @property
    def end(self) -> Point:
        # computed from the normalised sweep so that endpoint and sweep agree
        a = self.start_angle + (self.sweep if self.ccw else -self.sweep)
        return (
            self.center[0] + self.radius * math.cos(a),
            self.center[1] + self.radius * math.sin(a),
        )

    def angle_of_point(self, p: Point) -> float:
        return math.atan2(p[1] - self.center[1], p[0] - self.center[0])

    def local_t_of_angle(self, phi: float) -> float:
        """Arclength along the arc of the point at absolute angle ``phi``.

        ``phi`` is assumed to lie on the arc (use :func:`angle_in_sweep`
        first); the offset from the start is reduced modulo ``2*pi``.
        """
        if self.ccw:
            d = (phi - self.start_angle) % _TWO_PI
        else:
            d = (self.start_angle - phi) % _TWO_PI
        if d > self.sweep:
            # numerically just outside: clamp to the nearer end
            d = 0.0 if d - self.sweep > _TWO_PI - d else self.sweep
        return d * self.radius


Edge = Union[Segment, Arc]


def angle_in_sweep(arc: Arc, phi: float) -> tuple[bool, float]:
    """Whether angle ``phi`` lies on ``arc``; also the angular margin.

    Returns ``(inside, margin)`` where ``margin`` is the angular distance to
    the nearest end of the sweep (for points inside) or to the sweep itself
    (for points outside).
    """
    if arc.ccw:
        d = (phi - arc.start_angle) % _TWO_PI
    else:
        d = (arc.start_angle - phi) % _TWO_PI
    if d <= arc.sweep:
        return True, min(d, arc.sweep - d)
    return False, min(d - arc.sweep, _TWO_PI - d)


# ---------------------------------------------------------------------------
# Low-level intersection helpers
# ---------------------------------------------------------------------------


def _solve_quadratic(a: float, b: float, c: float) -> list[float]:
    """Real roots of a*x^2 + b*x + c = 0, numerically stable."""
    if a == 0.0:
        return [] if b == 0.0 else [-c / b]
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return []
    sq = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(sq, b)) if b != 0.0 else 0.5 * sq
    if q == 0.0:
        return [0.0]
    r1 = q / a
    r2 = c / q
    return [r1] if r1 == r2 else sorted((r1, r2))


def segment_circle_intersections(
    a: Point, b: Point, center: Point, radius: float, *, eps: float = 1e-9
) -> list[tuple[Point, float]]:
    """Intersections of segment ``a``->``b`` with a full circle.

    Returns ``(point, u)`` pairs with the segment parameter ``u`` kept in
    ``[-eps, 1 + eps]``.  Solved via the perpendicular foot of the centre on
    the segment line, which stays accurate when the radius is many orders of
    magnitude below the segment length (the naive quadratic discriminant
    cancels catastrophically there).
    """
    d = _sub(b, a)
    dd = _dot(d, d)
    if dd == 0.0:
        return []
    f = _sub(center, a)
    u0 = _dot(f, d) / dd  # foot of the perpendicular from the centre
    ld = math.sqrt(dd)
    perp = _cross(d, f) / ld  # signed distance of the centre from the line
    h2 = radius * radius - perp * perp
    if h2 < 0.0:
        return []
    half = math.sqrt(h2) / ld
    roots = [u0] if half == 0.0 else [u0 - half, u0 + half]
    out = []
    for u in roots:
        if -eps <= u <= 1.0 + eps:
            out.append(((a[0] + u * d[0], a[1] + u * d[1]), u))
    return out


def circle_circle_intersections(
    c1: Point, r1: float, c2: Point, r2: float
) -> list[Point]:
    """Intersection points of two circles (0, 1 or 2 points).

    Concentric circles (including identical ones) yield no points; callers
    that care about the identical-circle case must detect it themselves.
    """
    d = math.dist(c1, c2)
    if d == 0.0:
        return []
    if d > r1 + r2 or d < abs(r1 - r2):
        return []
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h2 = r1 * r1 - a * a
    h = math.sqrt(h2) if h2 > 0.0 else 0.0
    ux, uy = (c2[0] - c1[0]) / d, (c2[1] - c1[1]) / d
    bx, by = c1[0] + a * ux, c1[1] + a * uy
    if h == 0.0:
        return [(bx, by)]
    return [(bx - h * uy, by + h * ux), (bx + h * uy, by - h * ux)]


def _seg_seg_intersections(
    a: Point, b: Point, c: Point, d: Point, *, eps: float = 1e-9
) -> tuple[list[tuple[Point, float, float]], bool]:
    """Intersections of segments a->b and c->d.

    Returns ``(hits, overlap)`` where hits are ``(point, u, v)`` with both
    parameters within ``[-eps, 1 + eps]`` and ``overlap`` flags a collinear
    intersection of positive length.
    """
    r = _sub(b, a)
    s = _sub(d, c)
    lr = math.hypot(*r)
    ls = math.hypot(*s)
    if lr == 0.0 or ls == 0.0:
        return [], False
    denom = _cross(r, s)
    qp = _sub(c, a)
    if abs(denom) <= 1e-12 * lr * ls:
        # parallel; collinear iff c lies on the line through a, b
        if abs(_cross(r, qp)) > 1e-9 * lr * (ls + math.hypot(*qp)):
            return [], False
        # collinear: compare parameter ranges of c, d along a->b
        t0 = _dot(qp, r) / (lr * lr)
        t1 = _dot(_sub(d, a), r) / (lr * lr)
        lo, hi = min(t0, t1), max(t0, t1)
        olo, ohi = max(lo, 0.0), min(hi, 1.0)
        if ohi - olo > eps:
            return [], True
        if ohi - olo >= -eps:
            u = 0.5 * (olo + ohi)
            p = (a[0] + u * r[0], a[1] + u * r[1])
            return [(p, u, _dot(_sub(p, c), s) / (ls * ls))], False
        return [], False
    u = _cross(qp, s) / denom
    v = _cross(qp, r) / denom
    if -eps <= u <= 1.0 + eps and -eps <= v <= 1.0 + eps:
        p = (a[0] + u * r[0], a[1] + u * r[1])
        return [(p, u, v)], False
    return [], False


def _circular_interval_overlap(lo1: float, len1: float, lo2: float, len2: float) -> float:
    """Length of the overlap of two angular intervals on the circle."""
    total = 0.0
    base = lo1 % _TWO_PI
    for shift in (-_TWO_PI, 0.0, _TWO_PI):
        s2 = (lo2 % _TWO_PI) + shift
        lo = max(base, s2)
        hi = min(base + len1, s2 + len2)
        if hi > lo:
            total += hi - lo
    return total


def _edge_pair_intersections(e1: Edge, e2: Edge, tol_abs: float):
    """All intersection points of two edges, plus an overlap flag."""
    if isinstance(e1, Segment) and isinstance(e2, Segment):
        hits, overlap = _seg_seg_intersections(e1.start, e1.end, e2.start, e2.end)
        return [h[0] for h in hits], overlap
    if isinstance(e1, Segment) or isinstance(e2, Segment):
        seg, arc = (e1, e2) if isinstance(e1, Segment) else (e2, e1)
        pts = []
        for p, _u in segment_circle_intersections(seg.start, seg.end, arc.center, arc.radius):
            inside, _m = angle_in_sweep(arc, arc.angle_of_point(p))
            if inside or _m * arc.radius <= tol_abs:
                pts.append(p)
        return pts, False
    # arc-arc
    same_circle = (
        math.dist(e1.center, e2.center) <= tol_abs
        and abs(e1.radius - e2.radius) <= tol_abs
    )
    if same_circle:
        lo1 = e1.start_angle if e1.ccw else e1.start_angle - e1.sweep
        lo2 = e2.start_angle if e2.ccw else e2.start_angle - e2.sweep
        ang_tol = tol_abs / max(e1.radius, 1e-300)
        overlap = _circular_interval_overlap(lo1, e1.sweep, lo2, e2.sweep) > 2.0 * ang_tol
        pts = []
        for p in (e1.start, e1.end):
            ins, m = angle_in_sweep(e2, e2.angle_of_point(p))
            if ins or m * e2.radius <= tol_abs:
                pts.append(p)
        return pts, overlap
    pts = []
    for p in circle_circle_intersections(e1.center, e1.radius, e2.center, e2.radius):
        ok = True
        for arc in (e1, e2):
            ins, m = angle_in_sweep(arc, arc.angle_of_point(p))
            if not ins and m * arc.radius > tol_abs:
                ok = False
                break
        if ok:
            pts.append(p)
    return pts, False


# ---------------------------------------------------------------------------
# Domain
# ---------------------------------------------------------------------------


def _edge_green(edge: Edge) -> float:
    """Contribution of one edge to the Green-theorem area integral."""
    if isinstance(edge, Segment):
        return 0.5 * _cross(edge.start, edge.end)
    delta = edge.sweep if edge.ccw else -edge.sweep
    p, q = edge.start, edge.end
    return 0.5 * (edge.radius * edge.radius * delta + _cross(edge.center, _sub(q, p)))


def _partial_green(edge: Edge, t0: float, t1: float) -> float:
    if isinstance(edge, Segment):
        return 0.5 * _cross(edge.point_at_local(t0), edge.point_at_local(t1))
    delta = edge._angle_at(t1) - edge._angle_at(t0)
    p, q = edge.point_at_local(t0), edge.point_at_local(t1)
    return 0.5 * (edge.radius * edge.radius * delta + _cross(edge.center, _sub(q, p)))


@dataclass(frozen=True)
class PlanarDomain:
    """Closed, simple, counterclockwise chain of segments and arcs.

    Construct through :func:`make_domain` (or the convenience constructors),
    which validate closure, orientation and simplicity.
    """

    edges: tuple[Edge, ...]

    @cached_property
    def edge_lengths(self) -> tuple[float, ...]:
        return tuple(e.length for e in self.edges)

    @cached_property
    def cumlens(self) -> np.ndarray:
        return np.concatenate(([0.0], np.cumsum(self.edge_lengths)))

    @property
    def perimeter(self) -> float:
        return float(self.cumlens[-1])

    @cached_property
    def vertices(self) -> tuple[Point, ...]:
        return tuple(e.start for e in self.edges)

    @cached_property
    def bbox(self) -> tuple[float, float, float, float]:
        """Axis-aligned bounding box (xmin, ymin, xmax, ymax)."""
        xs: list[float] = []
        ys: list[float] = []
        for e in self.edges:
            xs.extend((e.start[0], e.end[0]))
            ys.extend((e.start[1], e.end[1]))
            if isinstance(e, Arc):
                # include the four axis-extreme points that lie on the arc
                for phi in (0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi):
                    ins, _ = angle_in_sweep(e, phi)
                    if ins:
                        xs.append(e.center[0] + e.radius * math.cos(phi))
                        ys.append(e.center[1] + e.radius * math.sin(phi))
        return (min(xs), min(ys), max(xs), max(ys))

    @cached_property
    def scale(self) -> float:
        x0, y0, x1, y1 = self.bbox
        return max(math.hypot(x1 - x0, y1 - y0), 1e-300)

    @cached_property
    def area(self) -> float:
        return sum(_edge_green(e) for e in self.edges)

    @cached_property
    def interior_angles(self) -> tuple[float, ...]:
        """Interior angle at each vertex; pi at a smooth join."""
        out = []
        n = len(self.edges)
        for j in range(n):
            prev = self.edges[(j - 1) % n]
            t_in = prev.tangent_at_local(prev.length)
            t_out = self.edges[j].tangent_at_local(0.0)
            turn = math.atan2(_cross(t_in, t_out), _dot(t_in, t_out))
            out.append(math.pi - turn)
        return tuple(out)

    @cached_property
    def is_convex(self) -> bool:
        if any(theta > math.pi + 1e-9 for theta in self.interior_angles):
            return False
        return all(e.ccw for e in self.edges if isinstance(e, Arc))

    # -- boundary parameterisation ------------------------------------

    def _norm_s(self, s: float) -> float:
        s = s % self.perimeter
        return 0.0 if s == self.perimeter else s

    def edge_index_at(self, s: float) -> tuple[int, float]:
        """Edge index and local arclength for boundary position ``s``."""
        s = self._norm_s(s)
        i = int(np.searchsorted(self.cumlens, s, side="right")) - 1
        i = min(max(i, 0), len(self.edges) - 1)
        return i, s - float(self.cumlens[i])

    def point_at(self, s: float) -> Point:
        i, t = self.edge_index_at(s)
        return self.edges[i].point_at_local(t)

    def tangent_after(self, s: float) -> Point:
        i, t = self.edge_index_at(s)
        return self.edges[i].tangent_at_local(t)

    def vertex_arclength(self, j: int) -> float:
        return float(self.cumlens[j % len(self.edges)])

    def boundary_pieces(self, s0: float, s1: float) -> list[tuple[int, float, float]]:
        """Per-edge pieces covering the boundary walk ccw from s0 to s1.

        Each piece is ``(edge_index, t_start, t_end)`` in local arclength.
        Returns an empty list when the walk has zero length.
        """
        length = (s1 - s0) % self.perimeter
        if length == 0.0:
            return []
        i, t = self.edge_index_at(s0)
        pieces = []
        remaining = length
        guard = 2 * len(self.edges) + 2
        while remaining > 1e-12 * self.perimeter and guard > 0:
            guard -= 1
            avail = self.edge_lengths[i] - t
            take = min(avail, remaining)
            if take > 0.0:
                pieces.append((i, t, t + take))
            remaining -= take
            i = (i + 1) % len(self.edges)
            t = 0.0
        return pieces

    def boundary_green(self, s0: float, s1: float) -> float:
        """Green-area integral along the ccw boundary walk from s0 to s1."""
        return sum(
            _partial_green(self.edges[i], t0, t1)
            for i, t0, t1 in self.boundary_pieces(s0, s1)
        )


def convex_corner_indices(domain: PlanarDomain, *, margin: float = 1e-9) -> list[int]:
    """Vertex indices whose interior angle is strictly below pi."""
    return [
        j
        for j, theta in enumerate(domain.interior_angles)
        if theta < math.pi - margin
    ]


def is_disk(domain: PlanarDomain) -> bool:
    e = domain.edges
    return len(e) == 1 and isinstance(e[0], Arc) and abs(e[0].sweep - _TWO_PI) < 1e-12


def regular_ngon_order(domain: PlanarDomain, *, tol: float = 1e-9) -> int | None:
    """Detect a regular polygon; returns its vertex count, else ``None``."""
    n = len(domain.edges)
    if n < 3 or not all(isinstance(e, Segment) for e in domain.edges):
        return None
    if not domain.is_convex:
        return None
    lens = domain.edge_lengths
    if max(lens) - min(lens) > tol * domain.scale:
        return None
    cx = sum(v[0] for v in domain.vertices) / n
    cy = sum(v[1] for v in domain.vertices) / n
    radii = [math.dist(v, (cx, cy)) for v in domain.vertices]
    if max(radii) - min(radii) > tol * domain.scale:
        return None
    return n


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def _validate_and_build(edges: tuple[Edge, ...], tol: float) -> PlanarDomain:
    if not edges:
        raise InvalidGeometryError("domain needs at least one edge")

    # rough scale from raw endpoints, for absolute tolerances
    coords = [abs(c) for e in edges for p in (e.start, e.end) for c in p]
    scale = max(max(coords), 1.0)
    tol_abs = tol * scale

    for e in edges:
        if isinstance(e, Arc) and e.radius <= tol_abs:
            raise InvalidGeometryError(f"arc radius {e.radius} is not positive")
        if e.length <= tol_abs:
            raise InvalidGeometryError("zero-length edge in boundary chain")

    n = len(edges)
    if n == 1:
        e = edges[0]
        if not (isinstance(e, Arc) and abs(e.sweep - _TWO_PI) <= 1e-9):
            raise InvalidGeometryError("a single-edge domain must be a full circle")
    for j in range(n):
        a = edges[j].end
        b = edges[(j + 1) % n].start
        if math.dist(a, b) > tol_abs and n > 1:
            raise InvalidGeometryError(
                f"boundary chain is not closed between edges {j} and {(j + 1) % n}: "
                f"{a} vs {b}"
            )

    signed = sum(_edge_green(e) for e in edges)
    if abs(signed) <= tol_abs * tol_abs:
        raise InvalidGeometryError("boundary chain encloses no area")
    if signed < 0.0:
        edges = tuple(e.reversed() for e in reversed(edges))

    # simplicity: no two edges may intersect except adjacent ones at their
    # shared vertex, and no edge pair may overlap along a stretch
    for i in range(n):
        for j in range(i + 1, n):
            pts, overlap = _edge_pair_intersections(edges[i], edges[j], tol_abs)
            if overlap:
                raise InvalidGeometryError(
                    f"edges {i} and {j} overlap along the boundary"
                )
            allowed: list[Point] = []
            if j == i + 1:
                allowed.append(edges[j].start)
            if i == 0 and j == n - 1:
                allowed.append(edges[0].start)
            for p in pts:
                if all(math.dist(p, q) > tol_abs for q in allowed):
                    raise InvalidGeometryError(
                        f"boundary is not simple: edges {i} and {j} meet at {p}"
                    )

    dom = PlanarDomain(edges)
    for j, theta in enumerate(dom.interior_angles):
        if theta <= 1e-9 or theta >= _TWO_PI - 1e-9:
            raise InvalidGeometryError(
                f"degenerate corner at vertex {j} (interior angle {theta})"
            )
    return dom


def make_domain(edges: Iterable[Edge], *, tol: float = TAU_GEOM) -> PlanarDomain:
    """Build a validated domain from an edge chain.

    Checks edge sanity, closure, orientation (reversing a clockwise chain),
    simplicity, and corner non-degeneracy.  Raises
    :class:`~escobar.errors.InvalidGeometryError` on failure.
    """
    return _validate_and_build(tuple(edges), tol)


def make_polygon(
    points: Sequence[Sequence[float]], *, on_collinear: str = "reject"
) -> PlanarDomain:
    """Simple polygon from a vertex list (either orientation).

    ``on_collinear`` controls straight-through vertices: ``"reject"`` raises,
    ``"merge"`` silently drops them.
    """
    pts: list[Point] = [(float(p[0]), float(p[1])) for p in points]
    if len(pts) >= 2 and math.dist(pts[0], pts[-1]) <= 1e-12 * max(
        1.0, max(abs(c) for q in pts for c in q)
    ):
        pts.pop()
    if len(pts) < 3:
        raise InvalidParameterError("a polygon needs at least 3 distinct vertices")
    if on_collinear not in ("reject", "merge"):
        raise InvalidParameterError(f"unknown on_collinear mode {on_collinear!r}")

    scale = max(1.0, max(abs(c) for q in pts for c in q))
    kept: list[Point] = []
    m = len(pts)
    for j in range(m):
        a, b, c = pts[(j - 1) % m], pts[j], pts[(j + 1) % m]
        u = _sub(b, a)
        v = _sub(c, b)
        if math.hypot(*u) <= 1e-12 * scale or math.hypot(*v) <= 1e-12 * scale:
            raise InvalidGeometryError("repeated consecutive polygon vertices")
        if abs(_cross(u, v)) <= 1e-12 * math.hypot(*u) * math.hypot(*v) and _dot(u, v) > 0:
            if on_collinear == "reject":
                raise InvalidGeometryError(
                    f"collinear vertex {b} (pass on_collinear='merge' to drop it)"
                )
            continue
        kept.append(b)
    if len(kept) < 3:
        raise InvalidGeometryError("polygon degenerates after merging collinear vertices")
    segs = [Segment(kept[j], kept[(j + 1) % len(kept)]) for j in range(len(kept))]
    return make_domain(segs)


def make_disk(radius: float = 1.0, center: Point = (0.0, 0.0)) -> PlanarDomain:
    if radius <= 0:
        raise InvalidParameterError(f"disk radius must be positive, got {radius}")
    return make_domain([Arc(center, float(radius), 0.0, _TWO_PI, True)])


def make_regular_polygon(n: int, circumradius: float = 1.0) -> PlanarDomain:
    """Regular n-gon with vertices on the circle of given circumradius,
    the first vertex at angle 0."""
    if n < 3:
        raise InvalidParameterError(f"regular polygon needs n >= 3, got {n}")
    if circumradius <= 0:
        raise InvalidParameterError("circumradius must be positive")
    pts = [
        (
            circumradius * math.cos(_TWO_PI * j / n),
            circumradius * math.sin(_TWO_PI * j / n),
        )
        for j in range(n)
    ]
    return make_polygon(pts)


def scaled(domain: PlanarDomain, factor: float) -> PlanarDomain:
    """Dilate a domain about the origin by ``factor > 0``."""
    if factor <= 0:
        raise InvalidParameterError(f"scale factor must be positive, got {factor}")
    out: list[Edge] = []
    for e in domain.edges:
        if isinstance(e, Segment):
            out.append(
                Segment(
                    (factor * e.start[0], factor * e.start[1]),
                    (factor * e.end[0], factor * e.end[1]),
                )
            )
        else:
            out.append(
                Arc(
                    (factor * e.center[0], factor * e.center[1]),
                    factor * e.radius,
                    e.start_angle,
                    e.end_angle,
                    e.ccw,
                )
            )
    # scaling preserves validity; skip re-validation
    return PlanarDomain(tuple(out))


# ---------------------------------------------------------------------------
# Queries
# ---------------------------------------------------------------------------


def project_to_boundary(domain: PlanarDomain, p: Point) -> tuple[float, float]:
    """Arclength of the boundary point nearest to ``p`` and its distance."""
    best_s = 0.0
    best_d = math.inf
    for i, e in enumerate(domain.edges):
        if isinstance(e, Segment):
            r = _sub(e.end, e.start)
            ll = _dot(r, r)
            u = min(max(_dot(_sub(p, e.start), r) / ll, 0.0), 1.0) if ll > 0 else 0.0
            q = (e.start[0] + u * r[0], e.start[1] + u * r[1])
            d = math.dist(p, q)
            t = u * e.length
        else:
            v = _sub(p, e.center)
            rho = math.hypot(*v)
            if rho <= 1e-300:
                d, t = e.radius, 0.0
            else:
                phi = math.atan2(v[1], v[0])
                inside, _ = angle_in_sweep(e, phi)
                if inside:
                    d = abs(rho - e.radius)
                    t = e.local_t_of_angle(phi)
                else:
                    d0 = math.dist(p, e.start)
                    d1 = math.dist(p, e.end)
                    d, t = (d0, 0.0) if d0 <= d1 else (d1, e.length)
        if d < best_d:
            best_d = d
            best_s = domain._norm_s(float(domain.cumlens[i]) + t)
    return best_s, best_d


def contains_point(domain: PlanarDomain, p: Point, *, tol: float = TAU_GEOM) -> bool:
    """Point-in-domain test for the closed region (boundary counts as inside)."""
    tol_abs = tol * domain.scale
    _, d = project_to_boundary(domain, p)
    if d <= tol_abs:
        return True

    for attempt in range(32):
        ang = 0.394821 + _GOLDEN_ANGLE * attempt
        direction = (math.cos(ang), math.sin(ang))
        count = 0
        degenerate = False
        for e in domain.edges:
            if isinstance(e, Segment):
                r = _sub(e.end, e.start)
                denom = _cross(direction, r)
                qp = _sub(e.start, p)
                if abs(denom) <= 1e-14 * e.length:
                    # ray parallel to the edge: degenerate only if collinear
                    if abs(_cross(r, qp)) <= 1e-12 * e.length * max(math.hypot(*qp), 1.0):
                        degenerate = True
                        break
                    continue
                u = _cross(qp, r) / denom
                v = _cross(qp, direction) / denom
                if u <= tol_abs:
                    continue
                if v < -1e-9 or v > 1.0 + 1e-9:
                    continue
                if v < 1e-9 or v > 1.0 - 1e-9:
                    degenerate = True
                    break
                count += 1
            else:
                f = _sub(p, e.center)
                roots = _solve_quadratic(
                    1.0, 2.0 * _dot(direction, f), _dot(f, f) - e.radius * e.radius
                )
                for u in roots:
                    if u <= tol_abs:
                        continue
                    hit = (p[0] + u * direction[0], p[1] + u * direction[1])
                    inside, margin = angle_in_sweep(e, e.angle_of_point(hit))
                    if inside and margin < 1e-9 and e.sweep < _TWO_PI - 1e-12:
                        degenerate = True
                        break
                    if not inside and margin < 1e-9:
                        degenerate = True
                        break
                    if inside:
                        count += 1
                if degenerate:
                    break
        if not degenerate:
            return count % 2 == 1
    raise InvalidGeometryError(f"could not classify point {p} after 32 ray casts")


def chord_is_interior(
    domain: PlanarDomain, s0: float, s1: float, *, tol: float = TAU_GEOM
) -> bool:
    """Whether the open chord between boundary points s0, s1 stays inside.

    The chord must have positive length, must not run along the boundary, and
    must not meet the boundary except at its two endpoints.
    """
    p = domain.point_at(s0)
    q = domain.point_at(s1)
    chord_len = math.dist(p, q)
    tol_abs = tol * domain.scale
    if chord_len <= tol_abs:
        return False
    # exclusion radius around the chord endpoints for boundary hits
    excl = max(1e-12 * domain.scale, 1e-6 * chord_len)

    for e in domain.edges:
        if isinstance(e, Segment):
            hits, overlap = _seg_seg_intersections(p, q, e.start, e.end)
            if overlap:
                return False
            pts = [h[0] for h in hits]
        else:
            pts = []
            for pt, _u in segment_circle_intersections(p, q, e.center, e.radius):
                inside, m = angle_in_sweep(e, e.angle_of_point(pt))
                if inside or m * e.radius <= tol_abs:
                    pts.append(pt)
        for pt in pts:
            if math.dist(pt, p) > excl and math.dist(pt, q) > excl:
                return False

    mid = ((p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0)
    return contains_point(domain, mid, tol=tol)


# ---------------------------------------------------------------------------
# JSON round trip
# ---------------------------------------------------------------------------


def domain_to_json(domain: PlanarDomain) -> dict:
    """JSON-serialisable description of a domain (see :func:`domain_from_json`)."""
    edges = []
    for e in domain.edges:
        if isinstance(e, Segment):
            edges.append(
                {"type": "segment", "from": list(e.start), "to": list(e.end)}
            )
        else:
            edges.append(
                {
                    "type": "arc",
                    "center": list(e.center),
                    "radius": e.radius,
                    "start_angle": e.start_angle,
                    "end_angle": e.end_angle,
                    "ccw": e.ccw,
                }
            )
    return {"edges": edges}


def domain_from_json(data: dict) -> PlanarDomain:
    """Parse the dict format produced by :func:`domain_to_json`.

    Format::

        {"edges": [{"type": "segment", "from": [x, y], "to": [x, y]},
                   {"type": "arc", "center": [x, y], "radius": r,
                    "start_angle": a0, "end_angle": a1, "ccw": true}, ...]}
    """
    if not isinstance(data, dict) or "edges" not in data:
        raise InvalidGeometryError("domain JSON must be an object with an 'edges' list")
    edges: list[Edge] = []
    for k, spec in enumerate(data["edges"]):
        try:
            kind = spec["type"]
            if kind == "segment":
                edges.append(
                    Segment(
                        (float(spec["from"][0]), float(spec["from"][1])),
                        (float(spec["to"][0]), float(spec["to"][1])),
                    )
                )
            elif kind == "arc":
                edges.append(
                    Arc(
                        (float(spec["center"][0]), float(spec["center"][1])),
                        float(spec["radius"]),
                        float(spec["start_angle"]),
                        float(spec["end_angle"]),
                        bool(spec.get("ccw", True)),
                    )
                )
            else:
                raise InvalidGeometryError(f"edge {k}: unknown type {kind!r}")
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            raise InvalidGeometryError(f"edge {k}: malformed entry ({exc})") from exc
    return make_domain(edges)
