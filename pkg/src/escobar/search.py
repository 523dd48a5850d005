"""Numerical search for Escobar constants: enumeration, refinement, corners.

Three cooperating engines produce certified upper bounds (every reported
value is the measured max-eta of a validated tuple):

* :func:`enumerate_caps` — exhaustive minimax search over k caps whose cut
  points lie on a uniform m-point boundary grid, with feasibility and
  incumbent pruning and a combinatorial budget guard;
* :func:`refine_caps` — derivative-free local refinement (Nelder-Mead with a
  feasibility penalty) of a cap tuple, never worse than its starting point;
* :func:`corner_family_bound` — nested corner caps/strips distributed over
  the convex corners by a greedy minimax allocation, plus a golden-section
  sweep of the standard corner schedule.

:func:`estimate_ik` orchestrates all of the above.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .constructions import (
    corner_chain_tuple,
    corner_schedule_legs,
    equal_boundary_tuple,
    geometric_legs,
)
from .errors import (
    BudgetExceededError,
    ConstructionFailedError,
    InvalidGeometryError,
    InvalidParameterError,
    NotApplicableError,
)
from .exact import Bound, BoundKind, ik_exact
from .geometry import (
    PlanarDomain,
    Segment,
    _seg_seg_intersections,
    chord_is_interior,
    convex_corner_indices,
    is_disk,
    regular_ngon_order,
)
from .regions import (
    Cap,
    TupleCandidate,
    eta_partial,
    max_eta,
    tuple_to_json,
    validate_tuple,
)

#: Optimiser tolerance: refinement stops improving below this resolution.
TAU_OPT = 1e-7

# ceiling on enumeration work chosen automatically (explicit grids may go
# up to the configured budget instead)
_ENUM_SOFT_CAP = 3_000_000
_M_CAP_CONVEX = 480
_M_CAP_NONCONVEX = 144


@dataclass
class SearchConfig:
    """Knobs for :func:`estimate_ik` and friends."""

    grid_points: Optional[int] = None
    families: tuple[str, ...] = ("caps", "corner-strips")
    restarts: int = 4
    seed: int = 0
    tolerance: float = TAU_OPT
    budget: float = 1e9
    offset_samples: int = 8

    def __post_init__(self):
        known = {"caps", "corner-strips"}
        bad = set(self.families) - known
        if bad:
            raise InvalidParameterError(f"unknown search families: {sorted(bad)}")
        if self.budget <= 0:
            raise InvalidParameterError("budget must be positive")


@dataclass(frozen=True)
class BoundReport:
    """Outcome of a search: a certified value plus its witness and cost."""

    value: float
    kind: BoundKind
    witness: Optional[TupleCandidate]
    method: str
    evaluations: int
    provenance: str
    cross_label: Optional[str] = None


def report_to_json(report: BoundReport) -> dict:
    out = {
        "value": report.value,
        "kind": report.kind.value,
        "method": report.method,
        "evaluations": report.evaluations,
        "provenance": report.provenance,
    }
    if report.cross_label:
        out["cross_label"] = report.cross_label
    if report.witness is not None:
        out["witness"] = tuple_to_json(report.witness)
    return out


# ---------------------------------------------------------------------------
# Grid enumeration
# ---------------------------------------------------------------------------


@dataclass
class _GridTables:
    m: int
    step: float
    svals: np.ndarray
    pts: np.ndarray
    eta: list  # eta[i][w], validity folded in as +inf
    min_eta_by_width: list
    period: int
    convex: bool
    full_validity: bool  # False while the validity mask is geometric-only


def _grid_period(domain: PlanarDomain, m: int) -> int:
    if is_disk(domain):
        return 1
    n = regular_ngon_order(domain)
    if n is not None and m % n == 0:
        return m // n
    return m


def _segment_membership(domain: PlanarDomain, svals: np.ndarray) -> list[list[int]]:
    """Indices of straight edges each grid point lies on (vertices on two)."""
    members: list[list[int]] = []
    n = len(domain.edges)
    for s in svals:
        i, t = domain.edge_index_at(float(s))
        out = []
        if isinstance(domain.edges[i], Segment):
            out.append(i)
        if t <= 1e-12 * domain.perimeter:
            j = (i - 1) % n
            if isinstance(domain.edges[j], Segment):
                out.append(j)
        members.append(out)
    return members


def _prepare_grid(
    domain: PlanarDomain, m: int, *, full_validity: bool
) -> _GridTables:
    per = domain.perimeter
    step = per / m
    svals = np.arange(m) * step
    pts = np.array([domain.point_at(float(s)) for s in svals])
    diff = pts[:, None, :] - pts[None, :, :]
    chord = np.hypot(diff[..., 0], diff[..., 1])
    widx = (np.arange(m)[:, None] + np.arange(m)[None, :]) % m
    chord_w = chord[np.arange(m)[:, None], widx]  # [i, w] = |P_i P_{i+w}|
    with np.errstate(divide="ignore", invalid="ignore"):
        eta = chord_w / (np.arange(m)[None, :] * step)
    eta[:, 0] = np.inf

    if domain.is_convex:
        # a chord is interior unless both ends lie on one common straight edge
        invalid = np.zeros((m, m), dtype=bool)
        members = _segment_membership(domain, svals)
        edge_sets: dict[int, np.ndarray] = {}
        for i, es in enumerate(members):
            for e in es:
                edge_sets.setdefault(e, np.zeros(m, dtype=bool))[i] = True
        for mask in edge_sets.values():
            invalid |= mask[:, None] & mask[None, :]
        invalid_w = invalid[np.arange(m)[:, None], widx]
        eta = np.where(invalid_w, np.inf, eta)
        eta[:, 0] = np.inf
        full = True
    elif full_validity:
        valid = np.ones((m, m), dtype=bool)
        for i in range(m):
            for j in range(i + 1, m):
                ok = chord_is_interior(domain, float(svals[i]), float(svals[j]))
                valid[i, j] = valid[j, i] = ok
        valid_w = valid[np.arange(m)[:, None], widx]
        eta = np.where(valid_w, eta, np.inf)
        eta[:, 0] = np.inf
        full = True
    else:
        full = False

    eta_list = eta.tolist()
    min_eta = np.min(eta, axis=0).tolist()
    return _GridTables(
        m=m,
        step=step,
        svals=svals,
        pts=pts,
        eta=eta_list,
        min_eta_by_width=min_eta,
        period=_grid_period(domain, m),
        convex=domain.is_convex,
        full_validity=full,
    )


def _grid_seeds(domain: PlanarDomain, k: int, tables: _GridTables):
    """Deterministic incumbent tuples on the grid (value, cuts) or (inf, None)."""
    m = tables.m
    eta = tables.eta
    best = math.inf
    best_cuts = None

    def consider(cuts: list[int]) -> None:
        nonlocal best, best_cuts
        val = 0.0
        for j in range(k):
            a, b = cuts[2 * j], cuts[2 * j + 1]
            w = b - a
            if w <= 0 or w >= m:
                return
            e = eta[a % m][w]
            if e >= best:
                return
            val = max(val, e)
        if not tables.convex and not _cuts_chords_ok(tables, cuts):
            return
        if not tables.full_validity:
            # geometric table only: verify the candidate's chords for real
            for j in range(k):
                a, b = cuts[2 * j], cuts[2 * j + 1]
                if not chord_is_interior(
                    domain, float(tables.svals[a % m]), float(tables.svals[b % m])
                ):
                    return
        if val < best:
            best, best_cuts = val, list(cuts)

    if m % k == 0:
        w = m // k
        for off in range(min(w, 64)):
            consider([off + j * w + d for j in range(k) for d in (0, w)])
    else:
        bases = [round(j * m / k) for j in range(k + 1)]
        for off in range(min(4, m)):
            cuts = []
            for j in range(k):
                cuts.extend((off + bases[j], off + bases[j + 1]))
            consider(cuts)
    return best, best_cuts


def _cuts_chords_ok(tables: _GridTables, cuts: Sequence[int]) -> bool:
    """Pairwise chord-crossing check (needed on nonconvex domains only)."""
    m = tables.m
    pts = tables.pts
    k = len(cuts) // 2
    segs = []
    for j in range(k):
        p = tuple(pts[cuts[2 * j] % m])
        q = tuple(pts[cuts[2 * j + 1] % m])
        segs.append((p, q))
    for i in range(k):
        for j in range(i + 1, k):
            p1, q1 = segs[i]
            p2, q2 = segs[j]
            hits, overlap = _seg_seg_intersections(p1, q1, p2, q2)
            same = (p1 == p2 and q1 == q2) or (p1 == q2 and q1 == p2)
            if overlap and not same:
                return False
            excl = 1e-6 * min(math.dist(p1, q1), math.dist(p2, q2))
            for pt, _u, _v in hits:
                if all(math.dist(pt, e) > excl for e in (p1, q1, p2, q2)):
                    return False
    return True


def _w_min_for(tables: _GridTables, best: float) -> int:
    w = 1
    min_eta = tables.min_eta_by_width
    while w < tables.m and min_eta[w] >= best - 1e-12:
        w += 1
    return w


def _enum_estimate(m: int, k: int, period: int, w_min: int) -> int:
    slack = m - k * w_min
    if slack < 0:
        return 0
    return period * comb(slack + 2 * k - 1, 2 * k - 1)


def enumerate_caps(
    domain: PlanarDomain, k: int, m: int, *, budget: float = 1e9
) -> BoundReport:
    """Minimax-optimal k caps with cut points on the uniform m-point grid.

    Cut points may be shared between adjacent caps but each cap's arc must
    have positive width.  Refuses to start (raising
    :class:`~escobar.errors.BudgetExceededError`) when a combinatorial
    estimate of the pruned search exceeds ``budget``; the estimate uses the
    minimum cap width that could still improve on the deterministic seeds.
    """
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}")
    if m < 2 * k:
        raise InvalidParameterError(f"grid needs at least 2k points, got m={m}, k={k}")
    if m > 5000:
        raise InvalidParameterError(f"grid too fine (m={m} > 5000)")
    tables = _prepare_grid(domain, m, full_validity=True)
    return _run_enumeration(domain, k, tables, budget)


def _run_enumeration(
    domain: PlanarDomain, k: int, tables: _GridTables, budget: float
) -> BoundReport:
    m = tables.m
    period = tables.period
    eta = tables.eta
    need_cross = not tables.convex

    best, best_cuts = _grid_seeds(domain, k, tables)
    w_min = _w_min_for(tables, best)
    estimate = _enum_estimate(m, k, period, w_min)
    if estimate > budget:
        raise BudgetExceededError(
            f"enumeration on m={m}, k={k} needs an estimated {estimate:.3g} nodes "
            f"(budget {budget:.3g})",
            estimate=float(estimate),
            budget=float(budget),
        )

    nodes = 0
    end_abs = 0  # set per c0

    def dfs(cap_idx: int, pos: int, cuts: list[int], running: float) -> None:
        nonlocal nodes, best, best_cuts, w_min
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                f"enumeration stopped after {nodes} nodes (budget {budget:.3g})",
                estimate=float(nodes),
                budget=float(budget),
            )
        if cap_idx == k:
            if need_cross and not _cuts_chords_ok(tables, cuts):
                return
            best = running
            best_cuts = list(cuts)
            w_min = _w_min_for(tables, best)
            return
        remaining_after = k - cap_idx - 1
        if cap_idx == 0:
            starts = (pos,)
        else:
            starts = range(pos, end_abs - w_min * (remaining_after + 1) + 1)
        for start in starts:
            w_cap = end_abs - start - w_min * remaining_after
            row = eta[start % m]
            for w in range(w_min, w_cap + 1):
                e = row[w]
                if e < best:
                    cuts.append(start)
                    cuts.append(start + w)
                    dfs(cap_idx + 1, start + w, cuts, max(running, e))
                    cuts.pop()
                    cuts.pop()

    for c0 in range(period):
        end_abs = c0 + m
        if m - k * w_min >= 0:
            dfs(0, c0, [], 0.0)

    if best_cuts is None:
        return BoundReport(
            math.inf, BoundKind.ESTIMATE, None, f"enumeration m={m}",
            nodes, "no valid tuple on this grid",
        )
    caps = tuple(
        Cap(
            float(tables.svals[best_cuts[2 * j] % m]),
            float(tables.svals[best_cuts[2 * j + 1] % m]),
        )
        for j in range(k)
    )
    witness = TupleCandidate(domain, caps)
    violations = validate_tuple(witness)
    if violations:
        raise ConstructionFailedError(
            f"enumeration produced an invalid witness: {violations[0].detail}"
        )
    value = max_eta(witness)
    return BoundReport(
        value, BoundKind.UPPER_BOUND, witness, f"enumeration m={m}",
        nodes, f"grid minimax over {k} caps, period {period}",
    )


# ---------------------------------------------------------------------------
# Local refinement
# ---------------------------------------------------------------------------


def _cuts_of(tc: TupleCandidate) -> list[float]:
    cuts: list[float] = []
    for r in tc.regions:
        if not isinstance(r, Cap):
            raise NotApplicableError("refinement handles all-cap tuples only")
        cuts.extend((r.a, r.b))
    return cuts


def refine_caps(
    domain: PlanarDomain,
    initial: TupleCandidate | Sequence[float],
    config: Optional[SearchConfig] = None,
) -> BoundReport:
    """Nelder-Mead refinement of a cap tuple (never worse than ``initial``).

    The 2k cut positions are optimised directly; infeasible orderings and
    non-interior chords are pushed back by a large penalty, and the best
    *valid* tuple ever evaluated is what gets reported.
    """
    config = config or SearchConfig()
    per = domain.perimeter
    if isinstance(initial, TupleCandidate):
        cuts0 = _cuts_of(initial)
    else:
        cuts0 = [float(c) for c in initial]
    if len(cuts0) < 2 or len(cuts0) % 2:
        raise InvalidParameterError("need an even number of cut positions (2 per cap)")
    k = len(cuts0) // 2
    # unwrap into an increasing vector so the pattern test is linear
    x0 = np.array(cuts0, dtype=float)
    for i in range(1, 2 * k):
        while x0[i] < x0[i - 1] - 1e-12 * per:
            x0[i] += per

    state = {"best": math.inf, "x": None, "evals": 0}
    min_w = 1e-9 * per

    def objective(x: np.ndarray) -> float:
        state["evals"] += 1
        viol = 0.0
        for j in range(k):
            w = x[2 * j + 1] - x[2 * j]
            if w < min_w:
                viol += min_w - w
        for j in range(k - 1):
            g = x[2 * j + 2] - x[2 * j + 1]
            if g < 0.0:
                viol += -g
        wrap = (x[0] + per) - x[2 * k - 1]
        if wrap < 0.0:
            viol += -wrap
        if viol > 0.0:
            return 1e3 + viol / per
        caps = tuple(Cap(x[2 * j] % per, x[2 * j + 1] % per) for j in range(k))
        bad = 0
        val = 0.0
        for c in caps:
            if not chord_is_interior(domain, c.a, c.b):
                bad += 1
            else:
                val = max(val, eta_partial(domain, c))
        if bad:
            return 500.0 + bad
        if not domain.is_convex:
            tc = TupleCandidate(domain, caps)
            if validate_tuple(tc):
                return 400.0
        if val < state["best"]:
            state["best"] = val
            state["x"] = np.array(x)
        return val

    v0 = objective(x0)
    if not math.isfinite(v0) or v0 >= 400.0:
        raise InvalidParameterError("refinement needs a valid starting tuple")

    rng = np.random.default_rng(config.seed)
    sigma = 0.25 * per / (4 * k)
    maxfev = 300 + 150 * k
    for r in range(max(1, config.restarts)):
        xs = x0 if r == 0 else x0 + rng.normal(0.0, sigma, size=2 * k)
        minimize(
            objective,
            xs,
            method="Nelder-Mead",
            options={
                "adaptive": True,
                "xatol": 1e-3 * config.tolerance * per,
                "fatol": 1e-2 * config.tolerance,
                "maxfev": maxfev,
            },
        )

    xb = state["x"]
    caps = tuple(Cap(xb[2 * j] % per, xb[2 * j + 1] % per) for j in range(k))
    witness = TupleCandidate(domain, caps)
    if validate_tuple(witness):
        # numerical edge: fall back to the starting tuple
        caps = tuple(Cap(x0[2 * j] % per, x0[2 * j + 1] % per) for j in range(k))
        witness = TupleCandidate(domain, caps)
    value = max_eta(witness)
    return BoundReport(
        value, BoundKind.UPPER_BOUND, witness, "nelder-mead",
        state["evals"], f"local refinement from {v0:.12g}",
    )


# ---------------------------------------------------------------------------
# Corner family
# ---------------------------------------------------------------------------


def _corner_geometry(domain: PlanarDomain, c: int) -> tuple[float, float, float]:
    """(theta, t_min, t_max) for chains at convex corner ``c``."""
    n = len(domain.edges)
    theta = domain.interior_angles[c]
    prev_len = domain.edge_lengths[(c - 1) % n]
    next_len = domain.edge_lengths[c]
    t_max = 0.45 * min(prev_len, next_len)
    t_min = max(1e-8 * domain.perimeter, 1e-9 * t_max)
    if t_min >= t_max:
        t_min = t_max / 4.0
    return theta, t_min, t_max


def _chain_eta_model(theta: float, t_min: float, t_max: float, d: int) -> float:
    """Predicted max eta of a d-deep geometric chain at a corner."""
    s = math.sin(theta / 2.0)
    if d <= 1:
        return s
    r = (t_max / t_min) ** (1.0 / (d - 1))
    if r <= 1.0:
        return math.inf
    return s * (r + 1.0) / (r - 1.0)


def corner_family_bound(
    domain: PlanarDomain, k: int, config: Optional[SearchConfig] = None
) -> BoundReport:
    """Upper bound from nested corner regions spread over the convex corners.

    A greedy minimax allocation distributes the k regions over the corners
    (each corner receives a geometric chain of caps/strips); a golden-section
    sweep of the single-corner schedule at the sharpest corner is also tried.
    """
    config = config or SearchConfig()
    corners = convex_corner_indices(domain)
    if not corners:
        raise NotApplicableError("domain has no strictly convex corner")
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}")
    evals = 0

    geom = {c: _corner_geometry(domain, c) for c in corners}

    # greedy minimax allocation: repeatedly give the next region to the
    # corner whose chain grows the least
    alloc = {c: 0 for c in corners}
    heap = []
    for c in corners:
        theta, t0, t1 = geom[c]
        heapq.heappush(heap, (_chain_eta_model(theta, t0, t1, 1), theta, c, 1))
    for _ in range(k):
        val, theta, c, d = heapq.heappop(heap)
        alloc[c] = d
        t0, t1 = geom[c][1], geom[c][2]
        heapq.heappush(heap, (_chain_eta_model(theta, t0, t1, d + 1), theta, c, d + 1))

    candidates: list[tuple[float, TupleCandidate, str]] = []

    regions = []
    try:
        shrink = 1.0
        for attempt in range(6):
            regions = []
            try:
                for c in corners:
                    if alloc[c] == 0:
                        continue
                    theta, t0, t1 = geom[c]
                    legs = geometric_legs(t0, t1 * shrink, alloc[c])
                    part = corner_chain_tuple(domain, c, legs, validate=False)
                    regions.extend(part.regions)
                tc = TupleCandidate(domain, tuple(regions))
                evals += 1
                if validate_tuple(tc):
                    raise ConstructionFailedError("allocation tuple invalid")
                candidates.append((max_eta(tc), tc, "corner-allocation"))
                break
            except (ConstructionFailedError, InvalidGeometryError):
                shrink *= 0.5
    except InvalidParameterError:
        pass

    # golden-section sweep of the standard schedule at the sharpest corner
    sharpest = min(corners, key=lambda c: (geom[c][0], c))

    def sweep_objective(log_eps: float) -> float:
        nonlocal evals
        evals += 1
        try:
            scale = domain.perimeter
            legs = [t * scale for t in corner_schedule_legs(k, 10.0**log_eps)]
            tc = corner_chain_tuple(domain, sharpest, legs)
        except (ConstructionFailedError, InvalidGeometryError, InvalidParameterError):
            return 2.0  # finite plateau keeps the bounded minimiser stable
        val = max_eta(tc)
        sweep_results.append((val, tc))
        return val

    sweep_results: list[tuple[float, TupleCandidate]] = []
    minimize_scalar(
        sweep_objective,
        bounds=(-14.0, math.log10(0.2)),
        method="bounded",
        options={"xatol": 0.05, "maxiter": 40},
    )
    if sweep_results:
        val, tc = min(sweep_results, key=lambda t: t[0])
        candidates.append((val, tc, "corner-schedule"))

    if not candidates:
        raise ConstructionFailedError(
            f"no corner construction fits this domain for k={k}"
        )
    value, witness, method = min(candidates, key=lambda t: t[0])
    theta_min = geom[sharpest][0]
    return BoundReport(
        value, BoundKind.UPPER_BOUND, witness, method, evals,
        f"nested corner regions; sharpest corner angle {theta_min:.12g}",
    )


# ---------------------------------------------------------------------------
# Orchestration
# ---------------------------------------------------------------------------


def _grid_candidates(domain: PlanarDomain, k: int) -> list[int]:
    m_cap = _M_CAP_CONVEX if domain.is_convex else _M_CAP_NONCONVEX
    units = set()
    if is_disk(domain):
        units.add(2 * k)
    else:
        n = regular_ngon_order(domain)
        if n is not None:
            units.add(n)
            units.add(math.lcm(n, 2 * k))
        else:
            units.add(2 * k)
    out = set()
    for u in units:
        j = 1
        while j * u <= m_cap:
            if j * u >= 2 * k:
                out.add(j * u)
            j += 1
    return sorted(out, reverse=True)


def _auto_enumerate(
    domain: PlanarDomain, k: int, config: SearchConfig
) -> Optional[BoundReport]:
    """Pick the finest grid whose estimated cost fits, then enumerate."""
    soft = min(config.budget, _ENUM_SOFT_CAP)
    for m in _grid_candidates(domain, k):
        light = _prepare_grid(domain, m, full_validity=False)
        best, _cuts = _grid_seeds(domain, k, light)
        w_min = _w_min_for(light, best)
        estimate = _enum_estimate(m, k, light.period, w_min)
        if estimate > soft:
            continue
        if light.full_validity:
            tables = light
        else:
            tables = _prepare_grid(domain, m, full_validity=True)
        try:
            return _run_enumeration(domain, k, tables, soft)
        except BudgetExceededError:
            continue
    return None


def _equal_boundary_report(
    domain: PlanarDomain, k: int, config: SearchConfig
) -> Optional[BoundReport]:
    per = domain.perimeter
    offsets = []
    for i in range(len(domain.edges)):
        offsets.append(float(domain.cumlens[i]) + domain.edge_lengths[i] / 2.0)
    offsets.extend(j * per / (k * max(1, config.offset_samples)) for j in range(config.offset_samples))
    best = None
    evals = 0
    for off in offsets:
        try:
            tc = equal_boundary_tuple(domain, k, off)
        except (ConstructionFailedError, InvalidGeometryError):
            continue
        evals += 1
        val = max_eta(tc)
        if best is None or val < best[0]:
            best = (val, tc, off)
    if best is None:
        return None
    return BoundReport(
        best[0], BoundKind.UPPER_BOUND, best[1], "equal-boundary", evals,
        f"equal boundary split, offset {best[2]:.12g}",
    )


def _cross_label(domain: PlanarDomain, k: int, value: float, tol: float) -> Optional[str]:
    try:
        known: Bound = ik_exact(domain, k)
    except (NotApplicableError, InvalidParameterError):
        return None
    diff = value - known.value
    if known.kind is BoundKind.EXACT:
        if abs(diff) <= tol:
            return f"matches closed form {known.value:.12g}"
        if diff < 0:
            return (
                f"below closed form {known.value:.12g} by {-diff:.3g} "
                "(numerical witness inconsistency)"
            )
        return f"above closed form {known.value:.12g} by {diff:.3g}"
    if diff <= tol:
        return f"at or below closed-form upper bound {known.value:.12g}"
    return f"above closed-form upper bound {known.value:.12g} by {diff:.3g}"


def estimate_ik(
    domain: PlanarDomain, k: int, config: Optional[SearchConfig] = None
) -> BoundReport:
    """Best certified upper bound for I_k(domain) across all search families.

    Every finite result is the measured max-eta of a validated tuple; the
    report records which engine produced it and how much work was spent.
    ``config.grid_points`` forces a specific enumeration grid (budget errors
    then propagate); otherwise the grid is chosen automatically.
    """
    config = config or SearchConfig()
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}")
    if k == 1:
        return BoundReport(
            0.0, BoundKind.EXACT, None, "closed-form", 0,
            "I_1 = 0: a single cap can shrink towards a boundary point",
        )

    reports: list[BoundReport] = []
    evals = 0

    if "caps" in config.families:
        eq = _equal_boundary_report(domain, k, config)
        if eq is not None:
            reports.append(eq)
            evals += eq.evaluations

        if config.grid_points is not None:
            enum = enumerate_caps(domain, k, config.grid_points, budget=config.budget)
        else:
            enum = _auto_enumerate(domain, k, config)
        if enum is not None:
            evals += enum.evaluations
            if enum.witness is not None:
                reports.append(enum)

        seed_reports = [r for r in reports if r.witness is not None]
        if seed_reports:
            seed = min(seed_reports, key=lambda r: r.value)
            try:
                refined = refine_caps(domain, seed.witness, config)
                evals += refined.evaluations
                reports.append(refined)
            except (InvalidParameterError, NotApplicableError):
                pass

    if "corner-strips" in config.families:
        try:
            corner = corner_family_bound(domain, k, config)
            evals += corner.evaluations
            reports.append(corner)
        except (NotApplicableError, ConstructionFailedError):
            pass

    finite = [r for r in reports if math.isfinite(r.value)]
    if not finite:
        raise ConstructionFailedError(
            f"no search family produced a valid tuple for k={k} on this domain"
        )
    best = min(finite, key=lambda r: r.value)
    label = _cross_label(domain, k, best.value, config.tolerance)
    return BoundReport(
        best.value, best.kind, best.witness, best.method, evals,
        best.provenance, cross_label=label,
    )
