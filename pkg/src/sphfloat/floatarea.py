"""Curvature integrals, floating area, limit experiments and their checks (S^2).

The floating area of a proper body is ``Omega(K) = int_{bd K} H^{1/3}``,
with ``H`` the geodesic curvature of the boundary. Boundary integrals are
evaluated in a gnomonic chart: curved pieces by Gauss-Legendre nodes in the
normal angle, with the Euclidean curvature pulled back to the sphere and
the arc-length element ``sqrt(1 + (x.n)^2) / (1 + |x|^2)`` applied;
straight pieces are geodesic and carry zero curvature.

Regions without an analytic boundary (support-sampled polygons) use a
discrete estimator: algebraic circle fits through five consecutive
boundary samples.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gamma

import numpy as np
from scipy.optimize import bisect, curve_fit

from .body import (AnalyticBody, CapBody, ChartBody, PolytopeBody, SphericalBody, chart_region,
                   find_pole, intersect_hemisphere, intersection, is_proper, native_chart, polar,
                   union, volume)
from .chart import BoundaryDatum, Chart, curvature_pullback, jac_boundary_inv
from .errors import (BadEnclosure, BoundaryPointMismatch, NoValidPole, UnsupportedBody,
                     ZeroCurvaturePoint)
from .floatbody import (enclosure_radii, euclid_area_difference, euclid_floating_body,
                        radial_boundary_point, spherical_floating_body)
from .quadrature import DirectionGrid, body_volume, volume_difference
from .regions import Arc, Ellipse, Polygon, Region, Segment, circle_fit_curvature, unit2
from .sphere import Hemisphere, geodesic_distance, unit_vector

log = logging.getLogger(__name__)

DISCRETE_SAMPLES = 1024


def unit_ball_volume(k: int) -> float:
    """Volume of the unit ball of R^k."""
    return float(np.pi ** (k / 2) / gamma(k / 2 + 1))


def sphere_measure(k: int) -> float:
    """Surface measure of the unit sphere S^k."""
    return float(2 * np.pi ** ((k + 1) / 2) / gamma((k + 1) / 2))


def floating_constant(n: int = 2) -> float:
    """``c_n = 1/2 ((n + 1) / kappa_{n-1})^{2/(n+1)}``; ``c_2 = (3/2)^{2/3} / 2``."""
    return 0.5 * ((n + 1) / unit_ball_volume(n - 1)) ** (2 / (n + 1))


def cap_floating_area(alpha: float) -> float:
    """``Omega(C(alpha)) = 2 pi cot(alpha)^{1/3} sin(alpha)`` on S^2."""
    return float(2 * np.pi * np.cos(alpha) ** (1 / 3) * np.sin(alpha) ** (2 / 3))


# ---------------------------------------------------------------------------
# boundary nodes


@dataclass(frozen=True, eq=False)
class CurvatureField:
    """Boundary quadrature of a body with spherical curvature at every node.

    ``weights`` are spherical arc-length weights; ``flat_length`` is the
    total length of straight (geodesic, zero-curvature) boundary pieces
    that carry no nodes.
    """

    body: SphericalBody
    mode: str
    points: np.ndarray
    normals: np.ndarray
    curvature: np.ndarray
    weights: np.ndarray
    flat_length: float = 0.0

    @property
    def samples(self):
        return [(BoundaryDatum(p, n), float(h)) for p, n, h in
                zip(self.points, self.normals, self.curvature)]

    def integral(self, power: float) -> float:
        return float(np.sum(self.weights * np.maximum(self.curvature, 0.0) ** power))

    def length(self) -> float:
        return float(np.sum(self.weights) + self.flat_length)


def _arc_nodes(arc: Arc):
    th, w = arc.nodes()
    e = arc.ellipse
    return e.point(th), unit2(th), e.curvature(th), w * e.speed(th)


def _discrete_nodes(pts):
    """Circle-fit curvature, normals and length weights at ordered ccw samples."""
    m = len(pts)
    idx = (np.arange(m)[:, None] + np.arange(-2, 3)[None, :]) % m
    nxt = np.roll(pts, -1, axis=0)
    prv = np.roll(pts, 1, axis=0)
    tang = nxt - prv
    outward = np.stack([tang[:, 1], -tang[:, 0]], axis=1)
    outward /= np.linalg.norm(outward, axis=1, keepdims=True)
    kappa, centers = circle_fit_curvature(pts[idx], outward)
    normals = outward.copy()
    ok = np.isfinite(centers[:, 0]) & (kappa > 0)
    radial = pts[ok] - centers[ok]
    normals[ok] = radial / np.linalg.norm(radial, axis=1, keepdims=True)
    ds = 0.5 * (np.linalg.norm(nxt - pts, axis=1) + np.linalg.norm(pts - prv, axis=1))
    return pts, normals, np.maximum(kappa, 0.0), ds


def _discrete_samples(region: Region, m: int):
    if isinstance(region, Polygon) and region.smooth:
        return region.vertices
    if isinstance(region, Ellipse):
        # equal steps in the normal angle keep the fit windows well shaped
        return region.point(2 * np.pi * np.arange(m) / m)
    return region.sample_boundary(m)


def _restrict(pieces, halfplane):
    if halfplane is None:
        return pieces
    a, b = halfplane
    out = []
    for p in pieces:
        out.extend(p.restrict(a, b))
    return out


def _chart_field(K, region: Region, chart: Chart, mode: str, m: int, halfplane=None,
                 predicate=None, oracle=None) -> CurvatureField:
    flat = 0.0
    if mode == "discrete" or (isinstance(region, Polygon) and region.smooth):
        x, n, kappa, ds = _discrete_nodes(_discrete_samples(region, m))
        if halfplane is not None:
            keep = x @ halfplane[0] <= halfplane[1]
            x, n, kappa, ds = x[keep], n[keep], kappa[keep], ds[keep]
        used = "discrete"
    else:
        xs, ns, ks, ws = [], [], [], []
        for piece in _restrict(region.pieces(), halfplane):
            if isinstance(piece, Segment):
                flat += piece.sphere_length()
                continue
            x, n, kap, ds = _arc_nodes(piece)
            xs.append(x)
            ns.append(n)
            ks.append(kap)
            ws.append(ds)
        if xs:
            x, n, kappa, ds = (np.concatenate(a) for a in (xs, ns, ks, ws))
        else:
            x, n, kappa, ds = np.zeros((0, 2)), np.zeros((0, 2)), np.zeros(0), np.zeros(0)
        used = "analytic"
    w = chart.to_sphere(x) if len(x) else np.zeros((0, 3))
    big_n = chart.normal_on_sphere(x, n) if len(x) else np.zeros((0, 3))
    if len(x):
        h = curvature_pullback(chart.pole, kappa, BoundaryDatum(w, big_n))
        if oracle is not None:
            h = np.asarray(oracle(np.arctan2(n[:, 1], n[:, 0])), dtype=float)
        weights = ds * jac_boundary_inv(x, n)
    else:
        h = weights = np.zeros(0)
    if predicate is not None and len(x):
        keep = np.asarray(predicate(w), dtype=bool)
        w, big_n, h, weights = w[keep], big_n[keep], h[keep], weights[keep]
    return CurvatureField(K, used, w, big_n, h, weights, flat)


def curvature_field(K: SphericalBody, mode: str = "auto", omega=None, u=None,
                    m: int = DISCRETE_SAMPLES) -> CurvatureField:
    """Boundary nodes of ``K`` (restricted to ``omega``) with spherical curvature.

    ``mode`` is ``"auto"`` (closed forms where the representation has them),
    ``"analytic"`` (same, but refuse discrete estimation) or ``"discrete"``
    (circle fits on boundary samples for every body). ``omega`` is ``None``
    (whole sphere), a :class:`Hemisphere` (restricted exactly) or a predicate
    on ``(N, 3)`` arrays of unit vectors (applied node-wise).
    """
    if mode not in ("auto", "analytic", "discrete"):
        raise ValueError("mode must be 'auto', 'analytic' or 'discrete'")
    if isinstance(K, CapBody) and mode != "discrete" and not isinstance(omega, Hemisphere):
        th = 2 * np.pi * np.arange(m) / m
        ch = Chart(K.center)
        e = ch.direction(th)
        a = K.radius
        pts = np.cos(a) * K.center + np.sin(a) * e
        nrm = -np.sin(a) * K.center + np.cos(a) * e
        h = np.full(m, 1.0 / np.tan(a)) if a > 0 else np.full(m, np.inf)
        wts = np.full(m, 2 * np.pi * np.sin(a) / m)
        if omega is not None:
            keep = np.asarray(omega(pts), dtype=bool)
            pts, nrm, h, wts = pts[keep], nrm[keep], h[keep], wts[keep]
        return CurvatureField(K, "analytic", pts, nrm, h, wts, 0.0)
    ch = Chart(u) if u is not None else (Chart(K.center) if isinstance(K, CapBody) else native_chart(K))
    region = chart_region(K, ch)
    oracle = K.curvature_oracle if isinstance(K, AnalyticBody) and ch is K.chart else None
    if mode == "analytic" and isinstance(region, Polygon) and region.smooth and oracle is None:
        raise UnsupportedBody("body has no analytic curvature; use mode='discrete'")
    halfplane = predicate = None
    if isinstance(omega, Hemisphere):
        z = omega.pole
        halfplane = (-(ch.basis.T @ z), float(ch.pole @ z))
    elif omega is not None:
        predicate = omega
    field = _chart_field(K, region, ch, mode, m, halfplane, predicate, oracle)
    if isinstance(K, CapBody) and mode != "discrete":
        field = CurvatureField(K, "analytic", field.points, field.normals,
                               np.full(len(field.curvature), 1.0 / np.tan(K.radius)),
                               field.weights, field.flat_length)
    return field


def curvature_integral(K: SphericalBody, power: float, omega=None, mode: str = "auto",
                       m: int = DISCRETE_SAMPLES) -> float:
    """``int_{omega n bd K} H^power``; zero for non-proper bodies."""
    if not is_proper(K):
        return 0.0
    if _is_flat(K):
        return 0.0
    return curvature_field(K, mode, omega, m=m).integral(power)


def _is_flat(K) -> bool:
    """Polytopes: curvature vanishes off a finite vertex set."""
    return isinstance(K, PolytopeBody) or (isinstance(K, ChartBody) and isinstance(K.region, Polygon)
                                           and not K.region.smooth)


def floating_measure(K: SphericalBody, omega=None, mode: str = "auto",
                     m: int = DISCRETE_SAMPLES) -> float:
    """``Omega(K, omega) = int_{omega n bd K} H^{1/3}``."""
    return curvature_integral(K, 1.0 / 3.0, omega, mode, m)


def perimeter(K: SphericalBody) -> float:
    """Length of the boundary of ``K``."""
    if isinstance(K, CapBody):
        return float(2 * np.pi * np.sin(K.radius))
    ch = native_chart(K)
    return chart_region(K, ch).sphere_perimeter()


def affine_surface_area(region: Region, mode: str = "auto", m: int = DISCRETE_SAMPLES) -> float:
    """Euclidean ``int_{bd L} kappa^{1/3} ds`` of a planar convex region."""
    if mode == "discrete" or (isinstance(region, Polygon) and region.smooth):
        _, _, kappa, ds = _discrete_nodes(_discrete_samples(region, m))
        return float(np.sum(ds * kappa ** (1 / 3)))
    total = 0.0
    for piece in region.pieces():
        if isinstance(piece, Arc):
            _, _, kappa, ds = _arc_nodes(piece)
            total += float(np.sum(ds * kappa ** (1 / 3)))
    return total


# ---------------------------------------------------------------------------
# pointwise curvature


def _locate(region: Region, x):
    """Closest boundary piece to ``x``: ``(distance, piece)``; smooth polygons give a vertex index."""
    if isinstance(region, Polygon) and region.smooth:
        d = np.linalg.norm(region.vertices - x, axis=1)
        i = int(np.argmin(d))
        seg = min((Segment(region.vertices[j], region.vertices[(j + 1) % len(d)]) for j in
                   (i - 1, i)), key=lambda s: s.distance(x))
        return seg.distance(x), i
    best = (np.inf, None)
    for p in region.pieces():
        dist = p.distance(x)
        if dist < best[0]:
            best = (dist, p)
    return best


def _normal_and_curvature(region: Region, x):
    """Chart outer normal and Euclidean curvature at a boundary point ``x``."""
    dist, piece = _locate(region, x)
    if isinstance(piece, (int, np.integer)):
        v = region.vertices
        m = len(v)
        idx = (piece + np.arange(-2, 3)) % m
        tang = v[(piece + 1) % m] - v[(piece - 1) % m]
        out = np.array([tang[1], -tang[0]]) / np.linalg.norm(tang)
        kappa, center = circle_fit_curvature(v[idx][None], out[None])
        n = out
        if kappa[0] > 0 and np.all(np.isfinite(center[0])):
            n = (v[piece] - center[0]) / np.linalg.norm(v[piece] - center[0])
        return dist, n, max(float(kappa[0]), 0.0), piece
    if isinstance(piece, Arc):
        th = float(piece.ellipse.normal_angle(x))
        return dist, unit2(th), float(piece.ellipse.curvature(th)), piece
    e = piece.end - piece.start
    n = np.array([e[1], -e[0]]) / np.linalg.norm(e)
    return dist, n, 0.0, piece


def boundary_normal(K: SphericalBody, w, u=None, tol: float = 1e-8):
    """Outer unit normal ``N_w`` at a boundary point (tangent to the sphere at ``w``)."""
    w = unit_vector(w)
    if isinstance(K, CapBody):
        if abs(float(geodesic_distance(K.center, w)) - K.radius) > tol:
            raise BoundaryPointMismatch("point is not on the cap boundary")
        n = w * np.cos(K.radius) - K.center
        return n / np.linalg.norm(n)
    ch = Chart(find_pole(K) if u is None else u)
    region = chart_region(K, ch)
    x = ch.to_plane(w)
    dist, n, _, _ = _normal_and_curvature(region, x)
    if dist > tol:
        raise BoundaryPointMismatch(f"point is {dist:.3g} away from the boundary in the chart")
    return ch.normal_on_sphere(x, n)


def gauss_kronecker(K: SphericalBody, w, u=None, mode: str = "auto", tol: float = 1e-8) -> float:
    """Spherical Gauss-Kronecker (geodesic) curvature of ``bd K`` at ``w``."""
    w = unit_vector(w)
    if isinstance(K, CapBody) and mode != "discrete":
        if abs(float(geodesic_distance(K.center, w)) - K.radius) > tol:
            raise BoundaryPointMismatch("point is not on the cap boundary")
        return float(1.0 / np.tan(K.radius))
    ch = Chart(find_pole(K) if u is None else u)
    region = chart_region(K, ch)
    x = ch.to_plane(w)
    if mode == "discrete" and not (isinstance(region, Polygon) and region.smooth):
        samples = _discrete_samples(region, DISCRETE_SAMPLES)
        region = Polygon(samples, smooth=True)
        dist = _locate(chart_region(K, ch), x)[0]
        _, n, kappa, _ = _normal_and_curvature(region, x)
    else:
        dist, n, kappa, _ = _normal_and_curvature(region, x)
    if dist > tol:
        raise BoundaryPointMismatch(f"point is {dist:.3g} away from the boundary in the chart")
    return float(curvature_pullback(ch.pole, kappa, BoundaryDatum(w, ch.normal_on_sphere(x, n))))


# ---------------------------------------------------------------------------
# limit experiments


@dataclass(frozen=True)
class ConvergenceRow:
    delta: float
    vol_diff: float
    quotient: float
    vol_K: float = float("nan")
    vol_float: float = float("nan")


@dataclass(frozen=True)
class ConvergenceResult:
    rows: list
    limit: float
    exponent: float
    coefficient: float
    residual: float
    monotone: bool
    target: float | None = None


def limit_quotient(K: SphericalBody, u=None, delta: float = 1e-4,
                   grid: DirectionGrid | None = None) -> ConvergenceRow:
    """``(vol K - vol K_[delta]) / delta^{2/3}`` with the volume difference
    taken along shared radial rays."""
    if not delta > 0:
        raise ValueError("delta must be positive")
    if grid is None:
        grid = DirectionGrid.uniform(find_pole(K) if u is None else u)
    fb = spherical_floating_body(K, delta, grid.pole, grid)
    diff = volume_difference(K, fb.body, grid.pole, grid).value
    vk = body_volume(K, grid.pole, grid).value
    vf = body_volume(fb.body, grid.pole, grid).value
    return ConvergenceRow(float(delta), diff, diff / delta ** (2 / 3), vk, vf)


def euclid_limit_quotient(region: Region, delta: float, m: int = 512) -> ConvergenceRow:
    """Euclidean analogue: ``(area L - area L_[delta]) / delta^{2/3}``."""
    fb = euclid_floating_body(region, delta, m)
    diff = euclid_area_difference(region, fb, m)
    return ConvergenceRow(float(delta), diff, diff / delta ** (2 / 3), region.area(), fb.area())


def extrapolate(deltas, quotients):
    """Fit ``q(delta) = a + b delta^p`` with ``p`` in ``(0, 2]``.

    Returns ``(a, b, p, rms_residual)``; several starting exponents are
    tried and the best fit is kept.
    """
    x = np.asarray(deltas, dtype=float)
    y = np.asarray(quotients, dtype=float)
    if len(x) < 4:
        raise ValueError("extrapolation needs at least four schedule points")

    def model(t, a, b, p):
        return a + b * t ** p

    best = None
    for p0 in (0.25, 0.5, 2 / 3, 1.0, 1.5):
        b0 = (y[0] - y[-1]) / max(x[0] ** p0 - x[-1] ** p0, 1e-300)
        try:
            popt, _ = curve_fit(model, x, y, p0=(y[-1], b0, p0),
                                bounds=([-np.inf, -np.inf, 1e-3], [np.inf, np.inf, 2.0]),
                                maxfev=20000)
        except (RuntimeError, ValueError):
            continue
        res = float(np.sqrt(np.mean((model(x, *popt) - y) ** 2)))
        if best is None or res < best[3]:
            best = (float(popt[0]), float(popt[1]), float(popt[2]), res)
    if best is None:
        return float(y[-1]), 0.0, float("nan"), float("nan")
    return best


def _check_schedule(schedule):
    s = np.asarray(schedule, dtype=float)
    if s.ndim != 1 or len(s) == 0 or np.any(s <= 0) or np.any(np.diff(s) >= 0):
        raise ValueError("delta schedule must be positive and strictly decreasing")
    return s


def _result(rows, target) -> ConvergenceResult:
    q = np.array([r.quotient for r in rows])
    d = np.array([r.delta for r in rows])
    a, b, p, res = extrapolate(d, q)
    steps = np.diff(q)
    monotone = bool(np.all(steps >= 0) or np.all(steps <= 0))
    if not monotone:
        log.info("quotient sequence is not monotone over the schedule: %s", q)
    return ConvergenceResult(rows, a, p, b, res, monotone, target)


def convergence_experiment(K: SphericalBody, u=None, schedule=(1e-2, 1e-3, 1e-4, 1e-5, 1e-6),
                           grid: DirectionGrid | None = None) -> ConvergenceResult:
    """Quotients over a decreasing schedule plus the extrapolated limit."""
    s = _check_schedule(schedule)
    if grid is None:
        grid = DirectionGrid.uniform(find_pole(K) if u is None else u)
    rows = [limit_quotient(K, grid.pole, float(d), grid) for d in s]
    return _result(rows, floating_constant(2) * floating_measure(K))


def euclid_convergence_experiment(region: Region, schedule=(1e-2, 1e-3, 1e-4, 1e-5, 1e-6),
                                  m: int = 512) -> ConvergenceResult:
    s = _check_schedule(schedule)
    rows = [euclid_limit_quotient(region, float(d), m) for d in s]
    return _result(rows, floating_constant(2) * affine_surface_area(region))


@dataclass(frozen=True)
class IntegrandProfile:
    rows: list
    curvature: float
    expected_limit: float


def integrand_profile(K: SphericalBody, u, w, schedule, grid: DirectionGrid | None = None,
                      require_positive_curvature: bool = False) -> IntegrandProfile:
    """Pointwise integrand ``f(w, delta)`` whose limit is ``c_2 H(w)^{1/3}``.

    ``f = delta^{-2/3} (-u.N_w) / sin(d(u, w))^2 (cos d(u, w_delta) - cos d(u, w))``
    with ``w_delta`` the exit point of the geodesic ``u -> w`` from
    ``K_[delta]``.
    """
    s = _check_schedule(schedule)
    w = unit_vector(w)
    u = unit_vector(find_pole(K) if u is None else u)
    if grid is None:
        grid = DirectionGrid.uniform(u)
    big_n = boundary_normal(K, w, u)
    h = gauss_kronecker(K, w, u)
    dw = float(geodesic_distance(u, w))
    factor = -float(u @ big_n) / np.sin(dw) ** 2
    rows = []
    for d in s:
        fb = spherical_floating_body(K, float(d), u, grid)
        wd = radial_boundary_point(fb, K, w, refine=True)
        dd = float(geodesic_distance(u, wd))
        radial_part = 2.0 * np.sin(0.5 * (dw + dd)) * np.sin(0.5 * (dw - dd))
        rows.append((float(d), float(factor * radial_part / d ** (2 / 3))))
    expected = floating_constant(2) * max(h, 0.0) ** (1 / 3)
    if require_positive_curvature and h <= 1e-12:
        raise ZeroCurvaturePoint("curvature vanishes at w; the pointwise limit is 0")
    return IntegrandProfile(rows, h, expected)


# ---------------------------------------------------------------------------
# identities and inequalities


@dataclass(frozen=True)
class CheckReport:
    name: str
    lhs: float
    rhs: float
    gap: float
    passed: bool
    details: dict = field(default_factory=dict)


def check_duality(K: SphericalBody, tol: float = 1e-4, mode: str = "auto") -> CheckReport:
    """``Omega(K)`` against ``int_{bd K^o} H^{2/3}``."""
    lhs = floating_measure(K, mode=mode)
    rhs = curvature_integral(polar(K), 2.0 / 3.0, mode=mode)
    gap = abs(lhs - rhs)
    return CheckReport("duality", lhs, rhs, gap, bool(gap < tol))


def check_holder(K: SphericalBody, tol: float = 1e-6) -> CheckReport:
    """``Omega(K) <= P(K^o)^{1/3} P(K)^{2/3}``; equality for caps."""
    lhs = floating_measure(K)
    rhs = perimeter(polar(K)) ** (1 / 3) * perimeter(K) ** (2 / 3)
    rel = (rhs - lhs) / rhs if rhs > 0 else 0.0
    return CheckReport("isoperimetric", lhs, rhs, rhs - lhs, bool(lhs <= rhs + tol),
                       {"relative_gap": rel})


def check_enclosure(K: SphericalBody, alpha: float | None = None, beta: float | None = None,
                    u=None, tol: float = 1e-6) -> CheckReport:
    """``Omega/(2 pi) <= (cos^2(a) tan^2(b) P / (tan(a) 2 pi))^{1/3}`` for
    ``C_u(a) in K in C_u(b)``; equality for caps with ``a = b``."""
    u = unit_vector(find_pole(K) if u is None else u)
    a_max, b_min = enclosure_radii(K, u)
    alpha = a_max if alpha is None else alpha
    beta = b_min if beta is None else beta
    if not 0 < alpha <= beta < np.pi / 2 or alpha > a_max + 1e-12 or beta < b_min - 1e-12:
        raise BadEnclosure(f"need 0 < alpha <= {a_max:.12g} and {b_min:.12g} <= beta < pi/2")
    two_pi = 2 * np.pi
    lhs = floating_measure(K) / two_pi
    rhs = (np.cos(alpha) ** 2 * np.tan(beta) ** 2 * perimeter(K) / (np.tan(alpha) * two_pi)) ** (1 / 3)
    rhs = float(rhs)
    return CheckReport("enclosure", lhs, rhs, rhs - lhs, bool(lhs <= rhs + tol),
                       {"alpha": alpha, "beta": beta, "pole": u.tolist()})


def check_isoperimetric(K: SphericalBody, alpha: float | None = None, beta: float | None = None,
                        u=None, tol: float = 1e-6) -> list:
    """Both inequalities: the Hoelder-type bound and the enclosure bound."""
    return [check_holder(K, tol), check_enclosure(K, alpha, beta, u, tol)]


def check_valuation(K: SphericalBody, L: SphericalBody, omega=None, tol: float = 1e-5) -> CheckReport:
    """Additivity defect ``Omega(K) + Omega(L) - Omega(K u L) - Omega(K n L)``."""
    both = union(K, L)
    meet = intersection(K, L)
    parts = [floating_measure(b, omega) for b in (K, L, both, meet)]
    lhs = parts[0] + parts[1]
    rhs = parts[2] + parts[3]
    return CheckReport("valuation", lhs, rhs, abs(lhs - rhs), bool(abs(lhs - rhs) < tol),
                       {"omega_K": parts[0], "omega_L": parts[1], "omega_union": parts[2],
                        "omega_intersection": parts[3]})


def split_by_hemisphere(K: SphericalBody, z):
    """``(K n S^-_z, K n S^+_z)`` as chart bodies."""
    z = unit_vector(z)
    return intersect_hemisphere(K, Hemisphere(-z)), intersect_hemisphere(K, Hemisphere(z))


@dataclass(frozen=True)
class ConjectureReport:
    omega_K: float
    omega_cap: float
    cap_radius: float
    ratio: float
    omega_cap_display: float


def conjecture_gap(K: SphericalBody) -> ConjectureReport:
    """Compare ``Omega(K)`` with ``Omega`` of the cap of equal area."""
    vol = volume(K)
    if not 0 < vol < 2 * np.pi:
        raise NoValidPole("body area must lie in (0, 2 pi)")
    alpha = bisect(lambda a: 2 * np.pi * (1 - np.cos(a)) - vol, 0.0, np.pi / 2, xtol=1e-12)
    om_k = floating_measure(K)
    om_c = cap_floating_area(alpha)
    alt = float(2 * np.pi * np.cos(alpha) ** (1 / 3) * np.sin(alpha) ** 2)
    log.info("equal-area cap radius %.12g: Omega(cap) = %.12g (sin^2 display form gives %.12g)",
             alpha, om_c, alt)
    return ConjectureReport(om_k, om_c, float(alpha), om_k / om_c, alt)
