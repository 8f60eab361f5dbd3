"""Euclidean and spherical convex floating bodies.

For every grid direction ``v`` the cut depth ``s(v, delta)`` is the offset
whose cap ``{x . v >= tan s}`` (spherical) or ``{x . v >= s}`` (Euclidean)
of the chart region has measure ``delta``. Cut measures are strictly
decreasing in the offset, so all directions are solved together by one
vectorised bisection. The floating body is the intersection of the
complementary halfplanes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .body import ChartBody, SphericalBody, chart_region, find_pole, is_proper, pole_is_valid, radial
from .chart import Chart
from .errors import (BadEnclosure, BoundaryPointMismatch, DeltaOutOfRange, FloatingBodyEmpty,
                     PoleInvalid, PoleNotInterior, PoleNotInteriorOfFloat)
from .quadrature import DirectionGrid
from .regions import Region, SupportSampled, unit2
from .sphere import geodesic_distance, project_to_hypersphere, unit_vector

BRACKET_EPS = 1e-9
MAX_ITER = 200


@dataclass(frozen=True)
class CutDepth:
    direction: np.ndarray
    s: float
    achieved_delta: float
    iterations: int


@dataclass(frozen=True, eq=False)
class FloatingBodyResult:
    body: ChartBody
    delta: float
    pole: np.ndarray
    depths: list
    grid: DirectionGrid

    @property
    def offsets(self):
        """Chart offsets ``tan s(v_i, delta)``, one per grid direction."""
        return np.tan(np.array([d.s for d in self.depths]))


def _bisect(measure, lo, hi, target: float, tol: float):
    """Vectorised bisection for a decreasing ``measure(x) = target`` on ``[lo, hi]``.

    Returns ``(x, achieved, iterations)``; converged entries stop being
    evaluated.
    """
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    x = 0.5 * (lo + hi)
    val = measure(x)
    it = 1
    while it < MAX_ITER:
        width = hi - lo
        active = (np.abs(val - target) >= tol) & (width > 4 * np.finfo(float).eps * np.maximum(1.0, np.abs(x)))
        if not active.any():
            break
        big = val > target
        lo = np.where(active & big, x, lo)
        hi = np.where(active & ~big, x, hi)
        x = np.where(active, 0.5 * (lo + hi), x)
        val[active] = measure(x[active], active)
        it += 1
    return x, val, it


class _CutMeasure:
    """Cut measures of ``region`` along fixed directions as a function of offsets."""

    def __init__(self, region: Region, angles, spherical: bool):
        self.region = region
        self.angles = np.asarray(angles, dtype=float)
        self.spherical = spherical

    def __call__(self, x, mask=None):
        t = np.tan(x) if self.spherical else x
        angles = self.angles if mask is None else self.angles[mask]
        return self.region.cut_measures(angles, t, self.spherical)


def _tolerance(delta: float) -> float:
    return max(1e-12, 1e-6 * delta)


def _kink_angles(region: Region, grid_angles):
    """Edge-normal angles of the straight sides of ``region`` that are not grid angles.

    A finite set of cuts only bounds the floating body from outside; near a
    flat side the corner between two neighbouring cuts can stick out of the
    body. Cutting along the side's own normal removes that corner.
    """
    if getattr(region, "smooth", False):
        return np.zeros(0)
    normals, _ = region.halfplanes()
    if len(normals) == 0:
        return np.zeros(0)
    ang = np.mod(np.arctan2(normals[:, 1], normals[:, 0]), 2 * np.pi)
    gap = np.abs(np.angle(np.exp(1j * (ang[:, None] - np.asarray(grid_angles)[None, :]))))
    return np.unique(ang[np.min(gap, axis=1) > 1e-12])


def _assemble(angles, values, extra_angles, extra_values) -> SupportSampled:
    a = np.concatenate([angles, extra_angles])
    v = np.concatenate([values, extra_values])
    order = np.argsort(a, kind="stable")
    out = SupportSampled(a[order], v[order])
    if len(out.vertices) < 3 or out.area() < 1e-14:
        raise FloatingBodyEmpty("floating body is empty for this delta")
    return out


# ---------------------------------------------------------------------------
# Euclidean


def euclid_cut_depths(region: Region, angles, delta: float):
    """Offsets ``s_i`` with ``area(region n {x . v_i >= s_i}) = delta``."""
    area = region.area()
    if not 0.0 < delta < area:
        raise DeltaOutOfRange(f"delta must lie in (0, {area:.6g})")
    angles = np.atleast_1d(np.asarray(angles, dtype=float))
    d = unit2(angles)
    lo = -region.support(-d)
    hi = region.support(d)
    s, val, it = _bisect(_CutMeasure(region, angles, False), lo, hi, delta, _tolerance(delta))
    return s, val, it


def euclid_cut_depth(region: Region, v, delta: float) -> float:
    """Offset ``s`` with ``area(region n {x . v >= s}) = delta`` for a unit ``v``."""
    v = np.asarray(v, dtype=float)
    s, _, _ = euclid_cut_depths(region, [np.arctan2(v[1], v[0])], delta)
    return float(s[0])


def euclid_floating_body(region: Region, delta: float, m: int = 512) -> SupportSampled:
    """Intersection of the ``m`` halfplanes ``{x . v_i <= s(v_i, delta)}``."""
    angles = 2 * np.pi * np.arange(m) / m
    extra = _kink_angles(region, angles)
    s, _, _ = euclid_cut_depths(region, np.concatenate([angles, extra]), delta)
    return _assemble(angles, s[:m], extra, s[m:])


def euclid_area_difference(outer: Region, inner: Region, m: int = 512) -> float:
    """``area(outer) - area(inner)`` as ``1/2 sum w (rho_o^2 - rho_i^2)`` on ``m`` rays."""
    d = unit2(2 * np.pi * np.arange(m) / m)
    ro = outer.radial(d)
    ri = inner.radial(d)
    return float(np.sum((np.pi / m) * (ro - ri) * (ro + ri)))


# ---------------------------------------------------------------------------
# spherical


def _setup(K: SphericalBody, u, grid: DirectionGrid | None):
    if grid is None:
        grid = DirectionGrid.uniform(find_pole(K) if u is None else unit_vector(u))
    elif u is not None and np.max(np.abs(grid.pole - unit_vector(u))) > 1e-12:
        raise PoleInvalid("grid pole differs from u")
    if not is_proper(K) or not pole_is_valid(K, grid.pole):
        raise PoleInvalid("pole must be interior to a proper body lying in its open hemisphere")
    return grid, chart_region(K, grid.chart)


def _spherical_depths(region: Region, angles, delta: float):
    vol = region.sphere_area()
    if not 0.0 < delta < vol:
        raise DeltaOutOfRange(f"delta must lie in (0, {vol:.6g})")
    d = unit2(angles)
    hi = np.arctan(region.support(d)) - BRACKET_EPS
    lo = -np.arctan(region.support(-d)) + BRACKET_EPS
    return _bisect(_CutMeasure(region, angles, True), lo, hi, delta, _tolerance(delta))


def spherical_cut_depth(K: SphericalBody, u, v, delta: float) -> CutDepth:
    """Cut depth ``s(v, delta)`` for one direction ``v`` in ``S_u``."""
    u = unit_vector(u)
    v = unit_vector(v)
    grid, region = _setup(K, u, None)
    c = grid.chart.coords(v)
    ang = np.arctan2(c[1], c[0])
    s, val, it = _spherical_depths(region, np.array([ang]), delta)
    return CutDepth(v, float(s[0]), float(val[0]), int(it))


def spherical_floating_body(K: SphericalBody, delta: float, u=None,
                            grid: DirectionGrid | None = None) -> FloatingBodyResult:
    """``K_[delta]`` as the chart polygon ``{x : x . v_i <= tan s(v_i, delta)}``.

    The ``v_i`` are the grid directions plus the normals of straight sides
    of the chart region.
    """
    grid, region = _setup(K, u, grid)
    m = grid.size
    extra = _kink_angles(region, grid.angles)
    s, val, it = _spherical_depths(region, np.concatenate([grid.angles, extra]), delta)
    dirs = grid.directions
    depths = [CutDepth(dirs[i], float(s[i]), float(val[i]), int(it)) for i in range(m)]
    poly = _assemble(grid.angles, np.tan(s[:m]), extra, np.tan(s[m:]))
    body = ChartBody(grid.pole, poly, grid.chart.basis)
    return FloatingBodyResult(body, float(delta), grid.pole, depths, grid)


def _exact_radial(region: Region, fb: FloatingBodyResult, d) -> float:
    """Chart radial function of the floating body over *all* directions.

    ``r(d) = min_phi tan s(phi) / (d . v(phi))``; the grid minimiser is
    refined by a bounded scalar search with cut depths solved on demand.
    """
    angles = fb.grid.angles
    t = fb.offsets
    dv = unit2(angles) @ d
    ratio = np.where(dv > 0, t / np.where(dv > 0, dv, 1.0), np.inf)
    i = int(np.argmin(ratio))
    step = 2 * np.pi / len(angles)

    def f(phi):
        s, _, _ = _spherical_depths(region, np.array([phi]), fb.delta)
        c = float(unit2(phi) @ d)
        return float(np.tan(s[0]) / c) if c > 0 else np.inf

    res = minimize_scalar(f, bounds=(angles[i] - step, angles[i] + step), method="bounded",
                          options={"xatol": 1e-12})
    return float(min(res.fun, ratio[i]))


def radial_boundary_point(fb: FloatingBodyResult, K: SphericalBody, w, refine: bool = True,
                          tol: float = 1e-8) -> np.ndarray:
    """Exit point ``w_delta`` of the geodesic from the pole towards ``w`` out of ``K_[delta]``.

    With ``refine`` the floating body is treated as the intersection over all
    directions (not just the grid), which removes the polygon's O(M^-2)
    corner error.
    """
    u = fb.pole
    w = unit_vector(w)
    v = project_to_hypersphere(w, u)
    if abs(float(radial(K, u, v)) - float(geodesic_distance(u, w))) > tol:
        raise BoundaryPointMismatch("w is not a boundary point of K")
    try:
        rho = float(radial(fb.body, u, v))
    except PoleNotInterior as exc:
        raise PoleNotInteriorOfFloat("pole is not interior to the floating body") from exc
    if refine:
        region = chart_region(K, fb.grid.chart)
        rho = float(np.arctan(_exact_radial(region, fb, fb.grid.chart.coords(v))))
    return np.cos(rho) * u + np.sin(rho) * v


@dataclass(frozen=True)
class SandwichReport:
    inner_ok: bool
    outer_ok: bool
    inner_margin: float
    outer_margin: float
    alpha: float
    beta: float
    delta: float

    @property
    def ok(self) -> bool:
        return self.inner_ok and self.outer_ok


def enclosure_radii(K: SphericalBody, u) -> tuple[float, float]:
    """Largest ``alpha`` with ``C_u(alpha)`` in ``K`` and smallest ``beta`` with ``K`` in ``C_u(beta)``."""
    region = chart_region(K, Chart(u))
    return float(np.arctan(region.inner_radius())), float(np.arctan(region.outer_radius()))


def sandwich_check(K: SphericalBody, delta: float, u, alpha: float, beta: float,
                   grid: DirectionGrid | None = None, tol: float = 1e-8) -> SandwichReport:
    """Compare ``g_u(K_[delta])`` with the Euclidean floating bodies
    ``L_[delta / cos(beta)^3]`` (inside) and ``L_[delta / cos(alpha)^3]`` (outside).

    Inclusion is tested through support values at the grid directions:
    ``h_inner <= h_float + tol`` and ``h_float <= h_outer + tol``.
    """
    u = unit_vector(u)
    if not 0.0 <= alpha <= beta < np.pi / 2:
        raise BadEnclosure("need 0 <= alpha <= beta < pi/2")
    a_max, b_min = enclosure_radii(K, u)
    if alpha > a_max + 1e-12 or beta < b_min - 1e-12:
        raise BadEnclosure(f"enclosure fails: need alpha <= {a_max:.12g} and beta >= {b_min:.12g}")
    fb = spherical_floating_body(K, delta, u, grid)
    g = fb.grid
    region = chart_region(K, g.chart)
    d = g.coords
    h_float = fb.body.region.support(d)
    s_in, _, _ = euclid_cut_depths(region, g.angles, delta / np.cos(beta) ** 3)
    s_out, _, _ = euclid_cut_depths(region, g.angles, delta / np.cos(alpha) ** 3)
    h_in = SupportSampled(g.angles, s_in).support(d)
    h_out = SupportSampled(g.angles, s_out).support(d)
    inner_margin = float(np.max(h_in - h_float))
    outer_margin = float(np.max(h_float - h_out))
    return SandwichReport(inner_margin <= tol, outer_margin <= tol, inner_margin, outer_margin,
                          float(alpha), float(beta), float(delta))
