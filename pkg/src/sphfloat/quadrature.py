"""Integration on S^2: cone-formula volumes, chart cut volumes, Fubini splits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .body import SphericalBody, chart_region, find_pole, pole_is_valid, radial, support
from .chart import Chart, density
from .errors import BadSubsphere, NotNested, NotOrthogonal, PoleInvalid
from .regions import Polygon, Region
from .sphere import ORTHO_TOL, unit_vector


@dataclass(frozen=True, eq=False)
class DirectionGrid:
    """Quadrature nodes ``v(angle_i)`` on the great circle ``S_pole``."""

    chart: Chart
    angles: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        if self.angles.size < 16:
            raise ValueError("a direction grid needs at least 16 nodes")
        if np.any(self.weights <= 0):
            raise ValueError("grid weights must be positive")

    @classmethod
    def uniform(cls, pole, m: int = 512, basis=None) -> "DirectionGrid":
        """Trapezoid rule with ``m`` equispaced angles; weights ``2 pi / m``."""
        ch = pole if isinstance(pole, Chart) else Chart(pole, basis)
        angles = 2.0 * np.pi * np.arange(m) / m
        return cls(ch, angles, np.full(m, 2.0 * np.pi / m))

    @property
    def pole(self):
        return self.chart.pole

    @property
    def size(self) -> int:
        return self.angles.size

    @property
    def coords(self):
        """Chart coordinates of the directions, shape ``(M, 2)``."""
        return np.stack([np.cos(self.angles), np.sin(self.angles)], axis=1)

    @property
    def directions(self):
        return self.chart.direction(self.angles)

    def coarsened(self) -> "DirectionGrid":
        """Every other node with doubled weights (used for error estimates)."""
        return DirectionGrid(self.chart, self.angles[::2], 2.0 * self.weights[::2])

    def refined(self) -> "DirectionGrid":
        return DirectionGrid.uniform(self.chart, 2 * self.size)


@dataclass(frozen=True)
class QuadratureReport:
    value: float
    est_error: float
    evaluations: int

    def __post_init__(self):
        if self.est_error < 0 or self.evaluations <= 0:
            raise ValueError("invalid quadrature report")


def _grid_for(K: SphericalBody, u, grid: DirectionGrid | None) -> DirectionGrid:
    if grid is not None:
        if u is not None and np.max(np.abs(grid.pole - unit_vector(u))) > 1e-12:
            raise PoleInvalid("grid pole differs from u")
        return grid
    return DirectionGrid.uniform(find_pole(K) if u is None else unit_vector(u))


def _validate_pole(K: SphericalBody, chart: Chart):
    if not pole_is_valid(K, chart.pole):
        raise PoleInvalid("pole must be interior with the body in its open hemisphere")


def radial_values(K: SphericalBody, grid: DirectionGrid):
    return np.asarray(radial(K, grid.pole, grid.directions))


def _cone_sum(weights, rho):
    # 1 - cos(rho) without cancellation
    return float(np.sum(weights * 2.0 * np.sin(0.5 * rho) ** 2))


def body_volume(K: SphericalBody, u=None, grid: DirectionGrid | None = None) -> QuadratureReport:
    """Area of ``K`` as ``sum_i w_i (1 - cos rho_u(K, v_i))``."""
    grid = _grid_for(K, u, grid)
    _validate_pole(K, grid.chart)
    rho = radial_values(K, grid)
    value = _cone_sum(grid.weights, rho)
    coarse = _cone_sum(2.0 * grid.weights[::2], rho[::2])
    return QuadratureReport(value, abs(value - coarse), grid.size)


def volume_difference(K: SphericalBody, L: SphericalBody, u=None,
                      grid: DirectionGrid | None = None) -> QuadratureReport:
    """``vol(K) - vol(L)`` for ``L`` inside ``K`` along shared radial rays."""
    grid = _grid_for(L, u, grid)
    _validate_pole(L, grid.chart)
    _validate_pole(K, grid.chart)
    rk = radial_values(K, grid)
    rl = radial_values(L, grid)
    if np.any(rl > rk + 1e-10):
        raise NotNested("inner body exceeds the outer body along a grid direction")
    return _difference_report(grid, rk, rl)


def _difference_report(grid: DirectionGrid, rk, rl) -> QuadratureReport:
    # cos(rl) - cos(rk) = 2 sin((rk + rl)/2) sin((rk - rl)/2)
    g = 2.0 * np.sin(0.5 * (rk + rl)) * np.sin(0.5 * (rk - rl))
    value = float(np.sum(grid.weights * g))
    coarse = float(np.sum(2.0 * grid.weights[::2] * g[::2]))
    return QuadratureReport(value, abs(value - coarse), grid.size)


def cut_volume(K: SphericalBody, u, v, s: float, grid: DirectionGrid | None = None,
               region: Region | None = None) -> QuadratureReport:
    """Area of ``K`` on the side ``v.w >= tan(s) u.w`` of the great circle.

    In the chart at ``u`` the cut is the halfplane ``{x : x.v >= tan s}``;
    the clipped region's spherical area is a boundary integral that is exact
    on straight edges.
    """
    u = unit_vector(u)
    v = unit_vector(v)
    if abs(float(u @ v)) > ORTHO_TOL:
        raise NotOrthogonal("cut direction must be orthogonal to the pole")
    if not -np.pi / 2 < s < np.pi / 2:
        raise ValueError("offset s must lie in (-pi/2, pi/2)")
    ch = grid.chart if grid is not None else Chart(u)
    if np.max(np.abs(ch.pole - u)) > 1e-12:
        raise PoleInvalid("grid pole differs from u")
    if region is None:
        try:
            region = chart_region(K, ch)
        except ValueError as exc:
            raise PoleInvalid(str(exc)) from exc
    piece = region.cut(ch.coords(v), np.tan(s))
    value, err, evals = piece.sphere_area_estimate()
    return QuadratureReport(value, err + 1e-15 * max(abs(value), 1.0), evals)


# ---------------------------------------------------------------------------
# triangle rules (cross-check for cut volumes)

_S15 = np.sqrt(15.0)
_A1, _B1 = (6 - _S15) / 21, (9 + 2 * _S15) / 21
_A2, _B2 = (6 + _S15) / 21, (9 - 2 * _S15) / 21
_W1, _W2 = (155 - _S15) / 1200, (155 + _S15) / 1200
#: 7-point degree-5 rule on the reference triangle (barycentric, weights sum to 1)
TRIANGLE_RULE_5 = (
    np.array([[1 / 3, 1 / 3, 1 / 3],
              [_A1, _A1, _B1], [_A1, _B1, _A1], [_B1, _A1, _A1],
              [_A2, _A2, _B2], [_A2, _B2, _A2], [_B2, _A2, _A2]]),
    np.array([9 / 40, _W1, _W1, _W1, _W2, _W2, _W2]),
)


def density_integral_fan(poly: Polygon, levels: int = 0) -> float:
    """Spherical area of a chart polygon by centroid-fan triangulation and
    the 7-point Gauss rule, each triangle split into ``4**levels`` pieces."""
    v = poly.vertices
    if len(v) < 3:
        return 0.0
    c = v.mean(axis=0)
    tris = np.stack([np.broadcast_to(c, v.shape), v, np.roll(v, -1, axis=0)], axis=1)
    for _ in range(levels):
        a, b, d = tris[:, 0], tris[:, 1], tris[:, 2]
        ab, bd, da = (a + b) / 2, (b + d) / 2, (d + a) / 2
        tris = np.concatenate([np.stack(t, axis=1) for t in
                               ((a, ab, da), (ab, b, bd), (da, bd, d), (ab, bd, da))])
    bary, w = TRIANGLE_RULE_5
    pts = np.einsum("qk,tkd->tqd", bary, tris)
    e1 = tris[:, 1] - tris[:, 0]
    e2 = tris[:, 2] - tris[:, 0]
    area = 0.5 * np.abs(e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0])
    return float(np.sum(area[:, None] * w[None, :] * density(pts)))


# ---------------------------------------------------------------------------
# Fubini splitting and a direct chart oracle


def integrate_split(f, basis, n_outer: int = 128, n_inner: int = 64) -> QuadratureReport:
    """Integral of ``f`` over S^2 split along the subsphere spanned by ``basis``.

    ``basis`` holds ``k + 1`` orthonormal columns spanning a ``k``-sphere
    ``S``. With ``S^o`` the orthogonal subsphere, the integral is
    ``int_S int_{conv(S^o, v)} sin(d(S^o, w))^k f(w) dw dv``:

    * ``k = 1``: ``S`` a great circle, ``S^o`` its poles ``+-p``; the inner
      domain is the half meridian from ``p`` through ``v`` to ``-p``.
    * ``k = 0``: ``S = {+-a}``, ``S^o`` the equator; the inner domains are
      the two hemispheres about ``+-a``.

    ``f`` maps an ``(N, 3)`` array of unit vectors to ``N`` values.
    """
    b = np.asarray(basis, dtype=float)
    if b.ndim == 1:
        b = b[:, None]
    if b.shape[0] != 3 or b.shape[1] not in (1, 2):
        raise BadSubsphere("only 0- and 1-dimensional subspheres of S^2 are supported")
    if not np.allclose(b.T @ b, np.eye(b.shape[1]), atol=1e-10):
        raise BadSubsphere("subsphere basis must be orthonormal")
    hi = _split_sum(f, b, n_outer, n_inner)
    lo = _split_sum(f, b, max(n_outer // 2, 4), max(n_inner // 2, 2))
    k = b.shape[1] - 1
    evals = n_outer * n_inner * (1 if k == 1 else 2)
    return QuadratureReport(hi, abs(hi - lo), evals)


def _split_sum(f, b, n_outer, n_inner) -> float:
    x, w = np.polynomial.legendre.leggauss(n_inner)
    phi = 2 * np.pi * np.arange(n_outer) / n_outer
    if b.shape[1] == 2:
        p = np.cross(b[:, 0], b[:, 1])
        v = np.cos(phi)[:, None] * b[:, 0] + np.sin(phi)[:, None] * b[:, 1]
        t = 0.5 * np.pi * (x + 1)
        wt = 0.5 * np.pi * w
        pts = np.cos(t)[None, :, None] * p + np.sin(t)[None, :, None] * v[:, None, :]
        vals = np.asarray(f(pts.reshape(-1, 3)), dtype=float).reshape(n_outer, n_inner)
        return float(np.sum((2 * np.pi / n_outer) * np.sum(vals * (wt * np.sin(t))[None, :], axis=1)))
    a = b[:, 0]
    e = Chart(a).basis
    total = 0.0
    t = 0.25 * np.pi * (x + 1)
    wt = 0.25 * np.pi * w
    for sign in (1.0, -1.0):
        v = np.cos(phi)[:, None] * e[:, 0] + np.sin(phi)[:, None] * e[:, 1]
        pts = np.cos(t)[None, :, None] * (sign * a) + np.sin(t)[None, :, None] * v[:, None, :]
        vals = np.asarray(f(pts.reshape(-1, 3)), dtype=float).reshape(n_outer, n_inner)
        total += float(np.sum((2 * np.pi / n_outer) * np.sum(vals * (wt * np.sin(t))[None, :], axis=1)))
    return total


_CUBE_FACES = np.array([[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]], float)


def integrate_chart(f, order: int = 48) -> QuadratureReport:
    """Integral over S^2 via the six gnomonic cube-face charts.

    Each face is the square ``[-1, 1]^2`` in the chart of a face centre, with
    the chart density ``(1 + |x|^2)^{-3/2}``; tensor Gauss-Legendre on each.
    Independent of :func:`integrate_split`.
    """
    hi = _cube_sum(f, order)
    lo = _cube_sum(f, max(order // 2, 2))
    return QuadratureReport(hi, abs(hi - lo), 6 * order * order)


def _cube_sum(f, order) -> float:
    x, w = np.polynomial.legendre.leggauss(order)
    xx, yy = np.meshgrid(x, x, indexing="ij")
    ww = np.outer(w, w).ravel()
    xy = np.stack([xx.ravel(), yy.ravel()], axis=1)
    dens = density(xy)
    total = 0.0
    for c in _CUBE_FACES:
        ch = Chart(c)
        vals = np.asarray(f(ch.to_sphere(xy)), dtype=float)
        total += float(np.sum(ww * dens * vals))
    return total


def support_values(K: SphericalBody, grid: DirectionGrid):
    return np.asarray(support(K, grid.pole, grid.directions))
