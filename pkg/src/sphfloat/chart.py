"""Gnomonic charts of open hemispheres and the associated Jacobians.

A :class:`Chart` fixes a pole ``u`` and an orthonormal basis of the tangent
hyperplane ``R^n_u``; chart coordinates are coordinates in that basis. The
gnomonic map ``g_u(v) = v / (u.v) - u`` sends great spheres to affine
hyperplanes, so spherical convex bodies inside the open hemisphere become
Euclidean convex bodies.

All Jacobian formulas are closed forms. They accept stacked inputs so that
boundary quadratures can be evaluated in one call.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateRadial, OutsideOpenHemisphere, PoleMismatch
from .sphere import tangent_basis, unit_vector

HEMISPHERE_EPS = 1e-10
RADIAL_EPS = 1e-8


@dataclass(frozen=True, eq=False)
class Chart:
    """Gnomonic chart at ``pole`` with tangent ``basis`` (columns)."""

    pole: np.ndarray
    basis: np.ndarray = field(default=None)

    def __post_init__(self):
        pole = unit_vector(self.pole)
        object.__setattr__(self, "pole", pole)
        if self.basis is None:
            object.__setattr__(self, "basis", tangent_basis(pole))
        else:
            b = np.asarray(self.basis, dtype=float)
            if b.shape != (pole.size, pole.size - 1):
                raise ValueError("basis must have shape (n+1, n)")
            if not np.allclose(b.T @ b, np.eye(pole.size - 1), atol=1e-10) or \
                    np.max(np.abs(b.T @ pole)) > 1e-10:
                raise ValueError("basis must be orthonormal and orthogonal to the pole")
            object.__setattr__(self, "basis", b)

    @property
    def dim(self) -> int:
        """Dimension ``n`` of the sphere."""
        return self.pole.size - 1

    def same_as(self, other: "Chart", tol: float = 1e-12) -> bool:
        return (np.max(np.abs(self.pole - other.pole)) <= tol
                and np.max(np.abs(self.basis - other.basis)) <= tol)

    def antipodal(self) -> "Chart":
        """Chart at ``-pole`` sharing the tangent basis (same plane ``R^n_u``)."""
        return Chart(-self.pole, self.basis)

    def direction(self, angle):
        """Unit vector of ``S_u`` at polar angle ``angle`` (n = 2 only)."""
        a = np.asarray(angle, dtype=float)
        return np.cos(a)[..., None] * self.basis[:, 0] + np.sin(a)[..., None] * self.basis[:, 1]

    def coords(self, vec):
        """Tangent coordinates of ambient vectors orthogonal to the pole."""
        return np.asarray(vec, dtype=float) @ self.basis

    def embed(self, xy):
        """Ambient vector of chart coordinates ``xy``."""
        return np.asarray(xy, dtype=float) @ self.basis.T

    def to_plane(self, w, check: bool = True):
        w = np.asarray(w, dtype=float)
        c = w @ self.pole
        if check and np.any(c <= HEMISPHERE_EPS):
            raise OutsideOpenHemisphere("point not strictly inside the open hemisphere of the pole")
        return (w @ self.basis) / c[..., None]

    def to_sphere(self, xy):
        xy = np.asarray(xy, dtype=float)
        return unit_vector(self.embed(xy) + self.pole)

    def normal_on_sphere(self, xy, n_xy):
        """Outer unit normal ``N_w`` at ``w = g^{-1}(xy)`` from the chart normal ``n_xy``.

        The supporting great sphere through ``w`` with chart normal ``n`` has
        pole ``z = cos(h) n - sin(h) u`` where ``tan h = xy . n``.
        """
        xy = np.asarray(xy, dtype=float)
        n_xy = np.asarray(n_xy, dtype=float)
        p = np.sum(xy * n_xy, axis=-1)
        z = self.embed(n_xy) - p[..., None] * self.pole
        return z / np.sqrt(1.0 + p * p)[..., None]


@dataclass(frozen=True, eq=False)
class ChartPoint:
    """Point ``xy`` of ``R^n_u`` in the coordinates of ``chart``."""

    chart: Chart
    xy: np.ndarray

    @property
    def pole(self):
        return self.chart.pole

    def embedded(self):
        """Ambient vector; orthogonal to the pole by construction."""
        return self.chart.embed(self.xy)


@dataclass(frozen=True, eq=False)
class BoundaryDatum:
    """Boundary point ``point`` with outer unit normal ``normal`` (tangent at ``point``).

    Arrays of shape ``(..., n+1)`` are allowed for vectorised use.
    """

    point: np.ndarray
    normal: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.point, dtype=float)
        nv = np.asarray(self.normal, dtype=float)
        if np.max(np.abs(np.sum(p * nv, axis=-1)), initial=0.0) > 1e-10:
            raise ValueError("boundary normal must be orthogonal to the boundary point")
        object.__setattr__(self, "point", p)
        object.__setattr__(self, "normal", nv)


def _as_chart(u, chart: Chart | None) -> Chart:
    if chart is not None:
        if np.max(np.abs(chart.pole - unit_vector(u))) > 1e-12:
            raise PoleMismatch("chart pole differs from u")
        return chart
    return Chart(u)


def gnomonic(u, v, chart: Chart | None = None) -> ChartPoint:
    """Gnomonic image ``g_u(v) = v/(u.v) - u``; ``|xy| = tan d(u, v)``."""
    ch = _as_chart(u, chart)
    return ChartPoint(ch, ch.to_plane(v))


def gnomonic_inv(u, x: ChartPoint) -> np.ndarray:
    """Inverse gnomonic map ``(x + u) / |x + u|``."""
    if np.max(np.abs(x.pole - unit_vector(u))) > 1e-12:
        raise PoleMismatch("chart point belongs to a different pole")
    return x.chart.to_sphere(x.xy)


def jac_volume(u, v):
    """Tangential Jacobian ``1/(u.v)^{n+1}`` of ``g_u`` at ``v``."""
    u = np.asarray(u, dtype=float)
    c = np.asarray(v, dtype=float) @ u
    if np.any(c <= 0.0):
        raise OutsideOpenHemisphere("u.v must be positive")
    return c ** (-(u.size))


def jac_volume_inv(u, x: ChartPoint):
    """Tangential Jacobian ``(1 + |x|^2)^{-(n+1)/2}`` of the inverse chart."""
    if np.max(np.abs(x.pole - unit_vector(u))) > 1e-12:
        raise PoleMismatch("chart point belongs to a different pole")
    return density(x.xy)


def density(xy):
    """Spherical volume density ``(1 + |x|^2)^{-(n+1)/2}`` on chart coordinates."""
    xy = np.asarray(xy, dtype=float)
    n = xy.shape[-1]
    return (1.0 + np.sum(xy * xy, axis=-1)) ** (-(n + 1) / 2.0)


def _u_dot(u, b: BoundaryDatum):
    u = np.asarray(u, dtype=float)
    uw = b.point @ u
    if np.any(uw <= HEMISPHERE_EPS):
        raise OutsideOpenHemisphere("boundary point not strictly inside the open hemisphere")
    return u, uw, b.normal @ u


def jac_boundary(u, b: BoundaryDatum):
    """Tangential Jacobian of ``g_u`` restricted to the boundary:
    ``sqrt(1 - (u.N)^2) / (u.w)^n``."""
    u, uw, un = _u_dot(u, b)
    n = u.size - 1
    return np.sqrt(np.clip(1.0 - un * un, 0.0, None)) / uw ** n


def jac_boundary_cos(u, b: BoundaryDatum, support_angle):
    """Same Jacobian written as ``cos(h) / cos(d(u, w))^n`` with ``h`` the
    spherical support value at the projected normal."""
    u, uw, _ = _u_dot(u, b)
    return np.cos(support_angle) / uw ** (u.size - 1)


def jac_boundary_inv(x_xy, n_xy):
    """Tangential Jacobian of the inverse chart on the boundary:
    ``sqrt(1 + (x.N)^2) / (1 + |x|^2)^{n/2}``."""
    x_xy = np.asarray(x_xy, dtype=float)
    n_xy = np.asarray(n_xy, dtype=float)
    n = x_xy.shape[-1]
    p = np.sum(x_xy * n_xy, axis=-1)
    return np.sqrt(1.0 + p * p) / (1.0 + np.sum(x_xy * x_xy, axis=-1)) ** (n / 2.0)


def jac_radial(u, b: BoundaryDatum):
    """Tangential Jacobian ``-u.N / sin(d(u, w))^n`` of the radial map onto ``S_u``."""
    u = np.asarray(u, dtype=float)
    n = u.size - 1
    uw = np.asarray(b.point @ u)
    # |w - (u.w) u| keeps precision near the pole where sqrt(1 - (u.w)^2) does not
    sin_d = np.linalg.norm(b.point - uw[..., None] * u, axis=-1)
    if np.any(sin_d < RADIAL_EPS) or np.any(uw <= -1.0 + RADIAL_EPS):
        raise DegenerateRadial("boundary point too close to the pole")
    return -(b.normal @ u) / sin_d ** n


def curvature_pullback(u, h_chart, b: BoundaryDatum):
    """Spherical Gauss-Kronecker curvature from the chart body's Euclidean one.

    ``H_sphere = H_chart * (cos(h) / cos(d(u, w)))^{n+1}`` with
    ``sin(h) = -u.N``.
    """
    u, uw, un = _u_dot(u, b)
    n = u.size - 1
    cos_h = np.sqrt(np.clip(1.0 - un * un, 0.0, None))
    return np.asarray(h_chart, dtype=float) * (cos_h / uw) ** (n + 1)
