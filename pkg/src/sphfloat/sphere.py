"""Primitives on the unit sphere S^n embedded in R^{n+1}.

Points of the sphere are plain ``numpy`` arrays of shape ``(n + 1,)`` (or
stacks ``(..., n + 1)``); :func:`unit_vector` is the constructor and the only
place normalisation happens. Everything here is dimension generic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateProjection, NotOrthogonal

#: ``|u.v| >= 1 - ANTIPODAL_EPS`` counts as (anti)parallel.
ANTIPODAL_EPS = 1e-12
#: ``|u.v| > ORTHO_TOL`` counts as not orthogonal.
ORTHO_TOL = 1e-10

UnitVector = np.ndarray


def unit_vector(coords) -> UnitVector:
    """Return ``coords`` rescaled to unit Euclidean norm along the last axis."""
    v = np.asarray(coords, dtype=float)
    norm = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.any(norm == 0.0):
        raise ValueError("the zero vector has no direction")
    return v / norm


def basis_vector(i: int, dim: int = 3) -> UnitVector:
    e = np.zeros(dim)
    e[i] = 1.0
    return e


def geodesic_distance(u, v):
    """Great-circle distance ``arccos(u . v)`` in radians, in ``[0, pi]``.

    Evaluated as ``2 atan2(|u - v|, |u + v|)``, which equals the clamped
    arccos but keeps full relative precision for nearly equal or nearly
    antipodal arguments.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    a = np.linalg.norm(u - v, axis=-1)
    b = np.linalg.norm(u + v, axis=-1)
    return 2.0 * np.arctan2(a, b)


def project_to_hypersphere(w, v) -> UnitVector:
    """Spherical projection ``w|S_v`` of ``w`` onto the great hypersphere ``v.x = 0``.

    Satisfies ``w = cos(d) v + sin(d) (w|S_v)`` with ``d = d(v, w)``.
    """
    w = np.asarray(w, dtype=float)
    v = np.asarray(v, dtype=float)
    c = np.sum(w * v, axis=-1, keepdims=True)
    if np.any(np.abs(c) >= 1.0 - ANTIPODAL_EPS):
        raise DegenerateProjection("w is (anti)parallel to v")
    return unit_vector(w - c * v)


def tangent_basis(u) -> np.ndarray:
    """Orthonormal basis of ``u``'s orthogonal complement, as columns.

    Deterministic in ``u``; oriented so that ``det[basis | u] = +1``.
    """
    u = unit_vector(u)
    m = u.size
    q, _ = np.linalg.qr(np.column_stack([u, np.eye(m)]))
    basis = q[:, 1:m].copy()
    if np.linalg.det(np.column_stack([basis, u])) < 0:
        basis[:, -1] *= -1.0
    return basis


def random_unit_vectors(rng: np.random.Generator, count: int, dim: int = 3) -> np.ndarray:
    """``count`` independent uniform points on ``S^{dim-1}``."""
    return unit_vector(rng.standard_normal((count, dim)))


@dataclass(frozen=True)
class Hemisphere:
    """Closed hemisphere ``S^+_pole = {w : pole . w >= 0}``.

    The complementary closed hemisphere ``S^-_pole`` is ``Hemisphere(-pole)``;
    the boundary great sphere is ``pole . w = 0``.
    """

    pole: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "pole", unit_vector(self.pole))

    def contains(self, w, tol: float = 0.0):
        return np.asarray(w) @ self.pole >= -tol

    def complement(self) -> "Hemisphere":
        return Hemisphere(-self.pole)


@dataclass(frozen=True)
class Cap:
    """Closed geodesic ball ``C_center(radius)``."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", unit_vector(self.center))
        if not 0.0 <= self.radius <= np.pi:
            raise ValueError(f"cap radius {self.radius} outside [0, pi]")

    def contains(self, w, tol: float = 0.0):
        return geodesic_distance(self.center, w) <= self.radius + tol


def oriented_hemisphere(u, v, s: float) -> Hemisphere:
    """Hemisphere ``S^+_{u,v,s} = {w : v.w >= tan(s) (u.w)}``.

    Its pole is ``z = cos(s) v - sin(s) u``; requires ``v`` orthogonal to
    ``u`` and ``s`` in ``(-pi/2, pi/2)``.
    """
    u = unit_vector(u)
    v = unit_vector(v)
    if abs(float(u @ v)) > ORTHO_TOL:
        raise NotOrthogonal(f"u.v = {float(u @ v):.3g}")
    if not -np.pi / 2 < s < np.pi / 2:
        raise ValueError("offset s must lie in (-pi/2, pi/2)")
    return Hemisphere(np.cos(s) * v - np.sin(s) * u)
