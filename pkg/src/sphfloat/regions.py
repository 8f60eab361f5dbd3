"""Convex regions of a gnomonic chart plane (n = 2).

Every region exposes its boundary as a list of *pieces*: straight
:class:`Segment` objects and elliptic :class:`Arc` objects parametrised by
the outer-normal angle. Areas are boundary integrals (Green's theorem):

* Euclidean area:  ``1/2 \\oint x \\times dx``;
* spherical area of the gnomonic preimage: ``\\oint (x \\times dx) / (q (1 + q))``
  with ``q = sqrt(1 + |x|^2)``, i.e. the density ``(1 + |x|^2)^{-3/2}``
  integrated over the region.

Straight pieces map to great-circle arcs, so their spherical contribution
is the signed area of a geodesic triangle, available in closed form. Arc
pieces are integrated with composite Gauss-Legendre rules in the normal
angle, where the integrand is analytic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .errors import BodyNotInOpenHemisphere, PoleNotInterior, UnsupportedBody

TWO_PI = 2.0 * np.pi
_GL_X, _GL_W = np.polynomial.legendre.leggauss(16)
_GL_X_LO, _GL_W_LO = np.polynomial.legendre.leggauss(8)
ARC_PANEL = np.pi / 8
_LEN_EPS = 1e-14


def cross2(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def unit2(angle):
    angle = np.asarray(angle, dtype=float)
    return np.stack([np.cos(angle), np.sin(angle)], axis=-1)


def lift(xy):
    """Point of the unit sphere above chart coordinates ``xy`` (pole = +z)."""
    xy = np.asarray(xy, dtype=float)
    v = np.concatenate([xy, np.ones(xy.shape[:-1] + (1,))], axis=-1)
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def geodesic_triangle_area(a, b):
    """Signed area of the geodesic triangle (pole, g^{-1}(a), g^{-1}(b)).

    Van Oosterom-Strackee formula written on unnormalised lifts ``(x, 1)``;
    positive when ``a -> b`` turns counterclockwise about the origin.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    la = np.sqrt(1.0 + np.sum(a * a, axis=-1))
    lb = np.sqrt(1.0 + np.sum(b * b, axis=-1))
    den = la * lb + la + lb + np.sum(a * b, axis=-1) + 1.0
    return 2.0 * np.arctan2(cross2(a, b), den)


def geodesic_length(a, b):
    """Great-circle length of the gnomonic preimage of the segment ``ab``."""
    pa = lift(a)
    pb = lift(b)
    return 2.0 * np.arctan2(np.linalg.norm(pa - pb, axis=-1), np.linalg.norm(pa + pb, axis=-1))


def _composite_gl(t0, t1, nodes=_GL_X, weights=_GL_W, panel=ARC_PANEL):
    span = t1 - t0
    panels = max(1, int(np.ceil(span / panel)))
    edges = t0 + span * np.arange(panels + 1) / panels
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    theta = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    return theta, w


# ---------------------------------------------------------------------------
# boundary pieces


@dataclass(frozen=True, eq=False)
class Segment:
    start: np.ndarray
    end: np.ndarray

    def euclid_green(self) -> float:
        return 0.5 * float(cross2(self.start, self.end))

    def sphere_green(self) -> float:
        return float(geodesic_triangle_area(self.start, self.end))

    def length(self) -> float:
        return float(np.linalg.norm(self.end - self.start))

    def sphere_length(self) -> float:
        return float(geodesic_length(self.start, self.end))

    def support(self, d):
        return np.maximum(d @ self.start, d @ self.end)

    def restrict(self, a, b):
        """Part of the segment inside ``{y : a.y <= b}`` (list of 0 or 1 pieces)."""
        da = float(self.start @ a - b)
        db = float(self.end @ a - b)
        if da <= 0 and db <= 0:
            return [self]
        if da > 0 and db > 0:
            return []
        p = self.start + (da / (da - db)) * (self.end - self.start)
        piece = Segment(self.start, p) if da <= 0 else Segment(p, self.end)
        return [piece] if piece.length() > _LEN_EPS else []

    def distance(self, x) -> float:
        e = self.end - self.start
        t = np.clip((x - self.start) @ e / max(e @ e, 1e-300), 0.0, 1.0)
        return float(np.linalg.norm(self.start + t * e - x))


@dataclass(frozen=True, eq=False)
class Arc:
    """Boundary arc of ``ellipse`` for normal angles in ``[t0, t1]``."""

    ellipse: "Ellipse"
    t0: float
    t1: float

    def nodes(self, low: bool = False):
        x, w = (_GL_X_LO, _GL_W_LO) if low else (_GL_X, _GL_W)
        return _composite_gl(self.t0, self.t1, x, w)

    def _green(self, spherical: bool, low: bool = False) -> float:
        th, w = self.nodes(low)
        x = self.ellipse.point(th)
        dx = self.ellipse.tangent(th)
        c = cross2(x, dx)
        if spherical:
            q = np.sqrt(1.0 + np.sum(x * x, axis=-1))
            return float(np.sum(w * c / (q * (1.0 + q))))
        return float(0.5 * np.sum(w * c))

    def euclid_green(self) -> float:
        return self._green(False)

    def sphere_green(self, low: bool = False) -> float:
        return self._green(True, low)

    def length(self) -> float:
        th, w = self.nodes()
        return float(np.sum(w * self.ellipse.speed(th)))

    def sphere_length(self) -> float:
        th, w = self.nodes()
        x = self.ellipse.point(th)
        n = unit2(th)
        q2 = 1.0 + np.sum(x * x, axis=-1)
        p = np.sum(x * n, axis=-1)
        return float(np.sum(w * self.ellipse.speed(th) * np.sqrt(1.0 + p * p) / q2))

    @property
    def start(self):
        return self.ellipse.point(self.t0)

    @property
    def end(self):
        return self.ellipse.point(self.t1)

    def contains_angle(self, theta):
        off = np.mod(np.asarray(theta) - self.t0, TWO_PI)
        return off <= (self.t1 - self.t0) + 1e-15

    def support(self, d):
        d = np.atleast_2d(d)
        th = np.arctan2(d[:, 1], d[:, 0])
        inside = self.contains_angle(th)
        ends = np.maximum(d @ self.start, d @ self.end)
        return np.where(inside, self.ellipse.support(d), ends)

    def restrict(self, a, b):
        """Sub-arcs inside ``{y : a.y <= b}``."""
        pts = self.ellipse.line_intersections(a, b)
        cuts = [self.t0, self.t1]
        for p in pts:
            th = float(self.ellipse.normal_angle(p))
            off = np.mod(th - self.t0, TWO_PI)
            if 0.0 < off < self.t1 - self.t0:
                cuts.append(self.t0 + off)
        cuts.sort()
        out = []
        for lo, hi in zip(cuts[:-1], cuts[1:]):
            if hi - lo <= 1e-15:
                continue
            mid = self.ellipse.point(0.5 * (lo + hi))
            if mid @ a <= b:
                out.append(Arc(self.ellipse, lo, hi))
        return out

    def distance(self, x) -> float:
        th = float(self.ellipse.normal_angle(x))
        if self.contains_angle(th):
            return float(np.linalg.norm(self.ellipse.point(th) - x))
        return min(float(np.linalg.norm(self.start - x)), float(np.linalg.norm(self.end - x)))


# ---------------------------------------------------------------------------
# regions


class Region:
    """Compact convex region of the plane."""

    def pieces(self) -> list:
        raise NotImplementedError

    def is_empty(self) -> bool:
        return len(self.pieces()) == 0 or self.area() <= 1e-14

    def area(self) -> float:
        return float(sum(p.euclid_green() for p in self.pieces()))

    def sphere_area(self) -> float:
        """Spherical area of the gnomonic preimage."""
        return float(sum(p.sphere_green() for p in self.pieces()))

    def sphere_area_estimate(self) -> tuple[float, float, int]:
        """``(value, error estimate, evaluations)`` using a halved arc rule."""
        hi = lo = 0.0
        evals = 0
        for p in self.pieces():
            if isinstance(p, Arc):
                hi += p.sphere_green()
                lo += p.sphere_green(low=True)
                evals += p.nodes()[0].size
            else:
                g = p.sphere_green()
                hi += g
                lo += g
                evals += 1
        return hi, abs(hi - lo), max(evals, 1)

    def sphere_perimeter(self) -> float:
        return float(sum(p.sphere_length() for p in self.pieces()))

    def perimeter(self) -> float:
        return float(sum(p.length() for p in self.pieces()))

    def support(self, d):
        d = np.atleast_2d(np.asarray(d, dtype=float))
        vals = [p.support(d) for p in self.pieces()]
        return np.max(vals, axis=0)

    def contains(self, pts, tol: float = 1e-12):
        raise NotImplementedError

    def radial(self, d):
        raise NotImplementedError

    def clip(self, a, b) -> "Region":
        """Intersection with the halfplane ``{y : a.y <= b}``."""
        raise NotImplementedError

    def cut(self, v, t) -> "Region":
        """Intersection with ``{y : v.y >= t}``."""
        return self.clip(-np.asarray(v, dtype=float), -float(t))

    def cut_measures(self, angles, offsets, spherical: bool = True):
        """Measures of the cuts ``{y . v(angle) >= offset}``, one per pair."""
        angles = np.asarray(angles, dtype=float)
        offsets = np.broadcast_to(np.asarray(offsets, dtype=float), angles.shape)
        out = np.empty(angles.shape)
        dirs = unit2(angles)
        for i in np.ndindex(angles.shape):
            r = self.cut(dirs[i], offsets[i])
            out[i] = r.sphere_area() if spherical else r.area()
        return out

    def centroid(self):
        pts = self.sample_boundary(256)
        return pts.mean(axis=0)

    def sample_boundary(self, m: int):
        """About ``m`` points spread over the boundary by Euclidean length."""
        pieces = self.pieces()
        if not pieces:
            return np.zeros((0, 2))
        lengths = np.array([max(p.length(), 0.0) for p in pieces])
        total = lengths.sum()
        out = []
        for p, ell in zip(pieces, lengths):
            k = max(1, int(round(m * ell / total))) if total > 0 else 1
            s = np.arange(k) / k
            if isinstance(p, Segment):
                out.append(p.start + s[:, None] * (p.end - p.start))
            else:
                out.append(p.ellipse.point(p.t0 + s * (p.t1 - p.t0)))
        return np.concatenate(out)

    def inner_radius(self) -> float:
        """Distance from the origin to the boundary (origin assumed interior)."""
        raise NotImplementedError

    def outer_radius(self) -> float:
        """Largest distance from the origin to a point of the region."""
        raise NotImplementedError

    def polar(self) -> "Region":
        raise UnsupportedBody(f"polar of {type(self).__name__} is not representable")

    def halfplanes(self):
        """``(normals, offsets)`` of straight boundary constraints, if any."""
        return np.zeros((0, 2)), np.zeros(0)


class Polygon(Region):
    """Convex polygon with counterclockwise vertices.

    One- and two-vertex polygons are allowed as degenerate (interior-free)
    regions; only the support function is meaningful for them. With
    ``smooth=True`` the vertices are read as samples of a curved boundary
    (curvature is estimated from them instead of being zero on edges).
    """

    def __init__(self, vertices, smooth: bool = False):
        v = np.asarray(vertices, dtype=float).reshape(-1, 2)
        if len(v) >= 3 and _shoelace(v) < 0:
            v = v[::-1]
        self.vertices = v
        self.smooth = smooth

    def __repr__(self):
        return f"Polygon({len(self.vertices)} vertices)"

    @classmethod
    def hull(cls, points) -> "Polygon":
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        if len(pts) >= 3:
            try:
                h = ConvexHull(pts)
                return cls(pts[h.vertices])
            except QhullError:
                pass
        # collinear or tiny inputs: keep the two extreme points
        if len(pts) <= 1:
            return cls(pts)
        d = pts - pts[0]
        axis = d[np.argmax(np.linalg.norm(d, axis=1))]
        s = d @ axis
        lo, hi = pts[np.argmin(s)], pts[np.argmax(s)]
        return cls([lo] if np.allclose(lo, hi) else [lo, hi])

    @classmethod
    def box(cls, center, half):
        cx, cy = center
        return cls([[cx - half, cy - half], [cx + half, cy - half],
                    [cx + half, cy + half], [cx - half, cy + half]])

    def is_convex(self) -> bool:
        v = self.vertices
        if len(v) < 3:
            return True
        e = np.roll(v, -1, axis=0) - v
        c = cross2(e, np.roll(e, -1, axis=0))
        scale = np.max(np.linalg.norm(e, axis=1)) ** 2
        return bool(np.all(c >= -1e-12 * scale) or np.all(c <= 1e-12 * scale))

    def pieces(self):
        v = self.vertices
        if len(v) < 2:
            return []
        w = np.roll(v, -1, axis=0)
        return [Segment(a, b) for a, b in zip(v, w) if np.linalg.norm(b - a) > _LEN_EPS]

    def area(self) -> float:
        return 0.5 * _shoelace(self.vertices) if len(self.vertices) >= 3 else 0.0

    def sphere_area(self) -> float:
        v = self.vertices
        if len(v) < 3:
            return 0.0
        # fan from the first vertex: short triangles keep slivers accurate
        return float(np.sum(_fan_area(v[0], v[1:-1], v[2:])))

    def halfplanes(self):
        v = self.vertices
        if len(v) < 3:
            return np.zeros((0, 2)), np.zeros(0)
        e = np.roll(v, -1, axis=0) - v
        ln = np.linalg.norm(e, axis=1)
        keep = ln > _LEN_EPS
        n = np.stack([e[keep, 1], -e[keep, 0]], axis=1) / ln[keep, None]
        return n, np.sum(n * v[keep], axis=1)

    def support(self, d):
        d = np.atleast_2d(np.asarray(d, dtype=float))
        return np.max(self.vertices @ d.T, axis=0)

    def contains(self, pts, tol: float = 1e-12):
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        n, off = self.halfplanes()
        if len(n) == 0:
            return np.zeros(len(pts), dtype=bool)
        return np.all(pts @ n.T - off <= tol, axis=1)

    def radial(self, d):
        d = np.atleast_2d(np.asarray(d, dtype=float))
        n, off = self.halfplanes()
        if len(n) == 0 or np.min(off) <= 0:
            raise PoleNotInterior("origin is not interior to the polygon")
        nd = d @ n.T
        with np.errstate(divide="ignore"):
            r = np.where(nd > 0, off / np.where(nd > 0, nd, 1.0), np.inf)
        return np.min(r, axis=1)

    def inner_radius(self) -> float:
        _, off = self.halfplanes()
        return float(np.min(off))

    def outer_radius(self) -> float:
        return float(np.max(np.linalg.norm(self.vertices, axis=1)))

    def clip(self, a, b) -> "Polygon":
        return Polygon(clip_polygon(self.vertices, np.asarray(a, dtype=float), float(b)))

    def cut_measures(self, angles, offsets, spherical: bool = True):
        """Vectorised measures of the cuts ``{y . v(angle) >= offset}``.

        Each cut is bounded by the clipped edges plus one chord from the exit
        point to the entry point; the Green sum runs over both.
        """
        angles = np.atleast_1d(np.asarray(angles, dtype=float))
        t = np.broadcast_to(np.asarray(offsets, dtype=float), angles.shape)
        p = self.vertices
        if len(p) < 3:
            return np.zeros(angles.shape)
        q = np.roll(p, -1, axis=0)
        d = unit2(angles) @ p.T - t[:, None]
        dn = np.roll(d, -1, axis=1)
        ins = d >= 0.0
        insn = dn >= 0.0
        with np.errstate(divide="ignore", invalid="ignore"):
            lam = np.where(ins != insn, d / (d - dn), 0.0)
        x = p[None] + lam[..., None] * (q - p)[None]
        a = np.where(ins[..., None], p[None], x)
        b = np.where(insn[..., None], q[None], x)
        term = geodesic_triangle_area if spherical else (lambda s, e: 0.5 * cross2(s, e))
        total = np.sum(np.where(ins | insn, term(a, b), 0.0), axis=1)
        exits = ins & ~insn
        entries = ~ins & insn
        has = exits.any(axis=1)
        rows = np.arange(len(angles))
        x_out = x[rows, np.argmax(exits, axis=1)]
        x_in = x[rows, np.argmax(entries, axis=1)]
        return total + np.where(has, term(x_out, x_in), 0.0)

    def polar(self) -> "Polygon":
        n, off = self.halfplanes()
        if len(n) == 0 or np.min(off) <= 0:
            raise PoleNotInterior("polar needs the origin in the interior")
        return Polygon(n / off[:, None])

    def centroid(self):
        v = self.vertices
        if len(v) < 3:
            return v.mean(axis=0)
        w = np.roll(v, -1, axis=0)
        c = cross2(v, w)
        a = c.sum() / 2.0
        return np.array([np.sum((v[:, 0] + w[:, 0]) * c), np.sum((v[:, 1] + w[:, 1]) * c)]) / (6 * a)


def _fan_area(o, a, b):
    # signed spherical area of triangles (o, a_i, b_i) = T(p,o,a)+T(p,a,b)+T(p,b,o)
    return geodesic_triangle_area(o, a) + geodesic_triangle_area(a, b) + geodesic_triangle_area(b, o)


def _shoelace(v) -> float:
    w = np.roll(v, -1, axis=0)
    return float(np.sum(cross2(v, w)))


def clip_polygon(vertices, a, b):
    """Sutherland-Hodgman clip of a convex polygon to ``{y : a.y <= b}``."""
    p = np.asarray(vertices, dtype=float)
    if len(p) == 0:
        return p
    d = p @ a - b
    inside = d <= 0.0
    if inside.all():
        return p
    if not inside.any():
        return np.zeros((0, 2))
    q = np.roll(p, -1, axis=0)
    dq = np.roll(d, -1)
    cross = inside != np.roll(inside, -1)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(cross, d / (d - dq), 0.0)
    x = p + t[:, None] * (q - p)
    cand = np.stack([p, x], axis=1)
    mask = np.stack([inside, cross], axis=1)
    out = cand[mask]
    if len(out) > 1:
        step = np.linalg.norm(out - np.roll(out, 1, axis=0), axis=1)
        scale = max(1.0, float(np.max(np.abs(out))))
        out = out[step > 1e-15 * scale] if np.any(step > 1e-15 * scale) else out[:1]
    return out


def intersect_halfplanes(normals, offsets, half_size: float | None = None) -> Polygon:
    """Polygon ``{y : n_i . y <= t_i for all i}``, bounded by a large box."""
    normals = np.asarray(normals, dtype=float)
    offsets = np.asarray(offsets, dtype=float)
    if half_size is None:
        half_size = 4.0 * float(np.max(np.abs(offsets))) + 1.0
    poly = Polygon.box((0.0, 0.0), half_size).vertices
    for n, t in zip(normals, offsets):
        poly = clip_polygon(poly, n, t)
        if len(poly) == 0:
            break
    return Polygon(poly)


class SupportSampled(Polygon):
    """Region given by support values ``h(angle_i) > 0`` at sampled directions.

    Geometrically it is the polygon ``{y : y . v_i <= h_i}``; the vertices are
    treated as samples of a smooth curve when curvature is estimated.
    """

    def __init__(self, angles, values):
        self.angles = np.asarray(angles, dtype=float)
        self.values = np.asarray(values, dtype=float)
        poly = intersect_halfplanes(unit2(self.angles), self.values)
        super().__init__(poly.vertices, smooth=True)

    def __repr__(self):
        return f"SupportSampled({len(self.angles)} directions)"


class Ellipse(Region):
    """Ellipse ``{center + S^{1/2} z : |z| <= 1}`` with support
    ``h(n) = center . n + sqrt(n^T S n)``."""

    def __init__(self, center, shape):
        self.center = np.asarray(center, dtype=float).reshape(2)
        s = np.asarray(shape, dtype=float).reshape(2, 2)
        s = 0.5 * (s + s.T)
        if np.linalg.eigvalsh(s)[0] <= 0:
            raise ValueError("ellipse shape matrix must be positive definite")
        self.shape = s
        self.q = np.linalg.inv(s)
        self.det = float(np.linalg.det(s))

    def __repr__(self):
        return f"Ellipse(center={self.center.tolist()}, shape={self.shape.tolist()})"

    @classmethod
    def disk(cls, radius: float, center=(0.0, 0.0)) -> "Ellipse":
        return cls(center, radius * radius * np.eye(2))

    @classmethod
    def from_axes(cls, semi_axes, angle: float = 0.0, center=(0.0, 0.0)) -> "Ellipse":
        a, b = semi_axes
        r = np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])
        return cls(center, r @ np.diag([a * a, b * b]) @ r.T)

    @classmethod
    def from_quadric(cls, a, b, k) -> "Ellipse":
        """Region ``{y : y^T a y + 2 b.y + k <= 0}`` with ``a`` positive definite."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        if np.linalg.eigvalsh(0.5 * (a + a.T))[0] <= 0:
            raise BodyNotInOpenHemisphere("quadric is not an ellipse in this chart")
        ainv = np.linalg.inv(a)
        c = -ainv @ b
        r = float(b @ ainv @ b - k)
        if r <= 0:
            raise ValueError("empty quadric region")
        return cls(c, r * ainv)

    def quadric(self):
        """``(a, b, k)`` with the region equal to ``{y^T a y + 2 b.y + k <= 0}``."""
        return self.q, -self.q @ self.center, float(self.center @ self.q @ self.center - 1.0)

    def pieces(self):
        return [Arc(self, 0.0, TWO_PI)]

    def area(self) -> float:
        return float(np.pi * np.sqrt(self.det))

    def _qn(self, theta):
        n = unit2(theta)
        return n, np.einsum("...i,ij,...j->...", n, self.shape, n)

    def point(self, theta):
        """Boundary point with outer normal angle ``theta``."""
        n, qn = self._qn(theta)
        return self.center + (n @ self.shape) / np.sqrt(qn)[..., None]

    def tangent(self, theta):
        """Derivative of :meth:`point` with respect to ``theta``."""
        n, qn = self._qn(theta)
        t = np.stack([-n[..., 1], n[..., 0]], axis=-1)
        st = t @ self.shape
        sn = n @ self.shape
        nst = np.sum(n * st, axis=-1)
        return st / np.sqrt(qn)[..., None] - sn * (nst / qn ** 1.5)[..., None]

    def speed(self, theta):
        """Radius of curvature ``det S / (n^T S n)^{3/2}`` = ``|d point / d theta|``."""
        _, qn = self._qn(theta)
        return self.det / qn ** 1.5

    def curvature(self, theta):
        _, qn = self._qn(theta)
        return qn ** 1.5 / self.det

    def normal_angle(self, pts):
        g = (np.asarray(pts, dtype=float) - self.center) @ self.q
        return np.arctan2(g[..., 1], g[..., 0])

    def support(self, d):
        d = np.atleast_2d(np.asarray(d, dtype=float))
        return d @ self.center + np.sqrt(np.einsum("ij,jk,ik->i", d, self.shape, d))

    def level(self, pts):
        y = np.asarray(pts, dtype=float) - self.center
        return np.einsum("...i,ij,...j->...", y, self.q, y)

    def contains(self, pts, tol: float = 1e-12):
        return np.atleast_1d(self.level(np.atleast_2d(pts)) <= 1.0 + tol)

    def radial(self, d):
        d = np.atleast_2d(np.asarray(d, dtype=float))
        if self.level(np.zeros(2)) >= 1.0:
            raise PoleNotInterior("origin is not interior to the ellipse")
        a = np.einsum("ij,jk,ik->i", d, self.q, d)
        b = -d @ (self.q @ self.center)
        c = float(self.center @ self.q @ self.center) - 1.0
        return (-b + np.sqrt(b * b - a * c)) / a

    def _dense_radial(self):
        th = np.linspace(0, TWO_PI, 4096, endpoint=False)
        return th, self.radial(unit2(th))

    def inner_radius(self) -> float:
        from scipy.optimize import minimize_scalar
        th, r = self._dense_radial()
        i = int(np.argmin(r))
        h = TWO_PI / len(th)
        res = minimize_scalar(lambda t: float(self.radial(unit2(t))[0]),
                              bounds=(th[i] - h, th[i] + h), method="bounded",
                              options={"xatol": 1e-13})
        return float(min(res.fun, r[i]))

    def outer_radius(self) -> float:
        from scipy.optimize import minimize_scalar
        th = np.linspace(0, TWO_PI, 4096, endpoint=False)
        r = np.linalg.norm(self.point(th), axis=1)
        i = int(np.argmax(r))
        h = TWO_PI / len(th)
        res = minimize_scalar(lambda t: -float(np.linalg.norm(self.point(t))),
                              bounds=(th[i] - h, th[i] + h), method="bounded",
                              options={"xatol": 1e-13})
        return float(max(-res.fun, r[i]))

    def line_intersections(self, a, b):
        """Boundary points on the line ``a.y = b`` (0, 1 or 2 points)."""
        a = np.asarray(a, dtype=float)
        na = np.linalg.norm(a)
        a = a / na
        b = b / na
        d = np.array([-a[1], a[0]])
        y0 = b * a - self.center
        qa = d @ self.q @ d
        qb = y0 @ self.q @ d
        qc = y0 @ self.q @ y0 - 1.0
        disc = qb * qb - qa * qc
        if disc < 0:
            return []
        r = np.sqrt(disc)
        return [b * a + ((-qb - r) / qa) * d, b * a + ((-qb + r) / qa) * d]

    def clip(self, a, b) -> "Region":
        return ClippedEllipse(self, [(a, b)])

    def polar(self) -> "Ellipse":
        c = self.center
        if self.level(np.zeros(2)) >= 1.0:
            raise PoleNotInterior("polar needs the origin in the interior")
        return Ellipse.from_quadric(self.shape - np.outer(c, c), c, -1.0)

    def cut_measures(self, angles, offsets, spherical: bool = True):
        """Vectorised measures of ``ellipse cap {y . v >= t}``."""
        angles = np.atleast_1d(np.asarray(angles, dtype=float))
        t = np.broadcast_to(np.asarray(offsets, dtype=float), angles.shape).astype(float)
        v = unit2(angles)
        vp = np.stack([-v[:, 1], v[:, 0]], axis=1)
        y0 = t[:, None] * v - self.center
        qa = np.einsum("ij,jk,ik->i", vp, self.q, vp)
        qb = np.einsum("ij,jk,ik->i", y0, self.q, vp)
        qc = np.einsum("ij,jk,ik->i", y0, self.q, y0) - 1.0
        disc = qb * qb - qa * qc
        full = self.sphere_area() if spherical else self.area()
        out = np.where(t >= self.support(v), 0.0, full)
        hit = disc > 0
        if not np.any(hit):
            return out
        r = np.sqrt(disc[hit])
        tau_lo = (-qb[hit] - r) / qa[hit]
        tau_hi = (-qb[hit] + r) / qa[hit]
        base = t[hit, None] * v[hit]
        p_lo = base + tau_lo[:, None] * vp[hit]
        p_hi = base + tau_hi[:, None] * vp[hit]
        th_v = angles[hit]
        start = th_v - np.clip(np.mod(th_v - self.normal_angle(p_lo), TWO_PI), 0.0, np.pi)
        end = th_v + np.clip(np.mod(self.normal_angle(p_hi) - th_v, TWO_PI), 0.0, np.pi)
        # composite Gauss-Legendre, 8 panels x 16 nodes per arc
        panels = 8
        k = np.arange(panels)
        span = (end - start) / panels
        mid = start[:, None] + span[:, None] * (k[None, :] + 0.5)
        theta = (mid[:, :, None] + 0.5 * span[:, None, None] * _GL_X[None, None, :]).reshape(len(start), -1)
        w = np.broadcast_to((0.5 * span)[:, None, None] * _GL_W[None, None, :],
                            (len(start), panels, _GL_X.size)).reshape(len(start), -1)
        x = self.point(theta)
        dx = self.tangent(theta)
        c = cross2(x, dx)
        if spherical:
            q = np.sqrt(1.0 + np.sum(x * x, axis=-1))
            arc = np.sum(w * c / (q * (1.0 + q)), axis=1)
            chord = geodesic_triangle_area(p_hi, p_lo)
        else:
            arc = 0.5 * np.sum(w * c, axis=1)
            chord = 0.5 * cross2(p_hi, p_lo)
        out = out.copy()
        out[hit] = arc + chord
        return out


class ClippedEllipse(Region):
    """Ellipse intersected with finitely many halfplanes ``a.y <= b``."""

    def __init__(self, ellipse: Ellipse, halfplanes):
        self.ellipse = ellipse
        hp = []
        for a, b in halfplanes:
            a = np.asarray(a, dtype=float)
            na = np.linalg.norm(a)
            hp.append((a / na, float(b) / na))
        self.constraints = hp
        self._pieces = None

    def __repr__(self):
        return f"ClippedEllipse({self.ellipse!r}, {len(self.constraints)} halfplanes)"

    def window(self) -> Polygon:
        e = self.ellipse
        half = 2.0 * float(np.sqrt(np.max(np.diag(e.shape)))) + 1.0
        poly = Polygon.box(e.center, half)
        for a, b in self.constraints:
            poly = poly.clip(a, b)
        return poly

    def halfplanes(self):
        if not self.constraints:
            return np.zeros((0, 2)), np.zeros(0)
        return (np.array([a for a, _ in self.constraints]),
                np.array([b for _, b in self.constraints]))

    def pieces(self):
        if self._pieces is None:
            self._pieces = self._build_pieces()
        return self._pieces

    def _build_pieces(self):
        e = self.ellipse
        w = self.window()
        v = w.vertices
        if len(v) < 3:
            return []
        segs = []
        for p, q in zip(v, np.roll(v, -1, axis=0)):
            d = q - p
            y0 = p - e.center
            qa = d @ e.q @ d
            qb = y0 @ e.q @ d
            qc = y0 @ e.q @ y0 - 1.0
            disc = qb * qb - qa * qc
            if qa <= 0 or disc <= 0:
                continue
            r = np.sqrt(disc)
            lo = max(0.0, (-qb - r) / qa)
            hi = min(1.0, (-qb + r) / qa)
            if (hi - lo) * np.sqrt(qa) <= 0 or (hi - lo) * np.linalg.norm(d) <= _LEN_EPS:
                continue
            segs.append(Segment(p + lo * d, p + hi * d))
        if not segs:
            return e.pieces() if w.contains(e.center[None, :])[0] else []
        pieces = []
        for i, s in enumerate(segs):
            pieces.append(s)
            nxt = segs[(i + 1) % len(segs)]
            if np.linalg.norm(s.end - nxt.start) > 1e-12:
                t0 = float(e.normal_angle(s.end))
                t1 = float(e.normal_angle(nxt.start))
                while t1 <= t0:
                    t1 += TWO_PI
                pieces.append(Arc(e, t0, t1))
        return pieces

    def contains(self, pts, tol: float = 1e-12):
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        ok = self.ellipse.contains(pts, tol)
        for a, b in self.constraints:
            ok &= pts @ a - b <= tol
        return ok

    def radial(self, d):
        d = np.atleast_2d(np.asarray(d, dtype=float))
        r = self.ellipse.radial(d)
        for a, b in self.constraints:
            if b <= 0:
                raise PoleNotInterior("origin is not interior to the clipped region")
            ad = d @ a
            with np.errstate(divide="ignore"):
                r = np.minimum(r, np.where(ad > 0, b / np.where(ad > 0, ad, 1.0), np.inf))
        return r

    def inner_radius(self) -> float:
        r = self.ellipse.inner_radius()
        for a, b in self.constraints:
            r = min(r, b)
        return float(r)

    def outer_radius(self) -> float:
        best = 0.0
        for p in self.pieces():
            if isinstance(p, Segment):
                best = max(best, np.linalg.norm(p.start), np.linalg.norm(p.end))
            else:
                th = np.linspace(p.t0, p.t1, 2049)
                best = max(best, float(np.max(np.linalg.norm(p.ellipse.point(th), axis=1))))
        return float(best)

    def clip(self, a, b) -> "ClippedEllipse":
        return ClippedEllipse(self.ellipse, self.constraints + [(a, b)])


def circle_fit_curvature(windows, outward):
    """Signed curvature of algebraic circle fits through point windows.

    ``windows`` has shape ``(m, k, 2)`` (k >= 3 points each); ``outward`` is
    an outward direction per window used to orient the sign (positive when
    the fitted centre lies on the inner side). Returns ``(kappa, centers)``;
    centres are NaN where the fit is a straight line.
    """
    w = np.asarray(windows, dtype=float)
    mid = w[:, w.shape[1] // 2, :]
    y = w - mid[:, None, :]
    scale = np.maximum(np.max(np.linalg.norm(y, axis=2), axis=1), 1e-300)
    y = y / scale[:, None, None]
    m = np.concatenate([np.sum(y * y, axis=2, keepdims=True), y, np.ones(y.shape[:2] + (1,))], axis=2)
    _, _, vt = np.linalg.svd(m)
    a, d, e, f = np.moveaxis(vt[:, -1, :], -1, 0)
    rad2 = d * d + e * e - 4.0 * a * f
    kappa = 2.0 * np.abs(a) / np.sqrt(np.maximum(rad2, 1e-300)) / scale
    with np.errstate(divide="ignore", invalid="ignore"):
        center = np.stack([-d / (2 * a), -e / (2 * a)], axis=1)
    center_abs = mid + center * scale[:, None]
    line = np.abs(a) < 1e-12 * np.sqrt(np.maximum(rad2, 1e-300))
    inward = np.sum((center_abs - mid) * outward, axis=1) < 0
    kappa = np.where(line, 0.0, np.where(inward, kappa, -kappa))
    center_abs[line] = np.nan
    return kappa, center_abs
