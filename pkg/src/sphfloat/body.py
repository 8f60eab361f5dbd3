"""Spherical convex bodies on S^2 and their basic maps.

Four representations share one set of free functions:

* :class:`CapBody` -- a geodesic ball;
* :class:`PolytopeBody` -- spherical hull of finitely many unit vectors;
* :class:`ChartBody` -- a convex region in the gnomonic chart of a pole;
* :class:`AnalyticBody` -- a support-function oracle at a pole.

Everything geometric is reduced to a chart region
(:func:`chart_region`), where convexity is ordinary planar convexity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np
from scipy.optimize import linprog

from .chart import HEMISPHERE_EPS, Chart
from .errors import (BodyNotInOpenHemisphere, NoValidPole, NotOrthogonal, NotProperlyContained,
                     PoleNotInterior, UnionNotConvex, UnsupportedBody)
from .regions import (ClippedEllipse, Ellipse, Polygon, Region, SupportSampled, unit2)
from .sphere import ORTHO_TOL, Cap, Hemisphere, geodesic_distance, unit_vector

#: margin used when validating a pole: ``u.w > POLE_MARGIN`` on the body.
POLE_MARGIN = 1e-8
DEFAULT_RESOLUTION = 512


@dataclass(frozen=True, eq=False)
class CapBody:
    cap: Cap

    @classmethod
    def of(cls, center, radius: float) -> "CapBody":
        return cls(Cap(np.asarray(center, dtype=float), float(radius)))

    @property
    def center(self):
        return self.cap.center

    @property
    def radius(self) -> float:
        return self.cap.radius


@dataclass(frozen=True, eq=False)
class PolytopeBody:
    """Spherical hull of ``vertices`` (rows), which lie in an open hemisphere."""

    vertices: np.ndarray

    def __post_init__(self):
        v = unit_vector(np.atleast_2d(np.asarray(self.vertices, dtype=float)))
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "_inner", _separating_direction(v))

    @property
    def inner_direction(self):
        """A direction ``u`` with ``u.p > 0`` for every vertex."""
        return self._inner


@dataclass(frozen=True, eq=False)
class ChartBody:
    """Gnomonic preimage of ``region`` in the chart at ``pole``."""

    pole: np.ndarray
    region: Region
    basis: np.ndarray | None = None
    chart: Chart = field(init=False, repr=False)

    def __post_init__(self):
        ch = Chart(self.pole, self.basis)
        object.__setattr__(self, "pole", ch.pole)
        object.__setattr__(self, "basis", ch.basis)
        object.__setattr__(self, "chart", ch)


@dataclass(frozen=True, eq=False)
class AnalyticBody:
    """Body given by its spherical support function at ``pole``.

    ``support_oracle(angles)`` returns ``h_pole(K, v(angle))`` in
    ``(-pi/2, pi/2)`` for chart direction angles. The optional
    ``curvature_oracle(angles)`` returns the spherical Gauss curvature at
    the boundary point whose chart normal has that angle.
    """

    pole: np.ndarray
    support_oracle: Callable
    curvature_oracle: Callable | None = None
    basis: np.ndarray | None = None
    resolution: int = DEFAULT_RESOLUTION
    chart: Chart = field(init=False, repr=False)

    def __post_init__(self):
        ch = Chart(self.pole, self.basis)
        object.__setattr__(self, "pole", ch.pole)
        object.__setattr__(self, "basis", ch.basis)
        object.__setattr__(self, "chart", ch)
        object.__setattr__(self, "_region", None)

    def region(self) -> SupportSampled:
        if self._region is None:
            th = 2 * np.pi * np.arange(self.resolution) / self.resolution
            h = np.asarray(self.support_oracle(th), dtype=float)
            object.__setattr__(self, "_region", SupportSampled(th, np.tan(h)))
        return self._region


SphericalBody = Union[CapBody, PolytopeBody, ChartBody, AnalyticBody]


# ---------------------------------------------------------------------------
# helpers


def _separating_direction(points) -> np.ndarray:
    """Unit ``u`` maximising ``min_i u.p_i`` over the cube; raises if none is positive."""
    p = np.atleast_2d(points)
    if len(p) == 1:
        return p[0].copy()
    m = p.shape[1]
    # variables (u, t); maximise t subject to t - p_i.u <= 0, |u_j| <= 1
    c = np.zeros(m + 1)
    c[-1] = -1.0
    a_ub = np.hstack([-p, np.ones((len(p), 1))])
    res = linprog(c, A_ub=a_ub, b_ub=np.zeros(len(p)),
                  bounds=[(-1, 1)] * m + [(None, 1)], method="highs")
    if res.status != 0 or -res.fun <= 1e-12:
        raise NotProperlyContained("points do not lie in an open hemisphere")
    u = unit_vector(res.x[:m])
    if np.min(p @ u) <= 0:
        raise NotProperlyContained("points do not lie in an open hemisphere")
    return u


def _chart_of(chart_or_pole) -> Chart:
    return chart_or_pole if isinstance(chart_or_pole, Chart) else Chart(chart_or_pole)


def _cone_matrix(chart: Chart, a, b, k):
    e, u = chart.basis, chart.pole
    eb = e @ b
    return e @ a @ e.T + np.outer(eb, u) + np.outer(u, eb) + k * np.outer(u, u)


def _rechart_halfplane(src: Chart, dst: Chart, a, b):
    """Halfplane ``a.y <= b`` of ``src`` expressed in ``dst`` (``None`` if it is everything)."""
    z = src.basis @ a - b * src.pole
    a2 = dst.basis.T @ z
    b2 = -float(dst.pole @ z)
    na = np.linalg.norm(a2)
    if na < 1e-14:
        if b2 >= 0:
            return None
        raise BodyNotInOpenHemisphere("constraint excludes the whole chart")
    return a2 / na, b2 / na


def _rechart_ellipse(src: Chart, dst: Chart, e: Ellipse) -> Ellipse:
    mat = _cone_matrix(src, *e.quadric())
    a2 = dst.basis.T @ mat @ dst.basis
    b2 = dst.basis.T @ mat @ dst.pole
    k2 = float(dst.pole @ mat @ dst.pole)
    out = Ellipse.from_quadric(a2, b2, k2)
    # the cone has two nappes; make sure we picked the body, not its antipode
    w = dst.to_sphere(out.center)
    if w @ src.pole <= 0 or not e.contains(src.to_plane(w, check=False)[None, :], 1e-9)[0]:
        raise BodyNotInOpenHemisphere("body is not inside the open hemisphere of the new pole")
    return out


def _rechart(src: Chart, region: Region, dst: Chart) -> Region:
    if src.same_as(dst):
        return region
    if isinstance(region, Ellipse):
        return _rechart_ellipse(src, dst, region)
    if isinstance(region, ClippedEllipse):
        e = _rechart_ellipse(src, dst, region.ellipse)
        hp = [h for h in (_rechart_halfplane(src, dst, a, b) for a, b in region.constraints)
              if h is not None]
        return ClippedEllipse(e, hp)
    if isinstance(region, Polygon):
        w = src.to_sphere(region.vertices)
        if np.any(w @ dst.pole <= HEMISPHERE_EPS):
            raise BodyNotInOpenHemisphere("body is not inside the open hemisphere of the new pole")
        return Polygon(dst.to_plane(w), smooth=region.smooth)
    raise UnsupportedBody(f"cannot move {type(region).__name__} between charts")


def _cap_region(cap: Cap, chart: Chart) -> Region:
    c = cap.center
    alpha = cap.radius
    d = float(geodesic_distance(chart.pole, c))
    if alpha >= np.pi / 2 or d + alpha >= np.pi / 2 - HEMISPHERE_EPS:
        raise BodyNotInOpenHemisphere("cap is not inside the open hemisphere of the pole")
    if alpha == 0.0:
        return Polygon(chart.to_plane(c)[None, :])
    c2 = chart.coords(c)
    c0 = float(c @ chart.pole)
    ca2 = np.cos(alpha) ** 2
    return Ellipse.from_quadric(ca2 * np.eye(2) - np.outer(c2, c2), -c0 * c2, ca2 - c0 * c0)


# ---------------------------------------------------------------------------
# charts


def chart_region(K: SphericalBody, chart) -> Region:
    """Gnomonic image ``g_u(K)`` in ``chart`` (a :class:`Chart` or a pole)."""
    chart = _chart_of(chart)
    if isinstance(K, CapBody):
        return _cap_region(K.cap, chart)
    if isinstance(K, PolytopeBody):
        if np.any(K.vertices @ chart.pole <= HEMISPHERE_EPS):
            raise BodyNotInOpenHemisphere("vertex outside the open hemisphere of the pole")
        return Polygon.hull(chart.to_plane(K.vertices))
    if isinstance(K, ChartBody):
        return _rechart(K.chart, K.region, chart)
    if isinstance(K, AnalyticBody):
        return _rechart(K.chart, K.region(), chart)
    raise TypeError(f"not a spherical body: {K!r}")


def native_chart(K: SphericalBody) -> Chart:
    """Chart the body is most naturally described in (no search)."""
    if isinstance(K, CapBody):
        return Chart(K.center)
    if isinstance(K, PolytopeBody):
        return Chart(K.inner_direction)
    return K.chart


def as_chart_body(K: SphericalBody, chart=None) -> ChartBody:
    chart = native_chart(K) if chart is None else _chart_of(chart)
    return ChartBody(chart.pole, chart_region(K, chart), chart.basis)


# ---------------------------------------------------------------------------
# construction


def spherical_hull(points) -> PolytopeBody:
    """Smallest spherical convex body containing ``points``.

    Only extreme points are kept as vertices.
    """
    p = unit_vector(np.atleast_2d(np.asarray(points, dtype=float)))
    u = _separating_direction(p)
    if len(p) == 1:
        return PolytopeBody(p)
    ch = Chart(u)
    xy = ch.to_plane(p)
    hull = Polygon.hull(xy)
    return PolytopeBody(ch.to_sphere(hull.vertices))


def contains(K: SphericalBody, w, tol: float = 1e-12):
    """Membership of unit vectors ``w`` (one or a stack) in ``K``."""
    w = np.atleast_2d(np.asarray(w, dtype=float))
    if isinstance(K, CapBody):
        return geodesic_distance(K.center, w) <= K.radius + tol
    ch = native_chart(K)
    region = chart_region(K, ch)
    up = w @ ch.pole
    ok = up > HEMISPHERE_EPS
    out = np.zeros(len(w), dtype=bool)
    if np.any(ok):
        out[ok] = region.contains(ch.to_plane(w[ok]), tol)
    return out


def intersect_hemisphere(K: SphericalBody, hemisphere: Hemisphere, chart=None) -> ChartBody:
    """``K`` intersected with the closed hemisphere ``{w : pole.w >= 0}``."""
    ch = native_chart(K) if chart is None else _chart_of(chart)
    z = hemisphere.pole
    region = chart_region(K, ch).clip(-(ch.basis.T @ z), float(ch.pole @ z))
    return ChartBody(ch.pole, region, ch.basis)


def _shared_region_pair(K, L):
    ch = native_chart(L)
    try:
        return ch, chart_region(K, ch), chart_region(L, ch)
    except BodyNotInOpenHemisphere:
        ch = native_chart(K)
        return ch, chart_region(K, ch), chart_region(L, ch)


def intersection(K: SphericalBody, L: SphericalBody) -> ChartBody:
    ch, rk, rl = _shared_region_pair(K, L)
    out = rk
    for a, b in zip(*rl.halfplanes()):
        out = out.clip(a, b)
    el = _curved_part(rl)
    if el is not None:
        if isinstance(out, Polygon):
            out = ClippedEllipse(el, list(zip(*out.halfplanes())))
        elif not _same_ellipse(_curved_part(out), el):
            raise UnsupportedBody("intersection of two different curved regions")
    return ChartBody(ch.pole, out, ch.basis)


def _same_ellipse(a: Ellipse, b: Ellipse) -> bool:
    return np.allclose(a.center, b.center, atol=1e-12) and np.allclose(a.shape, b.shape, atol=1e-12)


def union(K: SphericalBody, L: SphericalBody, tol: float = 1e-9) -> ChartBody:
    """Union of two bodies whose union is convex; raises :class:`UnionNotConvex` otherwise.

    Convexity is checked through the area identity
    ``|conv(K u L)| = |K| + |L| - |K n L|`` in a shared chart.
    """
    ch, rk, rl = _shared_region_pair(K, L)
    inter = intersection(ChartBody(ch.pole, rk, ch.basis), ChartBody(ch.pole, rl, ch.basis)).region
    if isinstance(rk, Polygon) and isinstance(rl, Polygon):
        hull = Polygon.hull(np.vstack([rk.vertices, rl.vertices]))
    else:
        ek = _curved_part(rk)
        el = _curved_part(rl)
        e = ek if ek is not None else el
        if ek is not None and el is not None and not _same_ellipse(ek, el):
            raise UnsupportedBody("union of two different curved regions")
        # union of E n Wk and E n Wl is E n conv(Wk u Wl) when the latter is convex
        wk = _window(rk, e)
        wl = _window(rl, e)
        w = Polygon.hull(np.vstack([wk.vertices, wl.vertices]))
        hull = ClippedEllipse(e, list(zip(*w.halfplanes())))
    want = rk.area() + rl.area() - inter.area()
    if abs(hull.area() - want) > tol * max(1.0, hull.area()):
        raise UnionNotConvex(f"convex hull area {hull.area():.12g} exceeds union area {want:.12g}")
    return ChartBody(ch.pole, hull, ch.basis)


def _curved_part(r: Region):
    if isinstance(r, Ellipse):
        return r
    if isinstance(r, ClippedEllipse):
        return r.ellipse
    return None


def _window(r: Region, e: Ellipse) -> Polygon:
    if isinstance(r, ClippedEllipse):
        return r.window()
    if isinstance(r, Ellipse):
        return ClippedEllipse(e, []).window()
    return r


# ---------------------------------------------------------------------------
# support, radial, polar


def _check_tangent(u, v):
    u = unit_vector(u)
    v = unit_vector(v)
    if np.max(np.abs(np.atleast_1d(v @ u))) > ORTHO_TOL:
        raise NotOrthogonal("direction must be orthogonal to the pole")
    return u, v


def support(K: SphericalBody, u, v):
    """Spherical support ``h_u(K, v)`` for ``v`` (one or a stack) in ``S_u``."""
    u, v = _check_tangent(u, v)
    if isinstance(K, PolytopeBody):
        c = K.vertices @ u
        if np.any(c <= HEMISPHERE_EPS):
            raise BodyNotInOpenHemisphere("vertex outside the open hemisphere of the pole")
        vals = np.max(np.arctan2(np.atleast_2d(v) @ K.vertices.T, c[None, :]), axis=1)
        return vals if v.ndim == 2 else float(vals[0])
    if isinstance(K, AnalyticBody) and np.max(np.abs(K.pole - u)) <= 1e-12:
        ang = np.arctan2(v @ K.basis[:, 1], v @ K.basis[:, 0])
        out = np.asarray(K.support_oracle(np.atleast_1d(ang)), dtype=float)
        return out if v.ndim == 2 else float(out[0])
    ch = Chart(u) if not isinstance(K, (ChartBody, AnalyticBody)) or \
        np.max(np.abs(K.pole - u)) > 1e-12 else K.chart
    region = chart_region(K, ch)
    vals = np.arctan(region.support(np.atleast_2d(v) @ ch.basis))
    return vals if v.ndim == 2 else float(vals[0])


def radial(K: SphericalBody, u, v):
    """Radial function ``rho_u(K, v)`` for ``u`` interior to ``K``."""
    u, v = _check_tangent(u, v)
    if isinstance(K, CapBody):
        a = float(K.center @ u)
        b = np.atleast_1d(v @ K.center)
        big_r = np.hypot(a, b)
        if np.any(geodesic_distance(K.center, u) >= K.radius):
            raise PoleNotInterior("pole is not interior to the cap")
        vals = np.arctan2(b, a) + np.arccos(np.clip(np.cos(K.radius) / big_r, -1.0, 1.0))
        return vals if v.ndim == 2 else float(vals[0])
    ch = K.chart if isinstance(K, (ChartBody, AnalyticBody)) and np.max(np.abs(K.pole - u)) <= 1e-12 \
        else Chart(u)
    try:
        region = chart_region(K, ch)
    except BodyNotInOpenHemisphere as exc:
        raise PoleNotInterior(str(exc)) from exc
    vals = np.arctan(region.radial(np.atleast_2d(v) @ ch.basis))
    return vals if v.ndim == 2 else float(vals[0])


def polar(K: SphericalBody) -> SphericalBody:
    """Polar body ``{v : v.w <= 0 for all w in K}``."""
    if isinstance(K, CapBody):
        if K.radius > np.pi / 2:
            raise UnsupportedBody("polar of a cap larger than a hemisphere is empty")
        return CapBody.of(-K.center, np.pi / 2 - K.radius)
    if isinstance(K, PolytopeBody):
        if len(K.vertices) == 1:
            return CapBody.of(-K.vertices[0], np.pi / 2)
        try:
            u = find_pole(K)
        except NoValidPole as exc:
            raise UnsupportedBody("polar of a body without interior is not a proper body") from exc
        ch = Chart(u)
        dual = chart_region(K, ch).polar()
        return PolytopeBody(ch.antipodal().to_sphere(dual.vertices))
    ch = native_chart(K)
    region = chart_region(K, ch)
    if not _origin_interior(region):
        ch = Chart(find_pole(K))
        region = chart_region(K, ch)
    dual = region.polar()
    return ChartBody(-ch.pole, dual, ch.basis)


# ---------------------------------------------------------------------------
# poles and properness


def _origin_interior(region: Region, margin: float = 1e-9) -> bool:
    if region.is_empty() or not region.contains(np.zeros((1, 2)), 0.0)[0]:
        return False
    try:
        r = region.radial(unit2(np.linspace(0, 2 * np.pi, 720, endpoint=False)))
    except PoleNotInterior:
        return False
    return bool(np.min(r) > margin)


def pole_is_valid(K: SphericalBody, u) -> bool:
    """``u`` is interior to ``K`` and ``K`` lies in the open hemisphere of ``u``."""
    u = unit_vector(u)
    try:
        region = chart_region(K, Chart(u))
    except BodyNotInOpenHemisphere:
        return False
    if not _origin_interior(region):
        return False
    # the chart region is bounded, so every w in K has u.w = 1/sqrt(1+|x|^2) > 0
    return bool(1.0 / np.sqrt(1.0 + region.outer_radius() ** 2) > POLE_MARGIN)


def find_pole(K: SphericalBody) -> np.ndarray:
    """A pole ``u`` interior to ``K`` with ``K`` inside the open hemisphere of ``u``."""
    if isinstance(K, CapBody):
        if 0.0 < K.radius < np.pi / 2:
            return K.center.copy()
        raise NoValidPole("cap radius must be in (0, pi/2)")
    candidates = []
    if isinstance(K, PolytopeBody):
        if len(K.vertices) < 3:
            raise NoValidPole("a body with fewer than three vertices has no interior")
        candidates.append(unit_vector(K.vertices.mean(axis=0)))
        candidates.append(K.inner_direction)
    else:
        ch = native_chart(K)
        candidates.append(ch.pole)
        region = chart_region(K, ch)
        if not region.is_empty():
            candidates.append(ch.to_sphere(region.centroid()))
    for u in candidates:
        if pole_is_valid(K, u):
            return unit_vector(u)
    # grid fallback: maximise the worst margin over boundary samples
    pts = boundary_points(K, 256)
    grid = _fibonacci_sphere(4000)
    score = np.min(grid @ pts.T, axis=1)
    for i in np.argsort(-score)[:20]:
        if score[i] > POLE_MARGIN and pole_is_valid(K, grid[i]):
            return grid[i]
    raise NoValidPole("no interior pole found")


def _fibonacci_sphere(m: int) -> np.ndarray:
    i = np.arange(m) + 0.5
    z = 1.0 - 2.0 * i / m
    phi = np.pi * (1.0 + 5 ** 0.5) * i
    r = np.sqrt(1.0 - z * z)
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)


def boundary_points(K: SphericalBody, m: int = 256) -> np.ndarray:
    """About ``m`` unit vectors on the boundary of ``K``."""
    if isinstance(K, CapBody):
        ch = Chart(K.center)
        th = 2 * np.pi * np.arange(m) / m
        return np.cos(K.radius) * K.center + np.sin(K.radius) * ch.direction(th)
    if isinstance(K, PolytopeBody) and len(K.vertices) < 3:
        return K.vertices.copy()
    ch = native_chart(K)
    return ch.to_sphere(chart_region(K, ch).sample_boundary(m))


def is_proper(K: SphericalBody, samples: int = 256) -> bool:
    """No pair of (numerically) antipodal points in ``K``."""
    if isinstance(K, CapBody):
        return K.radius < np.pi / 2 - 1e-12
    try:
        pts = boundary_points(K, samples)
    except BodyNotInOpenHemisphere:
        return False
    if len(pts) == 0:
        return True
    return bool(np.max(-(pts @ pts.T)) < 1.0 - 1e-10)


def volume(K: SphericalBody) -> float:
    """Exact-as-possible area of ``K`` on S^2 (boundary-integral evaluation)."""
    if isinstance(K, CapBody):
        return float(2 * np.pi * (1 - np.cos(K.radius)))
    ch = native_chart(K)
    return chart_region(K, ch).sphere_area()


def support_distance(K: SphericalBody, L: SphericalBody, u=None, m: int = 2048) -> float:
    """``max_v |h_u(K, v) - h_u(L, v)|`` over ``m`` directions of ``S_u``.

    A metric on bodies inside the open hemisphere of ``u``; used to compare
    bodies given in different representations.
    """
    ch = Chart(find_pole(L) if u is None else u)
    v = ch.direction(2 * np.pi * np.arange(m) / m)
    return float(np.max(np.abs(support(K, ch.pole, v) - support(L, ch.pole, v))))


# ---------------------------------------------------------------------------
# JSON body specifications


def body_from_spec(spec: dict) -> SphericalBody:
    """Build a body from a JSON-style mapping; ``ValueError`` names bad fields."""
    if not isinstance(spec, dict):
        raise ValueError("body spec must be a JSON object")
    kind = spec.get("kind")
    if kind == "cap":
        center = _vector(spec, "center", 3)
        radius = _number(spec, "radius")
        if not 0.0 <= radius <= np.pi:
            raise ValueError("field 'radius' must lie in [0, pi]")
        return CapBody.of(center, radius)
    if kind == "polytope":
        verts = _matrix(spec, "vertices", 3)
        return spherical_hull(verts)
    if kind == "chart":
        pole = _vector(spec, "pole", 3)
        basis = None
        if "basis" in spec:
            basis = _matrix(spec, "basis", 3).T
        if "polygon" in spec:
            region: Region = Polygon.hull(_matrix(spec, "polygon", 2))
        elif "ellipse" in spec:
            e = spec["ellipse"]
            if not isinstance(e, dict):
                raise ValueError("field 'ellipse' must be an object")
            region = Ellipse(_vector(e, "center", 2, "ellipse.center"),
                             _matrix(e, "shape", 2, "ellipse.shape"))
            if "halfplanes" in spec:
                hp = _matrix(spec, "halfplanes", 3)
                region = ClippedEllipse(region, [(h[:2], h[2]) for h in hp])
        else:
            raise ValueError("chart body needs field 'polygon' or 'ellipse'")
        try:
            return ChartBody(pole, region, basis)
        except ValueError as exc:
            raise ValueError(f"field 'basis': {exc}") from exc
    raise ValueError("field 'kind' must be one of 'cap', 'polytope', 'chart'")


def body_to_spec(K: SphericalBody) -> dict:
    if isinstance(K, CapBody):
        return {"kind": "cap", "center": K.center.tolist(), "radius": float(K.radius)}
    if isinstance(K, PolytopeBody):
        return {"kind": "polytope", "vertices": K.vertices.tolist()}
    if isinstance(K, AnalyticBody):
        K = ChartBody(K.pole, K.region(), K.basis)
    out = {"kind": "chart", "pole": K.pole.tolist(), "basis": K.basis.T.tolist()}
    r = K.region
    if isinstance(r, Polygon):
        out["polygon"] = r.vertices.tolist()
    elif isinstance(r, Ellipse):
        out["ellipse"] = {"center": r.center.tolist(), "shape": r.shape.tolist()}
    elif isinstance(r, ClippedEllipse):
        out["ellipse"] = {"center": r.ellipse.center.tolist(), "shape": r.ellipse.shape.tolist()}
        out["halfplanes"] = [[float(a[0]), float(a[1]), float(b)] for a, b in r.constraints]
    else:
        raise UnsupportedBody(f"cannot serialise {type(r).__name__}")
    return out


def load_body(path) -> SphericalBody:
    with open(path, encoding="utf-8") as fh:
        try:
            spec = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"body spec is not valid JSON: {exc}") from exc
    return body_from_spec(spec)


def dump_body(K: SphericalBody) -> str:
    return json.dumps(body_to_spec(K), indent=2)


def _number(spec, key, name=None) -> float:
    name = name or key
    if key not in spec:
        raise ValueError(f"missing field '{name}'")
    val = spec[key]
    if isinstance(val, bool) or not isinstance(val, (int, float)) or not np.isfinite(val):
        raise ValueError(f"field '{name}' must be a finite number")
    return float(val)


def _vector(spec, key, dim, name=None) -> np.ndarray:
    name = name or key
    if key not in spec:
        raise ValueError(f"missing field '{name}'")
    try:
        v = np.asarray(spec[key], dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"field '{name}' must be a list of {dim} numbers") from exc
    if v.shape != (dim,) or not np.all(np.isfinite(v)):
        raise ValueError(f"field '{name}' must be a list of {dim} numbers")
    if dim == 3 and np.linalg.norm(v) == 0:
        raise ValueError(f"field '{name}' must be nonzero")
    return v


def _matrix(spec, key, cols, name=None) -> np.ndarray:
    name = name or key
    if key not in spec:
        raise ValueError(f"missing field '{name}'")
    try:
        m = np.asarray(spec[key], dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"field '{name}' must be a list of {cols}-vectors") from exc
    if m.ndim != 2 or m.shape[1] != cols or len(m) == 0 or not np.all(np.isfinite(m)):
        raise ValueError(f"field '{name}' must be a nonempty list of {cols}-vectors")
    if cols == 3 and key == "vertices" and np.any(np.linalg.norm(m, axis=1) == 0):
        raise ValueError(f"field '{name}' contains a zero vector")
    return m
