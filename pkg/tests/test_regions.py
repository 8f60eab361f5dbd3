import numpy as np
from hypothesis import given, strategies as st

from sphfloat.regions import (ClippedEllipse, Ellipse, Polygon, SupportSampled, circle_fit_curvature,
                              clip_polygon, geodesic_triangle_area, intersect_halfplanes, unit2)
from sphfloat.quadrature import density_integral_fan

FACE = Polygon([[-1, -1], [1, -1], [1, 1], [-1, 1]])


def test_cube_face_area():
    assert abs(FACE.area() - 4) < 1e-15
    assert abs(FACE.sphere_area() - 4 * np.pi / 6) < 1e-14
    assert abs(density_integral_fan(FACE, levels=4) - 4 * np.pi / 6) < 1e-6


def test_octant_triangle():
    # gnomonic image of the octant seen from (1,1,1)/sqrt3 has area pi/2 on the sphere
    from sphfloat.chart import Chart
    ch = Chart(np.ones(3) / np.sqrt(3))
    tri = Polygon(ch.to_plane(np.eye(3)))
    assert abs(tri.sphere_area() - np.pi / 2) < 1e-14
    assert abs(tri.sphere_perimeter() - 3 * np.pi / 2) < 1e-14


def test_disk_sphere_area_is_cap_area():
    for a in (0.3, np.pi / 4, 1.2):
        disk = Ellipse.disk(np.tan(a))
        assert abs(disk.sphere_area() - 2 * np.pi * (1 - np.cos(a))) < 1e-12
        assert abs(disk.sphere_perimeter() - 2 * np.pi * np.sin(a)) < 1e-12


def test_geodesic_triangle_area_small_and_large():
    a = np.array([1e-4, 0.0])
    b = np.array([0.0, 1e-4])
    assert abs(geodesic_triangle_area(a, b) - 0.5e-8) < 1e-16


def test_polygon_orientation_and_hull():
    p = Polygon([[0, 0], [0, 1], [1, 0]])
    assert p.area() > 0 and p.is_convex()
    h = Polygon.hull(np.random.default_rng(0).uniform(-1, 1, (50, 2)))
    assert h.is_convex()


def test_clip_polygon_against_halfplane():
    out = clip_polygon(FACE.vertices, np.array([1.0, 0.0]), 0.0)
    assert abs(Polygon(out).area() - 2) < 1e-15
    assert FACE.clip([1.0, 1.0], -3.0).is_empty()


def test_intersect_halfplanes_square():
    th = np.pi / 2 * np.arange(4)
    p = intersect_halfplanes(unit2(th), np.ones(4))
    assert abs(p.area() - 4) < 1e-12


def test_support_sampled_recovers_disk_support():
    th = 2 * np.pi * np.arange(512) / 512
    p = SupportSampled(th, np.ones(512))
    assert np.max(np.abs(p.support(unit2(th)) - 1)) < 1e-12
    assert 0 < p.area() - np.pi < 1e-4  # circumscribed polygon


@given(st.floats(0.2, 2.0), st.floats(0.2, 2.0), st.floats(0, np.pi), st.floats(-0.3, 0.3))
def test_ellipse_support_matches_boundary(a, b, ang, cx):
    E = Ellipse.from_axes([a, b], ang, center=(cx, 0.1))
    th = np.linspace(0, 2 * np.pi, 50)
    pts = E.point(th)
    assert np.allclose(np.sum(pts * unit2(th), axis=1), E.support(unit2(th)), atol=1e-12)
    assert np.allclose(E.level(pts), 1, atol=1e-10)


def test_ellipse_length_and_curvature():
    E = Ellipse.from_axes([2.0, 1.0])
    # curvature at the end of the major axis is a/b^2
    assert abs(E.curvature(0.0) - 2.0) < 1e-12
    assert abs(E.curvature(np.pi / 2) - 0.25) < 1e-12
    assert abs(E.perimeter() - 9.688448220547675) < 1e-10  # complete elliptic integral value


def test_ellipse_vectorised_cuts_match_generic():
    E = Ellipse.from_axes([0.9, 0.4], 0.7, center=(0.1, 0.05))
    rng = np.random.default_rng(6)
    ang = rng.uniform(0, 2 * np.pi, 30)
    off = rng.uniform(-0.3, 0.3, 30)
    fast = E.cut_measures(ang, off)
    slow = [E.cut(unit2(a), t).sphere_area() for a, t in zip(ang, off)]
    assert np.allclose(fast, slow, atol=1e-13)


def test_polygon_vectorised_cuts_match_generic():
    P = Polygon.hull(np.random.default_rng(7).uniform(-1, 1, (20, 2)))
    ang = np.linspace(0, 6, 25)
    off = np.linspace(-0.5, 0.5, 25)
    fast = P.cut_measures(ang, off)
    slow = [P.cut(unit2(a), t).sphere_area() for a, t in zip(ang, off)]
    assert np.allclose(fast, slow, atol=1e-14)


def test_clipped_ellipse_area_between_bounds():
    E = Ellipse.disk(1.0)
    half = ClippedEllipse(E, [(np.array([1.0, 0.0]), 0.0)])
    assert abs(half.area() - np.pi / 2) < 1e-12
    assert abs(half.sphere_area() - 0.5 * E.sphere_area()) < 1e-12
    assert half.contains(np.array([[-0.5, 0.0]]))[0] and not half.contains(np.array([[0.5, 0.0]]))[0]


def test_polar_regions():
    assert np.allclose(FACE.polar().polar().vertices[np.lexsort(FACE.polar().polar().vertices.T)],
                       FACE.vertices[np.lexsort(FACE.vertices.T)])
    E = Ellipse.from_axes([0.7, 0.3], 0.4, center=(0.1, -0.1))
    EE = E.polar().polar()
    assert np.allclose(EE.center, E.center) and np.allclose(EE.shape, E.shape)


def test_circle_fit_curvature_on_circle():
    r = 2.0
    t = 0.3 + 0.01 * np.arange(-2, 3)
    win = (r * np.stack([np.cos(t), np.sin(t)], axis=1))[None]
    kappa, centers = circle_fit_curvature(win, np.array([[np.cos(0.3), np.sin(0.3)]]))
    assert abs(kappa[0] - 0.5) < 1e-8 and np.allclose(centers[0], 0, atol=1e-7)
