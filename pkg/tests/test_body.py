import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import NORTH, ellipse_bodies, rotation
from sphfloat.body import (CapBody, ChartBody, PolytopeBody, body_from_spec, body_to_spec,
                           chart_region, contains, find_pole, intersect_hemisphere, intersection,
                           is_proper, polar, radial, spherical_hull, support, support_distance, union,
                           volume)
from sphfloat.chart import Chart
from sphfloat.errors import BodyNotInOpenHemisphere, UnionNotConvex
from sphfloat.regions import Polygon, unit2
from sphfloat.sphere import Hemisphere, random_unit_vectors, unit_vector


def random_polytope(seed, count=8, spread=0.5):
    rng = np.random.default_rng(seed)
    pole = random_unit_vectors(rng, 1)[0]
    return spherical_hull(unit_vector(pole + spread * rng.standard_normal((count, 3))))


def tangent_dirs(u, m=100, seed=0):
    ang = np.random.default_rng(seed).uniform(0, 2 * np.pi, m)
    return Chart(u).direction(ang)


@pytest.mark.parametrize("seed", range(6))
def test_double_polarity_polytopes(seed):
    K = random_polytope(seed)
    assert support_distance(polar(polar(K)), K) < 1e-6


@pytest.mark.parametrize("alpha", [0.2, np.pi / 4, 1.3])
def test_double_polarity_caps(alpha):
    K = CapBody.of(unit_vector([0.3, -1, 0.5]), alpha)
    KK = polar(polar(K))
    assert np.allclose(KK.center, K.center) and abs(KK.radius - alpha) < 1e-15


def test_double_polarity_ellipse_bodies():
    for K in ellipse_bodies():
        assert support_distance(polar(polar(K)), K) < 1e-10


@pytest.mark.parametrize("K", [CapBody.of(NORTH, 0.7), CapBody.of(unit_vector([1, 1, 1.0]), 1.2)]
                         + [random_polytope(s) for s in range(3)] + ellipse_bodies())
def test_support_radial_duality(K):
    u = find_pole(K)
    v = tangent_dirs(u)
    total = support(K, u, v) + radial(polar(K), -u, v)
    assert np.max(np.abs(total - np.pi / 2)) < 1e-8


def test_support_is_arctan_of_chart_support():
    for K in [random_polytope(4), *ellipse_bodies(), CapBody.of(NORTH, 0.5)]:
        u = find_pole(K)
        ch = Chart(u)
        ang = np.linspace(0, 2 * np.pi, 64)
        lhs = np.tan(support(K, u, ch.direction(ang)))
        rhs = chart_region(K, ch).support(unit2(ang))
        assert np.max(np.abs(lhs - rhs)) < 1e-8


def test_polytope_support_attained_at_vertex():
    K = random_polytope(9)
    u = find_pole(K)
    v = tangent_dirs(u, 50)
    brute = np.max(np.arctan2(K.vertices @ v.T, (K.vertices @ u)[:, None]), axis=0)
    assert np.max(np.abs(support(K, u, v) - brute)) < 1e-15


def test_polarity_reverses_inclusion():
    small = CapBody.of(NORTH, 0.4)
    big = spherical_hull(np.vstack([unit_vector([np.cos(t), np.sin(t), 1.0]) for t in
                                    np.linspace(0, 2 * np.pi, 7)[:-1]]))
    pts = random_unit_vectors(np.random.default_rng(1), 4000)
    assert not np.any(contains(small, pts) & ~contains(big, pts))
    ps, pb = polar(small), polar(big)
    assert not np.any(contains(pb, pts) & ~contains(ps, pts))


def test_cap_examples():
    K = CapBody.of(NORTH, np.pi / 4)
    assert abs(volume(K) - 2 * np.pi * (1 - np.cos(np.pi / 4))) < 1e-14
    P = polar(K)
    assert np.allclose(P.center, -NORTH) and abs(P.radius - np.pi / 4) < 1e-15
    assert abs(radial(K, NORTH, [1.0, 0, 0]) - np.pi / 4) < 1e-15
    u = unit_vector([0.2, 0, 1.0])
    v = unit_vector(np.cross(u, [0, 1.0, 0]))
    w = np.cos(radial(K, u, v)) * u + np.sin(radial(K, u, v)) * v
    assert abs(np.arccos(w @ NORTH) - np.pi / 4) < 1e-12


def test_octant_polar_is_negative_basis():
    P = polar(spherical_hull(np.eye(3)))
    assert isinstance(P, PolytopeBody)
    got = P.vertices[np.lexsort(P.vertices.T)]
    want = -np.eye(3)[np.lexsort(-np.eye(3).T)]
    assert np.allclose(got, want)


def test_properness_and_pole():
    assert is_proper(CapBody.of(NORTH, 1.0))
    assert not is_proper(CapBody.of(NORTH, np.pi / 2))
    assert not is_proper(CapBody.of(NORTH, 2.0))
    K = random_polytope(3)
    u = find_pole(K)
    assert np.all(K.vertices @ u > 0)
    with pytest.raises(BodyNotInOpenHemisphere):
        chart_region(CapBody.of(NORTH, 1.0), Chart([1.0, 0, 0]))


def test_rechart_preserves_body():
    E = ellipse_bodies()[1]
    K2 = ChartBody(unit_vector([0.0, 0.2, 1.0]), chart_region(E, Chart(unit_vector([0.0, 0.2, 1.0]))))
    assert support_distance(E, K2) < 1e-12
    assert abs(volume(E) - volume(K2)) < 1e-12


def test_rotation_equivariance_of_support():
    R = rotation(3)
    K = random_polytope(5)
    RK = spherical_hull(K.vertices @ R.T)
    u = find_pole(K)
    v = tangent_dirs(u, 40)
    assert np.allclose(support(K, u, v), support(RK, R @ u, v @ R.T), atol=1e-12)


def test_intersection_and_union_of_cap_halves():
    K = CapBody.of(NORTH, np.pi / 4)
    z = unit_vector([1.0, 0.3, 0.0])
    a = intersect_hemisphere(K, Hemisphere(z))
    b = intersect_hemisphere(K, Hemisphere(-z))
    assert abs(volume(a) + volume(b) - volume(K)) < 1e-12
    assert abs(volume(union(a, b)) - volume(K)) < 1e-12
    assert volume(intersection(a, b)) < 1e-12
    left = ChartBody(NORTH, Polygon([[-1, 0], [-0.5, 0], [-0.7, 0.3]]))
    right = ChartBody(NORTH, Polygon([[1, 0], [0.5, 0], [0.7, 0.3]]))
    with pytest.raises(UnionNotConvex):
        union(left, right)


def test_json_round_trip():
    bodies = [CapBody.of(NORTH, 0.6), random_polytope(2), *ellipse_bodies(),
              ChartBody(NORTH, Polygon([[0.3, 0], [0, 0.3], [-0.2, -0.2]]))]
    for K in bodies:
        spec = json.loads(json.dumps(body_to_spec(K)))
        K2 = body_from_spec(spec)
        assert support_distance(K, K2) < 1e-10


@pytest.mark.parametrize("spec,field", [
    ({"kind": "cap", "center": [0, 0, 1]}, "radius"),
    ({"kind": "cap", "center": [0, 1], "radius": 0.5}, "center"),
    ({"kind": "polytope"}, "vertices"),
    ({"kind": "chart", "pole": [0, 0, 1]}, "polygon"),
    ({"kind": "chart", "pole": [0, 0, 1], "ellipse": {"center": [0, 0]}}, "ellipse.shape"),
    ({"kind": "blob"}, "kind"),
])
def test_spec_errors_name_the_field(spec, field):
    with pytest.raises(ValueError, match=field.replace(".", r"\.")):
        body_from_spec(spec)


@given(st.floats(0.05, 1.4), st.floats(-1, 1), st.floats(-1, 1))
def test_cap_volume_closed_form(alpha, x, y):
    K = CapBody.of([x, y, 1.0], alpha)
    assert abs(volume(K) - 2 * np.pi * (1 - np.cos(alpha))) < 1e-12
    assert abs(volume(polar(K)) - 2 * np.pi * (1 - np.sin(alpha))) < 1e-12
