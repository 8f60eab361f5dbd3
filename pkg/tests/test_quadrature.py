import numpy as np
import pytest

from conftest import NORTH, ellipse_bodies, random_polygon_body
from sphfloat.body import (CapBody, ChartBody, chart_region, find_pole, spherical_hull, support,
                           volume)
from sphfloat.chart import Chart
from sphfloat.errors import BadSubsphere, NotNested, NotOrthogonal, PoleInvalid
from sphfloat.quadrature import (DirectionGrid, body_volume, cut_volume, density_integral_fan,
                                 integrate_chart, integrate_split, volume_difference)
from sphfloat.regions import Polygon
from sphfloat.sphere import random_unit_vectors, unit_vector


@pytest.mark.parametrize("alpha", [np.pi / 6, np.pi / 4, np.pi / 3, 1.5])
def test_cap_volume_exact_on_default_grid(alpha):
    rep = body_volume(CapBody.of(NORTH, alpha))
    assert abs(rep.value - 2 * np.pi * (1 - np.cos(alpha))) < 1e-12
    assert rep.evaluations == 512 and rep.est_error < 1e-12


def test_cap_volume_from_off_centre_pole():
    K = CapBody.of(NORTH, 0.8)
    rep = body_volume(K, u=unit_vector([0.3, 0.1, 1.0]))
    assert abs(rep.value - volume(K)) < 1e-12


def test_smooth_body_converges_spectrally():
    K = ellipse_bodies()[0]
    assert abs(body_volume(K, grid=DirectionGrid.uniform(NORTH, 64)).value - volume(K)) < 1e-12


def test_octant_richardson_ratio():
    K = spherical_hull(np.eye(3))
    u = find_pole(K)
    v = [body_volume(K, grid=DirectionGrid.uniform(u, m)).value for m in (64, 128, 256)]
    ratio = (v[0] - v[1]) / (v[1] - v[2])
    assert 3.5 <= ratio <= 4.5


def test_generic_polytope_error_is_second_order():
    K = spherical_hull(unit_vector(np.array([[1, .1, .3], [.2, 1, .1], [.3, .2, 1], [.7, .6, .9]])))
    u = find_pole(K)
    scaled = [abs(volume(K) - body_volume(K, grid=DirectionGrid.uniform(u, m)).value) * m * m
              for m in (64, 128, 256, 512, 1024)]
    assert max(scaled) < 5.0


def test_volume_difference_nested_and_errors():
    big, small = CapBody.of(NORTH, 0.9), CapBody.of(NORTH, 0.5)
    rep = volume_difference(big, small, NORTH)
    assert abs(rep.value - (volume(big) - volume(small))) < 1e-13
    with pytest.raises(NotNested):
        volume_difference(small, big, NORTH)
    with pytest.raises(PoleInvalid):
        body_volume(small, u=[1.0, 0, 0])


def test_cut_volume_full_and_empty_limits():
    K = CapBody.of(NORTH, np.pi / 4)
    v = np.array([1.0, 0, 0])
    full = cut_volume(K, NORTH, v, -np.pi / 4 + 1e-12).value
    assert abs(full - volume(K)) < 1e-9
    assert cut_volume(K, NORTH, v, np.pi / 4 - 1e-12).value < 1e-12
    half = cut_volume(K, NORTH, v, 0.0).value
    assert abs(half - volume(K) / 2) < 1e-13
    with pytest.raises(NotOrthogonal):
        cut_volume(K, NORTH, [1.0, 0, 0.5], 0.0)


@pytest.mark.parametrize("K", [CapBody.of(NORTH, 0.7), spherical_hull(np.eye(3)), *ellipse_bodies()])
def test_cut_volume_strictly_decreasing(K):
    u = find_pole(K)
    v = Chart(u).direction(0.9)
    lo, hi = -support(K, u, -v), support(K, u, v)
    s = np.linspace(lo, hi, 52)[1:-1]
    vals = np.array([cut_volume(K, u, v, t).value for t in s])
    assert np.all(np.diff(vals) < 0)


def test_cut_volume_against_monte_carlo():
    rng = np.random.default_rng(2024)
    n = 1_000_000
    ch = Chart(NORTH)
    for k in range(10):
        pts = random_unit_vectors(rng, n)
        xy = ch.to_plane(pts[pts[:, 2] > 1e-9], check=False)
        K = random_polygon_body(rng) if k % 2 else ChartBody(NORTH, chart_region(
            CapBody.of(unit_vector(NORTH + 0.3 * rng.standard_normal(3) * [1, 1, 0]),
                       rng.uniform(0.3, 0.8)), ch))
        region = K.region
        ang = rng.uniform(0, 2 * np.pi)
        d = np.array([np.cos(ang), np.sin(ang)])
        t = rng.uniform(-0.5, 0.5) * region.support(d[None])[0]
        inside = region.contains(xy) & (xy @ d >= t)
        p = inside.sum() / n
        est = 4 * np.pi * p
        se = 4 * np.pi * np.sqrt(p * (1 - p) / n)
        exact = cut_volume(K, NORTH, ch.embed(d), np.arctan(t)).value
        assert abs(est - exact) < 3 * se, (k, est, exact, se)


def test_fan_rule_cross_check():
    P = Polygon.hull(np.random.default_rng(8).uniform(-1, 1, (15, 2)))
    assert abs(density_integral_fan(P, levels=3) - P.sphere_area()) < 1e-7


def _integrands():
    rng = np.random.default_rng(9)
    out = []
    for _ in range(20):
        a, b = rng.standard_normal(3), rng.standard_normal(3)
        k = rng.integers(1, 4)
        out.append(lambda w, a=a, b=b, k=k: np.cos(w @ a) + (w @ b) ** k + np.exp(0.3 * w[:, 0]))
    return out


def test_split_integration_matches_chart_oracle():
    circle = np.column_stack([[1.0, 0, 0], [0, 1.0, 0]])
    axis = unit_vector([0.2, -0.4, 1.0])
    for f in _integrands():
        ref = integrate_chart(f)
        for basis in (circle, axis):
            rep = integrate_split(f, basis)
            assert abs(rep.value - ref.value) <= max(10 * (rep.est_error + ref.est_error), 1e-10)


def test_split_integration_known_values():
    one = lambda w: np.ones(len(w))
    assert abs(integrate_split(one, np.eye(3)[:, :2]).value - 4 * np.pi) < 1e-12
    assert abs(integrate_split(lambda w: w[:, 2] ** 2, np.eye(3)[:, 2]).value - 4 * np.pi / 3) < 1e-12
    with pytest.raises(BadSubsphere):
        integrate_split(one, np.eye(3))


def test_volume_difference_matches_subtraction_on_nested_polygons():
    rng = np.random.default_rng(12)
    for _ in range(5):
        outer = random_polygon_body(rng)
        c = outer.region.centroid()
        inner = ChartBody(NORTH, Polygon(c + 0.6 * (outer.region.vertices - c)))
        grid = DirectionGrid.uniform(Chart(NORTH, outer.basis), 512)
        u = NORTH if outer.region.contains(np.zeros((1, 2)))[0] and inner.region.contains(
            np.zeros((1, 2)))[0] else None
        if u is None:
            continue
        diff = volume_difference(outer, inner, u, grid).value
        sub = body_volume(outer, u, grid).value - body_volume(inner, u, grid).value
        assert abs(diff - sub) < 1e-9
