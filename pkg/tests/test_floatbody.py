import numpy as np
import pytest
from scipy.integrate import dblquad
from scipy.optimize import brentq

from conftest import NORTH, ellipse_bodies, rotation
from sphfloat.body import CapBody, chart_region, find_pole, spherical_hull, volume
from sphfloat.chart import Chart
from sphfloat.errors import (BadEnclosure, BoundaryPointMismatch, DeltaOutOfRange, FloatingBodyEmpty,
                             PoleInvalid)
from sphfloat.floatbody import (enclosure_radii, euclid_cut_depth, euclid_floating_body,
                                radial_boundary_point, sandwich_check, spherical_cut_depth,
                                spherical_floating_body)
from sphfloat.quadrature import DirectionGrid, cut_volume
from sphfloat.regions import Ellipse, unit2
from sphfloat.sphere import unit_vector

CAP = CapBody.of(NORTH, np.pi / 4)
X = np.array([1.0, 0, 0])


def test_euclid_disk_depth_closed_form():
    disk = Ellipse.disk(1.0)
    for delta in (1e-1, 1e-3, 1e-5):
        want = brentq(lambda s: np.arccos(s) - s * np.sqrt(1 - s * s) - delta, -1, 1, xtol=1e-15)
        assert abs(euclid_cut_depth(disk, [1.0, 0], delta) - want) < 1e-6 * delta / np.sqrt(1 - want**2)


def test_euclid_floating_body_of_disk_is_disk():
    fb = euclid_floating_body(Ellipse.disk(1.0), 1e-2, m=128)
    r = fb.support(unit2(np.linspace(0, 6, 40)))
    assert np.ptp(r) < 1e-3
    with pytest.raises(DeltaOutOfRange):
        euclid_floating_body(Ellipse.disk(1.0), 4.0)


def test_spherical_cut_depth_hits_target():
    for delta in (1e-2, 1e-4):
        cd = spherical_cut_depth(CAP, NORTH, X, delta)
        assert abs(cd.achieved_delta - delta) <= 1e-6 * delta
        assert abs(cut_volume(CAP, NORTH, X, cd.s).value - delta) <= 1e-6 * delta


def test_cap_cut_volume_against_direct_integration():
    # independent oracle: area element in the chart integrated with scipy
    t = 0.5
    r = 1.0
    f = lambda y, x: (1 + x * x + y * y) ** -1.5
    ref, _ = dblquad(f, t, r, lambda x: -np.sqrt(r * r - x * x), lambda x: np.sqrt(r * r - x * x),
                     epsabs=1e-13, epsrel=1e-13)
    assert abs(cut_volume(CAP, NORTH, X, np.arctan(t)).value - ref) < 1e-10


def test_depth_strictly_decreasing_in_delta():
    deltas = np.geomspace(1e-5, 0.5, 20)
    s = [spherical_cut_depth(CAP, NORTH, X, d).s for d in deltas]
    assert np.all(np.diff(s) < 0)


@pytest.mark.parametrize("K", [CAP, spherical_hull(np.eye(3)), *ellipse_bodies()])
def test_floating_body_inside_interior(K):
    fb = spherical_floating_body(K, 1e-3, grid=DirectionGrid.uniform(find_pole(K), 128))
    region = chart_region(K, fb.grid.chart)
    d = unit2(np.linspace(0, 2 * np.pi, 200))
    assert np.all(fb.body.region.support(d) < region.support(d) - 1e-6)


def test_monotone_nesting_in_delta():
    grid = DirectionGrid.uniform(NORTH, 128)
    K = ellipse_bodies()[0]
    prev = None
    for delta in (1e-5, 1e-4, 1e-3, 1e-2):
        h = spherical_floating_body(K, delta, grid=grid).body.region.support(grid.coords)
        if prev is not None:
            assert np.all(h <= prev)
        prev = h


def test_grid_stability_on_shared_directions():
    K = ellipse_bodies()[0]
    a = spherical_floating_body(K, 1e-3, grid=DirectionGrid.uniform(NORTH, 256))
    b = spherical_floating_body(K, 1e-3, grid=DirectionGrid.uniform(NORTH, 512))
    assert np.max(np.abs(a.offsets - b.offsets[::2])) < 1e-6


def test_rotation_equivariance():
    R = rotation(7)
    K = spherical_hull(unit_vector(np.array([[1, .1, .3], [.2, 1, .1], [.3, .2, 1], [.7, .6, .9]])))
    RK = spherical_hull(K.vertices @ R.T)
    u = find_pole(K)
    ch = Chart(u)
    g1 = DirectionGrid.uniform(ch, 128)
    g2 = DirectionGrid.uniform(Chart(R @ u, R @ ch.basis), 128)
    a = spherical_floating_body(K, 1e-3, grid=g1)
    b = spherical_floating_body(RK, 1e-3, grid=g2)
    assert np.max(np.abs(a.offsets - b.offsets)) < 1e-8
    w = a.body.chart.to_sphere(a.body.region.vertices)
    rw = b.body.chart.to_sphere(b.body.region.vertices)
    assert np.max(np.abs(w @ R.T - rw)) < 1e-8


def test_cap_floating_body_is_concentric_cap():
    fb = spherical_floating_body(CAP, 1e-3, grid=DirectionGrid.uniform(NORTH, 64))
    assert np.ptp(fb.offsets) < 1e-12


def test_errors():
    with pytest.raises(DeltaOutOfRange):
        spherical_floating_body(CAP, 10.0)
    with pytest.raises(DeltaOutOfRange):
        spherical_floating_body(CAP, 0.0)
    with pytest.raises(PoleInvalid):
        spherical_floating_body(CAP, 1e-3, u=X)
    with pytest.raises(PoleInvalid):
        spherical_floating_body(CapBody.of(NORTH, np.pi / 2), 1e-3, u=NORTH)
    with pytest.raises(FloatingBodyEmpty):
        spherical_floating_body(CAP, 0.5 * volume(CAP) - 1e-9, grid=DirectionGrid.uniform(NORTH, 64))


def test_radial_boundary_point():
    fb = spherical_floating_body(CAP, 1e-3, grid=DirectionGrid.uniform(NORTH, 64))
    w = unit_vector([1.0, 0, 1.0])
    wd = radial_boundary_point(fb, CAP, w)
    s = spherical_cut_depth(CAP, NORTH, X, 1e-3).s
    assert abs(np.arccos(wd @ NORTH) - s) < 1e-9
    with pytest.raises(BoundaryPointMismatch):
        radial_boundary_point(fb, CAP, unit_vector([0.5, 0, 1.0]))


def test_sandwich_on_triangle_and_bad_enclosure():
    K = spherical_hull(np.eye(3))
    u = find_pole(K)
    a, b = enclosure_radii(K, u)
    assert abs(np.tan(b) - np.sqrt(2)) < 1e-12 and abs(np.tan(a) - np.sqrt(2) / 2) < 1e-12
    rep = sandwich_check(K, 1e-3, u, a, b, grid=DirectionGrid.uniform(u, 128))
    assert rep.ok
    with pytest.raises(BadEnclosure):
        sandwich_check(K, 1e-3, u, a + 0.01, b)
