import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import NORTH, cap_bodies, ellipse_bodies, polytope_bodies
from sphfloat.body import CapBody, spherical_hull, volume
from sphfloat.errors import ZeroCurvaturePoint
from sphfloat.floatarea import (affine_surface_area, cap_floating_area, check_duality,
                                check_enclosure, check_holder, check_valuation, conjecture_gap,
                                curvature_field, euclid_limit_quotient, extrapolate,
                                floating_constant, floating_measure, gauss_kronecker,
                                integrand_profile, perimeter, sphere_measure, split_by_hemisphere,
                                unit_ball_volume)
from sphfloat.quadrature import DirectionGrid
from sphfloat.regions import Ellipse
from sphfloat.sphere import Hemisphere, unit_vector

# frozen closed-form values
C2 = 0.6551853485522241           # (3/2)^(2/3) / 2
OMEGA_CAP_PI_4 = 4.442882938158366  # 2 pi / sqrt(2)


def test_constants():
    assert abs(floating_constant(2) - C2) < 1e-15
    assert abs(unit_ball_volume(1) - 2) < 1e-15 and abs(sphere_measure(1) - 2 * np.pi) < 1e-15
    assert abs(sphere_measure(2) - 4 * np.pi) < 1e-14


@pytest.mark.parametrize("alpha", [np.pi / 6, np.pi / 4, np.pi / 3])
def test_cap_closed_form(alpha):
    K = CapBody.of(unit_vector([0.2, -0.1, 1.0]), alpha)
    want = 2 * np.pi * (1 / np.tan(alpha)) ** (1 / 3) * np.sin(alpha)
    assert abs(floating_measure(K) - want) < 1e-6
    assert abs(cap_floating_area(alpha) - want) < 1e-12


def test_cap_pi_4_value():
    assert abs(floating_measure(CapBody.of(NORTH, np.pi / 4)) - OMEGA_CAP_PI_4) < 1e-9


def test_cap_through_general_chart_path_matches():
    K = CapBody.of(unit_vector([0.1, 0.1, 1.0]), 0.6)
    field = curvature_field(K, u=NORTH, omega=Hemisphere([1.0, 0, 0]))
    half = curvature_field(K, u=NORTH, omega=Hemisphere([-1.0, 0, 0]))
    assert abs(field.integral(1 / 3) + half.integral(1 / 3) - cap_floating_area(0.6)) < 1e-9


def test_discrete_estimator_agrees_with_closed_forms():
    for K in [CapBody.of(NORTH, 0.7), *ellipse_bodies()]:
        a = floating_measure(K)
        d = floating_measure(K, mode="discrete")
        assert abs(a - d) < 1e-4 * a


def test_ellipse_affine_length_discrete_vs_analytic():
    E = Ellipse.from_axes([1.5, 0.5], 0.3)
    # affine length of an ellipse is 2 pi (ab)^(1/3)
    assert abs(affine_surface_area(E) - 2 * np.pi * 0.75 ** (1 / 3)) < 1e-10
    assert abs(affine_surface_area(E, mode="discrete") / (2 * np.pi * 0.75 ** (1 / 3)) - 1) < 1e-4


def test_polytopes_have_zero_floating_area():
    for K in polytope_bodies():
        assert floating_measure(K) == 0.0
    assert abs(perimeter(spherical_hull(np.eye(3))) - 3 * np.pi / 2) < 1e-14


def test_non_proper_body_has_zero_floating_area():
    assert floating_measure(CapBody.of(NORTH, np.pi / 2)) == 0.0
    assert floating_measure(CapBody.of(NORTH, 2.5)) == 0.0


def test_upper_semicontinuity_example():
    # inscribed regular polygons converge to the cap but keep zero floating area
    alpha = np.pi / 4
    for k in (8, 64, 512):
        t = 2 * np.pi * np.arange(k) / k
        P = spherical_hull(np.column_stack([np.sin(alpha) * np.cos(t), np.sin(alpha) * np.sin(t),
                                            np.full(k, np.cos(alpha))]))
        assert floating_measure(P) == 0.0 <= floating_measure(CapBody.of(NORTH, alpha))
    assert abs(volume(P) - volume(CapBody.of(NORTH, alpha))) < 1e-4


@pytest.mark.parametrize("K", cap_bodies() + ellipse_bodies())
def test_duality(K):
    rep = check_duality(K)
    assert rep.passed and rep.gap < 1e-4


@pytest.mark.parametrize("K", cap_bodies() + polytope_bodies() + ellipse_bodies())
def test_holder_and_enclosure_never_violated(K):
    h = check_holder(K)
    e = check_enclosure(K)
    assert h.lhs <= h.rhs + 1e-6 and e.lhs <= e.rhs + 1e-6


@given(st.floats(0.05, 1.5))
def test_cap_equality_cases(alpha):
    K = CapBody.of(NORTH, alpha)
    assert check_holder(K).details["relative_gap"] < 1e-6
    e = check_enclosure(K, alpha, alpha)
    assert abs(e.gap) < 1e-6 * max(1.0, e.rhs)


def test_enclosure_strict_off_centre():
    K = CapBody.of(unit_vector([0.3, 0, 1.0]), 0.6)
    rep = check_enclosure(K, u=NORTH)
    assert rep.gap > 1e-3


@pytest.mark.parametrize("seed", range(5))
def test_valuation_on_hemisphere_splits(seed):
    K = CapBody.of(NORTH, np.pi / 4)
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(3)
    z[2] *= 0.3
    a, b = split_by_hemisphere(K, z)
    rep = check_valuation(a, b)
    assert rep.gap < 1e-5
    assert abs(rep.details["omega_union"] - floating_measure(K)) < 1e-9


def test_valuation_with_local_omega():
    K = CapBody.of(NORTH, np.pi / 4)
    a, b = split_by_hemisphere(K, [1.0, 0.2, 0.0])
    omega = Hemisphere([0.0, 1.0, 0.3])
    assert check_valuation(a, b, omega).gap < 1e-5


def test_gauss_kronecker():
    K = CapBody.of(NORTH, np.pi / 4)
    w = unit_vector([1.0, 0, 1.0])
    assert abs(gauss_kronecker(K, w) - 1) < 1e-12
    assert abs(gauss_kronecker(K, w, mode="discrete") - 1) < 1e-5


def test_extrapolation_recovers_synthetic_model():
    d = np.array([1e-2, 1e-3, 1e-4, 1e-5, 1e-6])
    q = 2.5 - 0.8 * d ** (2 / 3)
    a, b, p, res = extrapolate(d, q)
    assert abs(a - 2.5) < 1e-8 and abs(p - 2 / 3) < 1e-4
    with pytest.raises(ValueError):
        extrapolate(d[:3], q[:3])


def test_euclid_disk_quotient_close_to_limit():
    row = euclid_limit_quotient(Ellipse.disk(1.0), 1e-5)
    assert abs(row.quotient - C2 * 2 * np.pi) < 0.01 * C2 * 2 * np.pi


def test_integrand_profile_on_cap():
    K = CapBody.of(NORTH, np.pi / 4)
    w = np.array([np.cos(0.4), np.sin(0.4), 1.0]) / np.sqrt(2)
    prof = integrand_profile(K, NORTH, w, [1e-3, 1e-4, 1e-5],
                             grid=DirectionGrid.uniform(NORTH, 64))
    q = [r[1] for r in prof.rows]
    assert abs(prof.expected_limit - C2) < 1e-9
    assert np.all(np.diff(q) > 0) and abs(q[-1] - C2) < 1e-3


def test_integrand_profile_at_flat_point():
    K = spherical_hull(np.eye(3))
    w = unit_vector([1.0, 1.0, 0.0])
    with pytest.raises(ZeroCurvaturePoint):
        integrand_profile(K, None, w, [1e-3, 1e-4], grid=None, require_positive_curvature=True)


def test_conjecture_report():
    rep = conjecture_gap(CapBody.of(NORTH, 0.5))
    assert abs(rep.ratio - 1) < 1e-9 and abs(rep.cap_radius - 0.5) < 1e-10
    rep = conjecture_gap(ellipse_bodies()[0])
    assert 0 < rep.ratio < 1
