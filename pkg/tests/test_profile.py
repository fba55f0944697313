import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from annuli.errors import DomainError, InvalidArgumentError, NoOscillationError
from annuli.profile import (
    ProfileConstant,
    closed_form_jet,
    closed_form_profile,
    first_integral,
    integrate_profile,
    measure_period,
    ode_rhs,
)
from annuli.spectrum import period_of

from conftest import C_MODE, PERIOD_05, PERIOD_09

C_GRID = np.linspace(0.05, 0.95, 20)


@pytest.mark.parametrize("r,v,expected", [
    (math.pi / 2, 0.0, (0.0, 0.0)),
    (math.pi / 4, 0.0, (0.0, 1.0)),
    (math.pi / 4, 1.0, (1.0, 2.0)),
])
def test_ode_rhs(r, v, expected):
    assert ode_rhs(r, v) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("r", [0.0, -0.1, math.pi, 4.0])
def test_ode_rhs_domain(r):
    with pytest.raises(DomainError):
        ode_rhs(r, 0.0)


def test_first_integral_values():
    assert first_integral(math.pi / 2, 0.0) == 1.0
    assert first_integral(math.asin(0.3), 0.0) == pytest.approx(0.3, abs=1e-16)


def test_profile_constant():
    pc = ProfileConstant(0.3)
    assert math.sin(pc.r_min) == pytest.approx(0.3, abs=1e-16)
    assert ProfileConstant.from_r_min(pc.r_min).c == pytest.approx(0.3, abs=1e-16)
    for bad in (0.0, 1.0, -0.2, math.nan):
        with pytest.raises(InvalidArgumentError):
            ProfileConstant(bad)


@pytest.mark.parametrize("c", [0.1, 0.5, 0.9])
def test_closed_form_turning_points(c):
    r, rp = closed_form_profile(c, 0.0)
    assert r == pytest.approx(math.asin(c), abs=1e-15)
    assert rp == 0.0
    half = 0.5 * period_of(c)
    r, rp = closed_form_profile(c, half)
    assert r == pytest.approx(math.pi - math.asin(c), abs=1e-13)
    assert abs(rp) < 1e-12


def test_closed_form_solves_ode_by_finite_differences(rng):
    c, h = 0.5, 1e-4
    for t in rng.uniform(0, 2 * math.pi, 20):
        r_m, _ = closed_form_profile(c, t - h)
        r_0, rp = closed_form_profile(c, t)
        r_p, _ = closed_form_profile(c, t + h)
        second = (r_p - 2 * r_0 + r_m) / h**2
        assert abs(second - (1 + rp**2) / math.tan(r_0)) < 1e-6


def test_closed_form_first_derivative_by_finite_differences(rng):
    c, h = 0.3, 1e-5
    for t in rng.uniform(0, 2 * math.pi, 20):
        r_p, _, _ = closed_form_jet(c, t + h)
        r_m, _, _ = closed_form_jet(c, t - h)
        _, rp, _ = closed_form_jet(c, t)
        assert (r_p - r_m) / (2 * h) == pytest.approx(rp, abs=1e-8)


def test_closed_form_rejects_bad_c():
    with pytest.raises(InvalidArgumentError):
        closed_form_profile(1.2, 0.0)


def test_first_integral_conserved_along_trajectory():
    prof = integrate_profile(0.3)
    assert prof.first_integral_drift() < 1e-9


@pytest.mark.parametrize("c", C_GRID)
def test_conservation_grid(c):
    assert integrate_profile(c).first_integral_drift() < 1e-9


@pytest.mark.parametrize("c", [0.9, 0.5, C_MODE[2], C_MODE[3]])
def test_numeric_matches_closed_form(c):
    prof = integrate_profile(c)
    r, rp = closed_form_profile(c, prof.t)
    assert np.max(np.abs(prof.r - r)) < 1e-8
    assert np.max(np.abs(prof.r_prime - rp)) < 1e-7


def test_equator_is_equilibrium():
    prof = integrate_profile(1.0)
    # float(pi/2) is not exactly the equilibrium: cot(pi/2) evaluates to 6e-17
    np.testing.assert_allclose(prof.r, math.pi / 2, atol=1e-12)
    np.testing.assert_allclose(prof.r_prime, 0.0, atol=1e-12)
    assert prof.period == math.inf


def test_mode2_closes_after_two_periods():
    prof = integrate_profile(C_MODE[2])
    assert abs(prof.r[-1] - prof.r[0]) < 1e-7
    assert abs(prof.r_prime[-1] - prof.r_prime[0]) < 1e-7
    assert prof.period == pytest.approx(math.pi, abs=1e-8)


@pytest.mark.parametrize("c", [0.9, 0.5, C_MODE[2]])
def test_profile_range_and_symmetry(c):
    prof = integrate_profile(c, n_samples=4001)
    assert prof.r.min() == pytest.approx(math.asin(c), abs=1e-8)
    # maximum sits at half period; evaluate it on the dense output
    r_half, _ = prof(0.5 * prof.period)
    assert r_half == pytest.approx(math.pi - math.asin(c), abs=1e-8)
    assert np.all((prof.r > 0) & (prof.r < math.pi))
    ts = np.linspace(0, prof.period, 101)
    r_fwd, _ = prof(ts)
    r_bwd, _ = prof(prof.period - ts)
    np.testing.assert_allclose(r_fwd, r_bwd, atol=1e-8)


def test_integrate_profile_arguments():
    with pytest.raises(InvalidArgumentError):
        integrate_profile(0.5, tol=1e-3)
    with pytest.raises(InvalidArgumentError):
        integrate_profile(0.0)


def test_measure_period_values():
    assert measure_period(0.5) == pytest.approx(PERIOD_05, abs=1e-8)
    assert measure_period(0.9) == pytest.approx(PERIOD_09, abs=1e-8)
    assert measure_period(0.9) == pytest.approx(5.9566, abs=1e-3)


@pytest.mark.parametrize("c", C_GRID)
def test_measured_period_matches_formula(c):
    assert abs(measure_period(c) - 4 * c * _k_quad(math.sqrt(1 - c * c))) < 1e-8


def _k_quad(k):
    # independent of the AGM: Gauss-Legendre on the defining integral
    x, w = np.polynomial.legendre.leggauss(200)
    phi = 0.25 * math.pi * (x + 1)
    return 0.25 * math.pi * float(np.sum(w / np.sqrt(1 - (k * np.sin(phi)) ** 2)))


def test_measure_period_equator():
    with pytest.raises(NoOscillationError):
        measure_period(1.0)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.02, 0.98))
def test_closed_form_first_integral_property(c):
    t = np.linspace(0, 2 * math.pi, 257)
    r, rp = closed_form_profile(c, t)
    np.testing.assert_allclose(first_integral(r, rp), c, atol=1e-13)
