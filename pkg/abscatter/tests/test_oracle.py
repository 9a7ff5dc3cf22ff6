# Licensed under a 3-clause BSD style license - see LICENSE.rst
import math

import mpmath
import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.special import jn_zeros

from ..errors import DomainError, ReferenceRangeError, ResolutionError
from ..oracle import (bessel_reference, bump, completeness_check,
                      extract_phase_shift, integrate_radial,
                      numerov_wronskian)
from ..phase_shift import (BoundaryCondition, SectorParams, phase_shift,
                           theta_lambda)
from ..special_fn import bessel_jy


DIRICHLET = BoundaryCondition.dirichlet()
NEUMANN = BoundaryCondition.neumann()
ROBIN = BoundaryCondition.robin(1.0)


def mod_pi(x):
    d = x % math.pi
    return min(d, math.pi - d)


def test_reference_half_order():
    with mpmath.workdps(40):
        j, y = bessel_reference(0.5, math.pi / 2)
        # float(pi / 2) is off by about 6e-17, moving J and Y by less than 1e-16
        assert abs(j - 2 / mpmath.pi) < 1e-16
        assert abs(y) < 1e-16
        j, y = bessel_reference(0.5, 1.0)
        scale = mpmath.sqrt(2 / mpmath.pi)
        assert abs(j - scale * mpmath.sin(1)) < mpmath.mpf(10) ** -30
        assert abs(y + scale * mpmath.cos(1)) < mpmath.mpf(10) ** -30


@pytest.mark.parametrize(('nu', 'x'), [(0.0, 1.0), (1.0, 2.5), (2.3, 7.0),
                                       (17.0, 40.0)])
def test_reference_against_mpmath(nu, x):
    j, y = bessel_reference(nu, x, digits=25)
    with mpmath.workdps(40):
        j_ref = mpmath.besselj(nu, x)
        y_ref = mpmath.bessely(nu, x)
        size = mpmath.sqrt(j_ref ** 2 + y_ref ** 2)
        assert abs(j - j_ref) / size < mpmath.mpf(10) ** -24
        assert abs(y - y_ref) / size < mpmath.mpf(10) ** -24


def test_reference_integer_limit():
    _, y_int = bessel_reference(1.0, 2.5)
    _, y_near = bessel_reference(1.0 + 1e-12, 2.5)
    assert_allclose(float(y_near), float(y_int), rtol=1e-9)


def test_reference_agrees_with_kernel():
    rng = np.random.default_rng(7)
    nus = rng.uniform(0.0, 30.0, 200)
    xs = np.exp(rng.uniform(math.log(1e-2), math.log(50.0), 200))
    for nu, x in zip(nus, xs):
        j, y = bessel_jy(nu, x)
        j_ref, y_ref = bessel_reference(nu, x, digits=25)
        size = math.hypot(float(j_ref), float(y_ref))
        assert abs(j - float(j_ref)) <= 1e-10 * size
        assert abs(y - float(y_ref)) <= 1e-10 * size


@pytest.mark.parametrize(('nu', 'x', 'digits'), [(41.0, 1.0, 30),
                                                 (-0.5, 1.0, 30),
                                                 (1.0, 60.0, 30),
                                                 (1.0, 0.0, 30),
                                                 (1.0, 1.0, 10)])
def test_reference_range(nu, x, digits):
    with pytest.raises(ReferenceRangeError):
        bessel_reference(nu, x, digits=digits)


@pytest.mark.parametrize(('bc', 'expected'), [
    (DIRICHLET, lambda z, k: np.sin(z) / k),
    (ROBIN, lambda z, k: np.cos(z) + 1.5 * np.sin(z) / k),
    (NEUMANN, lambda z, k: np.cos(z) + 0.5 * np.sin(z) / k)])
def test_numerov_half_order(bc, expected):
    # nu = 1/2 removes the centrifugal term, so psi is a pure sinusoid
    sol = integrate_radial(0.5, 1.0, 1.0, bc, r_max=50.0, n_steps=4900)
    exact = expected(sol.r_grid - 1.0, 1.0)
    assert np.max(np.abs(sol.u - exact)) < 1e-8


def test_numerov_order():
    errors = []
    for n_steps in (500, 1000):
        sol = integrate_radial(0.5, 1.0, 1.0, DIRICHLET, r_max=50.0,
                               n_steps=n_steps)
        errors.append(np.max(np.abs(sol.u - np.sin(sol.r_grid - 1.0))))
    assert errors[0] / errors[1] > 12.0


def test_numerov_wronskian():
    d = integrate_radial(2.3, 2.0, 1.0, DIRICHLET)
    n = integrate_radial(2.3, 2.0, 1.0, NEUMANN)
    w = numerov_wronskian(d, n)
    assert_allclose(w, w[0], rtol=1e-10)
    assert_allclose(w[0], 1.0, rtol=1e-3)


def test_numerov_wronskian_needs_same_grid():
    d = integrate_radial(2.3, 2.0, 1.0, DIRICHLET)
    other = integrate_radial(2.3, 2.0, 1.0, NEUMANN, r_max=40.0)
    with pytest.raises(DomainError):
        numerov_wronskian(d, other)


def test_numerov_scale_invariance():
    base = integrate_radial(1.3, 3.0, 1.0, ROBIN)
    scaled = integrate_radial(1.3, 3.0, 1.0, ROBIN, scale=7.5)
    assert_allclose(scaled.u / 7.5, base.u, rtol=1e-12, atol=1e-12)
    fit1 = extract_phase_shift(base, 1, 0.3)
    fit2 = extract_phase_shift(scaled, 1, 0.3)
    assert abs(fit1.delta - fit2.delta) < 1e-12


def test_numerov_resolution():
    with pytest.raises(ResolutionError):
        integrate_radial(0.5, 1.0, 1.0, DIRICHLET, r_max=50.0, n_steps=10)
    with pytest.raises(DomainError):
        integrate_radial(0.5, 1.0, 1.0, DIRICHLET, r_max=10.0)


def test_phase_fit_half_order():
    sector = SectorParams(0, 0.5, 1.0, DIRICHLET)
    sol = integrate_radial(sector.nu, 1.0, 1.0, DIRICHLET)
    fit = extract_phase_shift(sol, 0, 0.5)
    assert 0 <= fit.delta < math.pi
    assert fit.residual < 1e-3
    assert mod_pi(fit.delta - phase_shift(sector, 1.0)) < 1e-6


def test_phase_fit_random_sectors():
    rng = np.random.default_rng(3)
    for _ in range(8):
        m = int(rng.integers(-4, 5))
        alpha = float(rng.uniform(0.0, 1.0))
        bc = BoundaryCondition.robin(float(rng.uniform(0.0, 3.0)))
        k = float(rng.uniform(1.0, 10.0))
        sector = SectorParams(m, alpha, 1.0, bc)
        fit = extract_phase_shift(integrate_radial(sector.nu, k, 1.0, bc),
                                  m, alpha)
        assert mod_pi(fit.delta - phase_shift(sector, k)) < 1e-4


def test_phase_fit_neumann():
    k = jn_zeros(1, 1)[0]
    sector = SectorParams(1, 0.0, 1.0, NEUMANN)
    fit = extract_phase_shift(integrate_radial(1.0, k, 1.0, NEUMANN), 1, 0.0)
    assert mod_pi(fit.delta - phase_shift(sector, k)) < 1e-5


def test_phase_fit_robin_theta():
    sector = SectorParams(0, 0.5, 1.0, ROBIN)
    fit = extract_phase_shift(integrate_radial(0.5, 1.0, 1.0, ROBIN), 0, 0.5)
    assert mod_pi(fit.theta - theta_lambda(sector, 1.0)) < 1e-6


def test_phase_fit_mismatched_order():
    sol = integrate_radial(0.5, 1.0, 1.0, DIRICHLET)
    with pytest.raises(DomainError):
        extract_phase_shift(sol, 1, 0.5)


def test_bump():
    assert_allclose(bump(2.5, 2.5), math.exp(-1))
    assert bump(3.6, 2.5) == 0
    values = bump(np.linspace(0, 5, 11), 2.5)
    assert values.shape == (11,)
    assert np.all(values >= 0)


def psi(r):
    return bump(r, centre=2.5)


@pytest.mark.slow
@pytest.mark.parametrize('lam', [0.0, 1.0])
def test_completeness(lam):
    value = completeness_check(psi, 0.5, lam, 1.0, 2.5, 60.0,
                               support=(1.5, 3.5))
    assert abs(value - psi(2.5)) <= 1e-3 * psi(2.5)


@pytest.mark.slow
def test_completeness_converges_with_k_max():
    peak = psi(2.5)
    errors = [abs(completeness_check(psi, 0.5, 1.0, 1.0, 2.5, k_max,
                                     support=(1.5, 3.5)) - peak)
              for k_max in (20.0, 40.0, 60.0)]
    for previous, following in zip(errors, errors[1:]):
        assert following <= 1.1 * previous + 1e-5 * peak


@pytest.mark.slow
def test_completeness_outside_support():
    value = completeness_check(psi, 0.5, NEUMANN, 1.0, 5.0, 60.0,
                               support=(1.5, 3.5))
    assert abs(value) <= 1e-3 * psi(2.5)


@pytest.mark.slow
def test_completeness_sampled():
    s = np.linspace(1.5, 3.5, 401)
    value = completeness_check((s, psi(s)), 0.5, 0.0, 1.0, 2.5, 60.0)
    assert abs(value - psi(2.5)) <= 2e-3 * psi(2.5)


@pytest.mark.slow
def test_completeness_nu_zero():
    value = completeness_check(psi, 0.0, 1.0, 1.0, 2.5, 60.0, quad_tol=1e-2,
                               support=(1.5, 3.5))
    assert abs(value - psi(2.5)) <= 1e-2 * psi(2.5)


def test_completeness_arguments():
    with pytest.raises(DomainError):
        completeness_check(psi, 0.5, 0.0, 1.0, 2.5, 60.0)
    with pytest.raises(DomainError):
        completeness_check(psi, 0.5, 0.0, 2.0, 2.5, 60.0, support=(1.5, 3.5))
    with pytest.raises(DomainError):
        completeness_check(psi, 0.5, 0.0, 1.0, 0.5, 60.0, support=(1.5, 3.5))
