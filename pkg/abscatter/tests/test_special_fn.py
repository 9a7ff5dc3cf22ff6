# Licensed under a 3-clause BSD style license - see LICENSE.rst
import math

import mpmath
import numpy as np
import pytest
from numpy.testing import assert_allclose

from ..errors import BesselOverflowError, DomainError
from ..special_fn import BesselQuad, bessel_jy, bessel_quad, hankel1


def test_small_argument_order_zero():
    q = bessel_quad(0.0, 1e-6)
    assert abs(q.j - 1.0) < 1e-8


def test_half_integer_values():
    q = bessel_quad(0.5, math.pi / 2)
    assert_allclose(q.j, 2 / math.pi, rtol=1e-14)
    assert abs(q.y) < 1e-15

    q = bessel_quad(0.5, math.pi)
    assert_allclose(q.y, math.sqrt(2) / math.pi, rtol=1e-14)


@pytest.mark.parametrize('nu', [0.5, 1.5])
def test_half_integer_closed_forms(nu):
    x = np.linspace(0.05, 80, 1000)
    scale = np.sqrt(2 / (np.pi * x))
    if nu == 0.5:
        j_exact = scale * np.sin(x)
        y_exact = -scale * np.cos(x)
    else:
        j_exact = scale * (np.sin(x) / x - np.cos(x))
        y_exact = -scale * (np.cos(x) / x + np.sin(x))

    j, y = bessel_jy(nu, x)
    # relative to the envelope, which stays away from the zeros
    assert np.max(np.abs(j - j_exact) / scale) < 1e-12
    assert np.max(np.abs(y - y_exact) / scale) < 1e-12


def test_wronskian_grid():
    nu, x = np.meshgrid(np.linspace(0, 60, 50), np.logspace(-3, 3, 50))
    q = bessel_quad(nu, x)
    expected = 2 / (np.pi * x)
    assert q.j.shape == (50, 50)
    assert np.max(np.abs(q.wronskian() - expected) / expected) < 1e-10


def test_order_recurrence():
    nu, x = np.meshgrid(np.linspace(1, 20, 40), np.linspace(0.5, 40, 60))
    j_prev, y_prev = bessel_jy(nu - 1, x)
    j, y = bessel_jy(nu, x)
    j_next, y_next = bessel_jy(nu + 1, x)

    mask = np.abs(j) > 1e-6
    lhs = j_prev + j_next
    rhs = 2 * nu / x * j
    assert np.max(np.abs(lhs - rhs)[mask] / np.abs(rhs)[mask]) < 1e-9

    mask = np.abs(y) > 1e-6
    lhs = y_prev + y_next
    rhs = 2 * nu / x * y
    assert np.max(np.abs(lhs - rhs)[mask] / np.abs(rhs)[mask]) < 1e-9


def test_derivatives_match_recurrence():
    q = bessel_quad(2.3, 4.1)
    j_next, y_next = bessel_jy(3.3, 4.1)
    assert_allclose(q.jp, 2.3 / 4.1 * q.j - j_next, rtol=1e-14)
    assert_allclose(q.yp, 2.3 / 4.1 * q.y - y_next, rtol=1e-14)


@pytest.mark.parametrize('nu', [0.0, 0.75])
def test_large_argument_asymptotics(nu):
    x = np.linspace(50 * nu + 50, 50 * nu + 500, 200)
    j, _ = bessel_jy(nu, x)
    approx = np.sqrt(2 / (np.pi * x)) * np.cos(x - nu * np.pi / 2 - np.pi / 4)
    assert np.max(np.abs(j - approx)) < 1e-3


@pytest.mark.parametrize('nu', [0.0, 0.75, 3.0])
def test_large_argument_first_correction(nu):
    # the leading cosine alone is off by (4 nu**2 - 1) / (8 x) (2 / (pi x))**0.5
    x = np.linspace(50 * nu + 50, 50 * nu + 500, 200)
    j, y = bessel_jy(nu, x)
    chi = x - nu * np.pi / 2 - np.pi / 4
    first = (4 * nu ** 2 - 1) / (8 * x)
    scale = np.sqrt(2 / (np.pi * x))
    j_approx = scale * (np.cos(chi) - first * np.sin(chi))
    y_approx = scale * (np.sin(chi) + first * np.cos(chi))
    assert np.max(np.abs(j - j_approx)) < 1e-4
    assert np.max(np.abs(y - y_approx)) < 1e-4


@pytest.mark.parametrize(('nu', 'x'), [(0.0, 1.0), (1.75, 3.2), (12.5, 0.7),
                                       (3.0, 7.5)])
def test_against_mpmath(nu, x):
    j, y = bessel_jy(nu, x)
    assert_allclose(j, float(mpmath.besselj(nu, x)), rtol=1e-10, atol=1e-14)
    assert_allclose(y, float(mpmath.bessely(nu, x)), rtol=1e-10, atol=1e-14)


def test_scalar_and_array_outputs():
    q = bessel_quad(1.0, 2.0)
    assert isinstance(q, BesselQuad)
    assert isinstance(q.j, float)
    assert isinstance(q.yp, float)

    q = bessel_quad(np.array([0.5, 1.5, 2.5]), 2.0)
    assert q.j.shape == (3,)
    assert_allclose(q.x, 2.0)


def test_hankel1():
    q = bessel_quad(0.5, math.pi / 2)
    h, hp = hankel1(q)
    assert_allclose(h.real, 2 / math.pi, rtol=1e-14)
    assert abs(h.imag) < 1e-15
    assert hp == complex(q.jp, q.yp)

    q = bessel_quad(0.5, math.pi)
    h, _ = hankel1(q)
    assert abs(h.real) < 1e-15
    assert_allclose(h.imag, math.sqrt(2) / math.pi, rtol=1e-14)

    q = bessel_quad(2.2, 1.3)
    h, _ = hankel1(q)
    assert_allclose(abs(h) ** 2, q.j ** 2 + q.y ** 2, rtol=1e-14)


@pytest.mark.parametrize(('nu', 'x'), [(1.0, 0.0), (1.0, -2.0), (-0.5, 1.0),
                                       (float('nan'), 1.0), (1.0, np.inf)])
def test_domain_errors(nu, x):
    with pytest.raises(DomainError):
        bessel_quad(nu, x)
    with pytest.raises(ValueError):
        bessel_jy(nu, x)


def test_overflow_is_signalled():
    with pytest.raises(BesselOverflowError):
        bessel_quad(300.0, 1e-3)
    with pytest.raises(OverflowError):
        bessel_jy(300.0, 1e-3)
