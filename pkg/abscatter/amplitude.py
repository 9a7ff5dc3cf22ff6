# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Scattering amplitudes and differential cross sections.

The amplitude of a solenoid of radius ``a`` is split as

.. math::

    f_\\alpha^\\lambda(k, \\theta) = f_\\alpha(k, \\theta)
        + f_{r,\\lambda}(k, \\theta),

where :math:`f_\\alpha` is the closed-form zero-radius amplitude and

.. math::

    f_{r,\\lambda}(k, \\theta) = -\\left(\\frac{2}{\\pi i k}\\right)^{1/2}
        \\sum_m e^{2 i \\Delta_m(\\alpha)}
        \\frac{J_\\nu(ka) - \\lambda k J'_\\nu(ka)}
             {H^{(1)}_\\nu(ka) - \\lambda k H^{(1)\\prime}_\\nu(ka)}
        e^{i m \\theta}

is a series whose coefficients decay super-exponentially once
``|m| > ka``.  The differential cross section is ``|f|**2``.

The forward direction ``theta = 0 (mod 2 pi)`` is excluded everywhere except
in `f_r_lambda`, whose series is smooth in ``theta``.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging
import math

import numpy as np

from .errors import (AmplitudeConvergenceError, BesselOverflowError,
                     DomainError,
                     ForwardDirectionError, KernelError)
from .phase_shift import (BoundaryCondition, canonicalize_flux,
                          mixing_coefficients)
from .special_fn import bessel_quad


__all__ = ['AmplitudeSeries', 'CrossSectionTable', 'DEFAULT_TOL',
           'canonicalize_flux', 'f_zero_radius', 'zero_radius_sum',
           'series_coefficients', 'f_r_lambda', 'amplitude', 'cross_section',
           'cross_section_table', 'truncation_cap']


log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10

# Orders kept beyond ka before the tail estimate is trusted
_MIN_EXTRA_ORDERS = 10

# A tail whose consecutive terms shrink by less than this is not summed
_MAX_TAIL_RATIO = 0.5

_COEFFICIENT_SLACK = 1e-9

_FORWARD_EPS = 1e-15


def truncation_cap(ka):
    """Largest truncation order tried before giving up, ``10 ka + 200``."""

    return int(math.ceil(10.0 * ka + 200.0))


@dataclass(frozen=True)
class AmplitudeSeries(object):
    """
    A truncated evaluation of the radius-correction series.

    Attributes
    ----------
    k : float
        Wave number.
    theta : float or `~numpy.ndarray`
        Scattering angle(s) in radians.
    alpha, a : float
        Flux parameter (as passed, possibly outside ``[0, 1)``) and radius.
    bc : `~abscatter.phase_shift.BoundaryCondition`
    m_max : int
        Truncation order: the sum runs over ``m_center - m_max <= m <=
        m_center + m_max``.
    m_center : int
        Centre of the summation window, ``-n_shift`` of the flux.
    value : complex or `~numpy.ndarray`
        The truncated sum, including the ``-(2 / (pi i k))**0.5`` prefactor.
    tail_bound : float
        Estimate of the omitted tail plus accumulated rounding.
    """

    k: float
    theta: object
    alpha: float
    a: float
    bc: BoundaryCondition
    m_max: int
    m_center: int
    value: object
    tail_bound: float


@dataclass(frozen=True)
class CrossSectionTable(object):
    """
    Differential cross sections on a ``(k, theta)`` grid.

    ``rows`` holds ``(k, theta, dsigma)`` tuples ordered by ascending ``k``
    and, within one ``k``, ascending ``theta``.
    """

    rows: tuple
    alpha: float
    a: float
    bc: BoundaryCondition
    m_max: int
    tolerance: float

    columns = ('k', 'theta', 'dsigma_dtheta')
    units = ('1/length', 'rad', 'length')

    def __len__(self):
        return len(self.rows)

    def as_array(self):
        return np.array(self.rows, dtype=float).reshape(-1, 3)


def _check_positive(name, value):
    value = float(value)
    if not (math.isfinite(value) and value > 0):
        raise DomainError(
            '{0} must be positive and finite, got {1!r}'.format(name, value))
    return value


def _check_theta(theta):
    theta_arr = np.asarray(theta, dtype=float)
    if not np.all(np.isfinite(theta_arr)):
        raise DomainError('scattering angle must be finite')
    if np.any(np.abs(np.sin(0.5 * theta_arr)) <= _FORWARD_EPS):
        raise ForwardDirectionError(
            'the forward direction theta = 0 (mod 2 pi) is excluded')
    return theta_arr


def _as_output(value, like):
    if np.ndim(like) == 0:
        return complex(value)
    return value


def zero_radius_sum(theta, alpha):
    """
    The Abel-summed series ``sum_m (exp(2 i Delta_m(alpha)) - 1) exp(i m
    theta)`` for any real ``alpha``.

    For ``alpha`` in ``[0, 1)`` this equals ``sin(pi alpha) exp(-i theta / 2)
    / sin(theta / 2)``.  Outside that interval the sum is the same geometric
    series plus a finite correction for the orders between ``0`` and
    ``-alpha``.

    Parameters
    ----------
    theta : float or array_like
        Scattering angle, not ``0 (mod 2 pi)``.
    alpha : float
        Any finite flux parameter.

    Returns
    -------
    total : complex or `~numpy.ndarray`
    """

    theta_arr = _check_theta(theta)
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise DomainError('flux parameter must be finite')

    up = np.exp(1j * theta_arr)
    plus = np.exp(-1j * np.pi * alpha)
    minus = np.exp(1j * np.pi * alpha)

    total = (plus - 1.0) / (1.0 - up) + (minus - 1.0) / (up - 1.0)

    reach = int(math.ceil(abs(alpha))) + 1
    for m in range(-reach, reach + 1):
        if (m >= 0) == (m + alpha >= 0):
            continue
        exact = np.exp(1j * np.pi * (abs(m) - abs(m + alpha)))
        generic = plus if m >= 0 else minus
        total = total + (exact - generic) * np.exp(1j * m * theta_arr)

    return _as_output(total, theta)


def f_zero_radius(k, theta, alpha):
    """
    The zero-radius amplitude

    .. math::

        f_\\alpha(k, \\theta) = \\frac{\\sin \\pi\\alpha}{(2 \\pi i k)^{1/2}}
            \\frac{e^{-i\\theta/2}}{\\sin(\\theta/2)}.

    Parameters
    ----------
    k : float
        Wave number, ``k > 0``.
    theta : float or array_like
        Scattering angle, not ``0 (mod 2 pi)``.
    alpha : float
        Flux parameter.  The closed form is used on ``[0, 1)``; other values
        go through `zero_radius_sum`.

    Returns
    -------
    f : complex or `~numpy.ndarray`
        Exactly zero for ``alpha == 0``.

    Raises
    ------
    ForwardDirectionError
        If any ``theta`` is ``0 (mod 2 pi)``.
    """

    k = _check_positive('k', k)
    theta_arr = _check_theta(theta)

    root = np.sqrt(2.0 * np.pi * k) * np.exp(0.25j * np.pi)
    if 0.0 <= alpha < 1.0:
        half = 0.5 * theta_arr
        value = (np.sin(np.pi * alpha) / root) * np.exp(-1j * half) \
            / np.sin(half)
    else:
        value = np.asarray(zero_radius_sum(theta_arr, alpha)) / root

    return _as_output(value, theta)


def series_coefficients(ms, k, alpha, a, bc):
    """
    The partial-wave coefficients ``exp(2 i Delta_m(alpha)) jc / (jc + i
    nc)`` of the radius-correction series.

    Parameters
    ----------
    ms : array_like of int
        Angular momenta.
    k, a : float
        Wave number and radius.
    alpha : float
        Any finite flux parameter.
    bc : `~abscatter.phase_shift.BoundaryCondition`

    Returns
    -------
    coeffs : `~numpy.ndarray` of complex

    Raises
    ------
    KernelError
        If a coefficient modulus exceeds one, which ``|S| = 1`` forbids.
    """

    ms = np.asarray(ms, dtype=int)
    nu = np.abs(ms + alpha)
    delta = 0.5 * np.pi * (np.abs(ms) - nu)

    quad = bessel_quad(nu, np.full(nu.shape, k * a))
    jc, nc = mixing_coefficients(quad, k, bc)

    scale = np.maximum(np.abs(jc), np.abs(nc))
    if np.any(~np.isfinite(scale)) or np.any(scale == 0):
        raise KernelError('mixing coefficients vanished at ka = {0!r}'.format(
            k * a))
    jc = jc / scale
    nc = nc / scale

    coeffs = np.exp(2j * delta) * jc / (jc + 1j * nc)

    if np.any(np.abs(coeffs) > 1.0 + _COEFFICIENT_SLACK):
        raise KernelError(
            'series coefficient modulus exceeds 1 at ka = {0!r}'.format(k * a))
    return coeffs


def _side_tail(t1, t2):
    if t1 == 0.0:
        return 0.0
    rho = t2 / t1
    if rho >= _MAX_TAIL_RATIO:
        return math.inf
    return t1 / (1.0 - rho)


def _truncate(k, alpha, a, bc, tol, m_center):
    ka = k * a
    m_start = int(math.ceil(ka)) + _MIN_EXTRA_ORDERS
    cap = truncation_cap(ka)
    prefactor = math.sqrt(2.0 / (math.pi * k))
    eps = np.finfo(float).eps

    m_hi = m_start
    while True:
        ms = np.arange(m_center - m_hi - 2, m_center + m_hi + 3)
        try:
            coeffs = series_coefficients(ms, k, alpha, a, bc)
        except BesselOverflowError as exc:
            raise AmplitudeConvergenceError(
                'partial-wave series did not reach tol={0!r} before the '
                'Bessel functions left double precision range '
                '(ka={1!r}, m_max={2})'.format(tol, ka, m_hi)) from exc
        moduli = np.abs(coeffs)
        mid = m_hi + 2

        for order in range(m_start, m_hi + 1):
            right = _side_tail(moduli[mid + order + 1],
                               moduli[mid + order + 2])
            left = _side_tail(moduli[mid - order - 1],
                              moduli[mid - order - 2])
            kept = slice(mid - order, mid + order + 1)
            rounding = 4.0 * eps * float(np.sum(moduli[kept]))
            bound = prefactor * (right + left + rounding)
            if bound <= tol:
                log.debug('series truncated at m_max=%d (ka=%g, tail=%.3g)',
                          order, ka, bound)
                return order, bound, ms[kept], coeffs[kept]

        if m_hi >= cap:
            raise AmplitudeConvergenceError(
                'partial-wave series did not reach tol={0!r} below the '
                'truncation cap {1} (ka={2!r})'.format(tol, cap, ka))
        m_hi = min(2 * m_hi, cap)


def _summation_order(ms, m_center):
    # m0, m0 + 1, m0 - 1, m0 + 2, ...
    offsets = ms - m_center
    return np.lexsort((offsets < 0, np.abs(offsets)))


def f_r_lambda(k, theta, alpha, a, bc, tol=DEFAULT_TOL):
    """
    Evaluate the radius-correction series.

    The window starts at ``ceil(ka) + 10`` orders on each side of its centre
    and doubles until the estimated tail drops below ``tol``; the smallest
    order meeting ``tol`` is then used.

    Parameters
    ----------
    k : float
        Wave number, ``k > 0``.
    theta : float or array_like
        Scattering angle(s).  The forward direction is allowed here.
    alpha : float
        Flux parameter.  Values outside ``[0, 1)`` centre the window on
        ``-n_shift`` so that the same orders are summed.
    a : float
        Solenoid radius, ``a > 0``.
    bc : `~abscatter.phase_shift.BoundaryCondition`
    tol : float, optional
        Target bound on the omitted tail.

    Returns
    -------
    series : `AmplitudeSeries`

    Raises
    ------
    AmplitudeConvergenceError
        If ``tol`` is not met below `truncation_cap`.
    """

    k = _check_positive('k', k)
    a = _check_positive('a', a)
    tol = _check_positive('tol', tol)
    theta_arr = np.asarray(theta, dtype=float)
    if not np.all(np.isfinite(theta_arr)):
        raise DomainError('scattering angle must be finite')

    _, n_shift = canonicalize_flux(alpha)
    m_center = -n_shift

    order, bound, ms, coeffs = _truncate(k, alpha, a, bc, tol, m_center)

    total = np.zeros(theta_arr.shape, dtype=complex)
    for idx in _summation_order(ms, m_center):
        total = total + coeffs[idx] * np.exp(1j * ms[idx] * theta_arr)

    prefactor = -math.sqrt(2.0 / (math.pi * k)) * np.exp(-0.25j * math.pi)
    value = _as_output(prefactor * total, theta)

    return AmplitudeSeries(k=k, theta=theta, alpha=float(alpha), a=a, bc=bc,
                           m_max=order, m_center=m_center, value=value,
                           tail_bound=bound)


def amplitude(k, theta, alpha, a, bc, tol=DEFAULT_TOL):
    """
    The full amplitude ``f_zero_radius + f_r_lambda``.

    Parameters
    ----------
    k : float
        Wave number, ``k > 0``.
    theta : float or array_like
        Scattering angle, not ``0 (mod 2 pi)``.
    alpha : float
    a : float
    bc : `~abscatter.phase_shift.BoundaryCondition`
    tol : float, optional

    Returns
    -------
    f : complex or `~numpy.ndarray`
    """

    _check_theta(theta)
    zero = f_zero_radius(k, theta, alpha)
    return zero + f_r_lambda(k, theta, alpha, a, bc, tol=tol).value


def cross_section(k, theta, alpha, a, bc, tol=DEFAULT_TOL):
    """
    The differential cross section ``|amplitude|**2``.
    """

    value = np.abs(amplitude(k, theta, alpha, a, bc, tol=tol)) ** 2
    if np.ndim(value) == 0:
        return float(value)
    return value


def cross_section_table(ks, thetas, alpha, a, bc, tol=DEFAULT_TOL,
                        workers=None):
    """
    Tabulate cross sections on a grid.

    Each ``k`` is an independent task for a thread pool; rows come back in
    ascending ``k`` then ascending ``theta`` whatever the number of workers.

    Parameters
    ----------
    ks, thetas : array_like
        Wave numbers and scattering angles.  All angles are checked against
        the forward direction before anything is evaluated.
    alpha, a, bc, tol
        As for `cross_section`.
    workers : int, optional
        Thread count passed to `~concurrent.futures.ThreadPoolExecutor`.

    Returns
    -------
    table : `CrossSectionTable`
    """

    ks = np.sort(np.atleast_1d(np.asarray(ks, dtype=float)))
    thetas = np.sort(_check_theta(np.atleast_1d(thetas)))
    if ks.size == 0 or thetas.size == 0:
        raise DomainError('cross section table needs at least one k and '
                          'one theta')
    for k in ks:
        _check_positive('k', k)
    a = _check_positive('a', a)

    def evaluate(k):
        zero = f_zero_radius(k, thetas, alpha)
        series = f_r_lambda(k, thetas, alpha, a, bc, tol=tol)
        return np.abs(zero + series.value) ** 2, series.m_max

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(evaluate, ks))

    rows = []
    for k, (dsigma, _) in zip(ks, results):
        rows.extend((float(k), float(t), float(d))
                    for t, d in zip(thetas, dsigma))
    m_max = max(order for _, order in results)

    log.debug('tabulated %d cross sections (m_max=%d)', len(rows), m_max)

    return CrossSectionTable(rows=tuple(rows), alpha=float(alpha), a=a, bc=bc,
                             m_max=m_max, tolerance=tol)
