# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Independent checks of the closed-form scattering data.

Three tools live here, none of which reuses the closed-form phase shift:

* `bessel_reference` evaluates :math:`J_\\nu` and :math:`Y_\\nu` from their
  ascending series in extended precision (with `mpmath`).
* `integrate_radial` and `extract_phase_shift` solve the radial equation with
  Numerov's method and read the phase shift off the asymptotic form of the
  solution.
* `completeness_check` rebuilds a test function from the continuum
  eigenfunctions of one sector, which fails if the sector had a bound state.
"""

from dataclasses import dataclass
import logging
import math

import mpmath
import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.integrate import quad_vec
from scipy.interpolate import CubicSpline

from .errors import (DomainError, PhaseFitError, QuadratureError,
                     ReferenceRangeError, ResolutionError)
from .phase_shift import (BoundaryCondition, DIRICHLET, NEUMANN, delta_m,
                          mixing_coefficients)
from .special_fn import bessel_jy, bessel_quad


__all__ = ['bessel_reference', 'RadialSolution', 'integrate_radial',
           'numerov_wronskian', 'PhaseShiftFit', 'extract_phase_shift',
           'bump', 'completeness_check', 'DEFAULT_POINTS_PER_WAVELENGTH',
           'MIN_POINTS_PER_WAVELENGTH']


log = logging.getLogger(__name__)

DEFAULT_POINTS_PER_WAVELENGTH = 200
MIN_POINTS_PER_WAVELENGTH = 20

REFERENCE_MAX_X = 50.0
REFERENCE_MAX_NU = 40.0
REFERENCE_MIN_DIGITS = 20

FIT_WINDOW = 0.25
FIT_RESIDUAL_LIMIT = 1e-3

# Smallest k * r_max for which the asymptotic fit is attempted
MIN_FIT_KR = 50.0

QUADRATURE_ORDER = 10


# Extended-precision Bessel reference

def _j_series(nu, x, eps):
    half = x / 2
    q = -(half * half)
    term = mpmath.power(half, nu) * mpmath.rgamma(nu + 1)
    total = term
    k = 0
    while True:
        k += 1
        term = term * q / (k * (k + nu))
        total += term
        if k > x and abs(term) <= eps * abs(total):
            return total


def _y_integer(n, x, j_n, eps):
    half = x / 2
    quarter = half * half

    finite = mpmath.mpf(0)
    for k in range(n):
        finite += mpmath.factorial(n - k - 1) / mpmath.factorial(k) \
            * mpmath.power(quarter, k)

    tail = mpmath.mpf(0)
    k = 0
    while True:
        term = (mpmath.digamma(k + 1) + mpmath.digamma(n + k + 1)) \
            * mpmath.power(-quarter, k) \
            / (mpmath.factorial(k) * mpmath.factorial(n + k))
        tail += term
        if k > x and abs(term) <= eps * abs(tail):
            break
        k += 1

    return (-mpmath.power(half, -n) * finite / mpmath.pi
            + 2 * mpmath.log(half) * j_n / mpmath.pi
            - mpmath.power(half, n) * tail / mpmath.pi)


def bessel_reference(nu, x, digits=30):
    """
    Reference values of :math:`J_\\nu(x)` and :math:`Y_\\nu(x)`.

    :math:`J_\\nu` is summed from its ascending series.  For non-integer
    order :math:`Y_\\nu` follows from
    :math:`(J_\\nu \\cos\\nu\\pi - J_{-\\nu}) / \\sin\\nu\\pi`; for integer order
    the logarithmic series is summed instead.  The working precision adds
    guard digits for the cancellation in both formulas.

    Parameters
    ----------
    nu : float
        Order, ``0 <= nu <= 40``.
    x : float
        Argument, ``0 < x <= 50``.
    digits : int, optional
        Requested significant digits, at least 20.

    Returns
    -------
    j, y : `mpmath.mpf`

    Raises
    ------
    ReferenceRangeError
        Outside the ranges above, where the series become impractical.
    """

    nu = float(nu)
    x = float(x)
    digits = int(digits)
    if not (0.0 <= nu <= REFERENCE_MAX_NU):
        raise ReferenceRangeError(
            'reference order must lie in [0, {0:g}], got {1!r}'.format(
                REFERENCE_MAX_NU, nu))
    if not (0.0 < x <= REFERENCE_MAX_X):
        raise ReferenceRangeError(
            'reference argument must lie in (0, {0:g}], got {1!r}'.format(
                REFERENCE_MAX_X, x))
    if digits < REFERENCE_MIN_DIGITS:
        raise ReferenceRangeError(
            'reference needs at least {0} digits'.format(
                REFERENCE_MIN_DIGITS))

    integer = nu.is_integer()
    guard = digits + 10 + int(math.ceil(x / math.log(10.0)))
    if not integer:
        guard += int(math.ceil(max(0.0, -math.log10(
            abs(math.sin(math.pi * nu))))))

    with mpmath.workdps(guard):
        eps = mpmath.mpf(10) ** (-guard)
        nu_mp = mpmath.mpf(nu)
        x_mp = mpmath.mpf(x)

        j = _j_series(nu_mp, x_mp, eps)
        if integer:
            y = _y_integer(int(nu), x_mp, j, eps)
        else:
            j_neg = _j_series(-nu_mp, x_mp, eps)
            y = (j * mpmath.cospi(nu_mp) - j_neg) / mpmath.sinpi(nu_mp)

    return j, y


# Radial integration

@dataclass(frozen=True)
class RadialSolution(object):
    """
    Samples of ``psi(r) = r**0.5 * phi(r)`` on a uniform grid.

    ``psi`` solves ``psi'' = ((nu**2 - 1/4) / r**2 - k**2) psi`` outward
    from ``r = a``, where ``phi`` meets the boundary condition.
    """

    nu: float
    k: float
    a: float
    bc: BoundaryCondition
    r_grid: np.ndarray
    u: np.ndarray

    @property
    def h(self):
        return float(self.r_grid[1] - self.r_grid[0])


def _initial_values(bc, a):
    # psi(a), psi'(a) such that phi(a) = lam phi'(a) with
    # phi' = r**-0.5 (psi' - psi / (2 r))
    if bc.kind == DIRICHLET:
        return 0.0, 1.0
    if bc.kind == NEUMANN:
        return 1.0, 0.5 / a
    lam = bc.lam
    return lam, 1.0 + lam / (2.0 * a)


def _taylor_step(psi, dpsi, r, h, c, k):
    g = c / r ** 2 - k ** 2
    g1 = -2.0 * c / r ** 3
    g2 = 6.0 * c / r ** 4
    g3 = -24.0 * c / r ** 5

    d2 = g * psi
    d3 = g1 * psi + g * dpsi
    d4 = (g2 + g * g) * psi + 2.0 * g1 * dpsi
    d5 = (g3 + 4.0 * g * g1) * psi + (3.0 * g2 + g * g) * dpsi

    return (psi + h * dpsi + h ** 2 / 2.0 * d2 + h ** 3 / 6.0 * d3
            + h ** 4 / 24.0 * d4 + h ** 5 / 120.0 * d5)


def integrate_radial(nu, k, a, bc, r_max=None, n_steps=None, scale=1.0):
    """
    Integrate the radial equation of one sector with Numerov's method.

    Parameters
    ----------
    nu : float
        Bessel order ``|m + alpha|``.
    k : float
        Wave number, ``k > 0``.
    a : float
        Solenoid radius.
    bc : `~abscatter.phase_shift.BoundaryCondition`
    r_max : float, optional
        Outer radius, at least ``max(50 / k, 20 a)``.  Defaults to
        ``max(50 / k, 20 a, 10 (nu**2 + 1) / k)``.
    n_steps : int, optional
        Number of steps.  By default the step is the smaller of a 200th of
        the wavelength and ``a / (10 max(nu, 1))``.
    scale : float, optional
        Positive factor applied to both initial values.

    Returns
    -------
    solution : `RadialSolution`

    Raises
    ------
    ResolutionError
        If the grid has fewer than 20 points per wavelength.
    """

    nu = float(nu)
    k = float(k)
    a = float(a)
    if not (nu >= 0 and k > 0 and a > 0):
        raise DomainError('need nu >= 0, k > 0 and a > 0')
    if not scale > 0:
        raise DomainError('initial-value scale must be positive')

    r_min = max(MIN_FIT_KR / k, 20.0 * a)
    if r_max is None:
        r_max = max(r_min, 10.0 * (nu ** 2 + 1.0) / k)
    elif r_max < r_min * (1.0 - 1e-12):
        raise DomainError(
            'r_max={0!r} is below max(50 / k, 20 a) = {1!r}'.format(
                r_max, r_min))

    wavelength = 2.0 * math.pi / k
    if n_steps is None:
        h = min(wavelength / DEFAULT_POINTS_PER_WAVELENGTH,
                a / (10.0 * max(nu, 1.0)))
        n_steps = int(math.ceil((r_max - a) / h))
    n_steps = int(n_steps)
    if n_steps < 2:
        raise ResolutionError('radial grid needs at least two steps')
    h = (r_max - a) / n_steps

    if wavelength / h < MIN_POINTS_PER_WAVELENGTH:
        raise ResolutionError(
            '{0:.1f} points per wavelength; at least {1} are needed'.format(
                wavelength / h, MIN_POINTS_PER_WAVELENGTH))

    r = a + h * np.arange(n_steps + 1)
    c = nu ** 2 - 0.25
    g = c / r ** 2 - k ** 2
    f = (1.0 - h * h * g / 12.0).tolist()

    psi0, dpsi0 = _initial_values(bc, a)
    psi0 *= scale
    dpsi0 *= scale

    u = [0.0] * (n_steps + 1)
    u[0] = psi0
    u[1] = _taylor_step(psi0, dpsi0, a, h, c, k)
    for i in range(1, n_steps):
        u[i + 1] = ((12.0 - 10.0 * f[i]) * u[i] - f[i - 1] * u[i - 1]) \
            / f[i + 1]

    log.debug('Numerov grid: %d steps, h=%g, r_max=%g', n_steps, h, r_max)

    return RadialSolution(nu=nu, k=k, a=a, bc=bc, r_grid=r,
                          u=np.asarray(u))


def numerov_wronskian(sol1, sol2):
    """
    The discrete Wronskian ``f_n f_{n+1} (u_{n+1} v_n - u_n v_{n+1}) / h``
    of two solutions on the same grid, with ``f_n = 1 - h**2 g_n / 12``.

    The Numerov recurrence conserves it exactly, so the returned array is
    constant up to rounding.
    """

    if (sol1.r_grid.shape != sol2.r_grid.shape
            or not np.array_equal(sol1.r_grid, sol2.r_grid)):
        raise DomainError('solutions must share the same radial grid')
    if sol1.nu != sol2.nu or sol1.k != sol2.k:
        raise DomainError('solutions must solve the same equation')

    h = sol1.h
    r = sol1.r_grid
    g = (sol1.nu ** 2 - 0.25) / r ** 2 - sol1.k ** 2
    f = 1.0 - h * h * g / 12.0
    u = sol1.u
    v = sol2.u
    return f[:-1] * f[1:] * (u[1:] * v[:-1] - u[:-1] * v[1:]) / h


# Phase-shift extraction

@dataclass(frozen=True)
class PhaseShiftFit(object):
    """
    Result of `extract_phase_shift`.

    Attributes
    ----------
    delta : float
        Phase shift reduced to ``[0, pi)``.
    theta : float
        Fitted boundary phase, in ``(-pi, pi]``.
    amplitude : float
        Fitted amplitude of ``psi``.
    residual : float
        RMS residual of the fit divided by ``amplitude``.
    """

    delta: float
    theta: float
    amplitude: float
    residual: float


def _asymptotic_phase(nu, x):
    mu = 4.0 * nu ** 2
    w = 4.0 * x
    return (x - (0.5 * nu + 0.25) * math.pi
            + (mu - 1.0) / (2.0 * w)
            + (mu - 1.0) * (mu - 25.0) / (6.0 * w ** 3)
            + (mu - 1.0) * (mu ** 2 - 114.0 * mu + 1073.0) / (5.0 * w ** 5)
            + (mu - 1.0) * (5.0 * mu ** 3 - 1535.0 * mu ** 2
                            + 54703.0 * mu - 375733.0) / (14.0 * w ** 7))


def _asymptotic_envelope(nu, x):
    mu = 4.0 * nu ** 2
    w = (2.0 * x) ** 2
    squared = (1.0 + (mu - 1.0) / (2.0 * w)
               + 0.375 * (mu - 1.0) * (mu - 9.0) / w ** 2
               + 0.3125 * (mu - 1.0) * (mu - 9.0) * (mu - 25.0) / w ** 3)
    return np.sqrt(squared)


def extract_phase_shift(sol, m, alpha):
    """
    Fit the large-``r`` tail of a radial solution and return its phase shift.

    Over the last quarter of the grid ``psi`` is fitted by
    ``E(kr) (c1 cos P(kr) + c2 sin P(kr))`` where ``E`` and ``P`` are the
    large-argument modulus and phase of :math:`J_\\nu` and :math:`N_\\nu`.
    The boundary phase is ``atan2(-c2, c1)`` and the phase shift is that
    plus ``Delta_m(alpha)``, reduced modulo ``pi``.

    Parameters
    ----------
    sol : `RadialSolution`
    m : int
    alpha : float
        Flux parameter in ``[0, 1)``; ``|m + alpha|`` must equal ``sol.nu``.

    Returns
    -------
    fit : `PhaseShiftFit`

    Raises
    ------
    PhaseFitError
        If the RMS residual exceeds ``1e-3`` of the fitted amplitude.
    """

    if abs(abs(m + alpha) - sol.nu) > 1e-12:
        raise DomainError(
            'solution has nu={0!r} but m={1!r}, alpha={2!r} give {3!r}'
            .format(sol.nu, m, alpha, abs(m + alpha)))

    r = sol.r_grid
    if sol.k * r[-1] < MIN_FIT_KR * (1.0 - 1e-12):
        raise DomainError(
            'k r_max = {0:g} is too small for an asymptotic fit'.format(
                sol.k * r[-1]))

    start = int(len(r) * (1.0 - FIT_WINDOW))
    x = sol.k * r[start:]
    target = sol.u[start:]

    envelope = _asymptotic_envelope(sol.nu, x)
    phase = _asymptotic_phase(sol.nu, x)
    basis = np.column_stack([envelope * np.cos(phase),
                             envelope * np.sin(phase)])

    (c1, c2), _, _, _ = np.linalg.lstsq(basis, target, rcond=None)
    amp = math.hypot(c1, c2)
    if amp == 0:
        raise PhaseFitError('radial solution vanishes in the fit window')

    fitted = basis @ np.array([c1, c2])
    residual = float(np.sqrt(np.mean((fitted - target) ** 2)))
    residual /= amp
    log.debug('phase fit over %d points: relative residual %.3g',
              len(x), residual)
    if residual > FIT_RESIDUAL_LIMIT:
        raise PhaseFitError(
            'asymptotic fit residual {0:.3g} exceeds {1:g}'.format(
                residual, FIT_RESIDUAL_LIMIT))

    theta = math.atan2(-c2, c1)
    delta = (theta + delta_m(m, alpha)) % math.pi

    return PhaseShiftFit(delta=delta, theta=theta, amplitude=amp,
                         residual=residual)


# Completeness of the continuum eigenfunctions

def bump(r, centre, half_width=1.0):
    """
    The smooth compactly supported test function ``exp(-1 / (1 - t**2))``
    with ``t = (r - centre) / half_width``, zero for ``|t| >= 1``.
    """

    t = (np.asarray(r, dtype=float) - centre) / half_width
    inside = np.abs(t) < 1.0
    out = np.zeros(t.shape)
    out[inside] = np.exp(-1.0 / (1.0 - t[inside] ** 2))
    if np.ndim(r) == 0:
        return float(out)
    return out


def _test_function(psi, support):
    if callable(psi):
        if support is None:
            raise DomainError('a callable test function needs its support')
        s_lo, s_hi = (float(s) for s in support)
        func = psi
        peak = float(np.max(np.abs(psi(np.linspace(s_lo, s_hi, 513)))))
    else:
        s, values = (np.asarray(v, dtype=float) for v in psi)
        if s.ndim != 1 or s.shape != values.shape or len(s) < 4:
            raise DomainError('sampled test function needs matching 1-d '
                              'arrays of at least four points')
        func = CubicSpline(s, values)
        s_lo, s_hi = float(s[0]), float(s[-1])
        peak = float(np.max(np.abs(values)))
    if not s_hi > s_lo:
        raise DomainError('empty test-function support')
    return func, s_lo, s_hi, peak


def _reconstruct(func, s_lo, s_hi, nu, bc, a, r0, k_max, width):
    n_panels = int(math.ceil(k_max / width))
    edges = np.linspace(0.0, k_max, n_panels + 1)
    nodes, weights = leggauss(QUADRATURE_ORDER)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    ks = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    wk = (half[:, None] * weights[None, :]).ravel()

    quad = bessel_quad(nu, ks * a)
    jc, nc = mixing_coefficients(quad, ks, bc)
    norm = np.hypot(jc, nc)
    cos_t = nc / norm
    sin_t = jc / norm

    def integrand(s):
        j, y = bessel_jy(nu, ks * s)
        return (cos_t * j - sin_t * y) * (func(s) * s)

    inner, err = quad_vec(integrand, s_lo, s_hi, epsabs=1e-12, epsrel=1e-10,
                          norm='max')
    j0, y0 = bessel_jy(nu, ks * r0)
    value = float(np.sum(wk * ks * (cos_t * j0 - sin_t * y0) * inner))

    log.debug('completeness quadrature: %d k nodes, inner error %.3g',
              ks.size, err)
    return value


def completeness_check(psi, nu, lam, a, r0, k_max, quad_tol=1e-3,
                       support=None):
    """
    Rebuild a test function at ``r0`` from the continuum eigenfunctions.

    Evaluates

    .. math::

        \\int_0^{k_{max}} \\varphi_k(r_0)
            \\int \\varphi_k(s) \\psi(s) s \\, ds \\, k \\, dk

    where :math:`\\varphi_k` is the normalized radial solution of the
    sector.  The inner integral uses `scipy.integrate.quad_vec` for all
    ``k`` nodes at once; the outer one uses Gauss-Legendre panels no wider
    than ``pi / (4 max(s_hi, r0))``, evaluated a second time with half the
    width.

    Parameters
    ----------
    psi : callable or (array_like, array_like)
        The test function, either a callable with ``support`` given or
        samples ``(s, values)`` interpolated by a cubic spline.
    nu : float
        Bessel order.
    lam : float or `~abscatter.phase_shift.BoundaryCondition`
        Robin length (``math.inf`` for Neumann) or a boundary condition.
    a : float
        Solenoid radius; the support must lie in ``[a, inf)``.
    r0 : float
        Reconstruction radius, ``r0 > a``.
    k_max : float
        Upper limit of the ``k`` integral.
    quad_tol : float, optional
        Allowed difference between the two panel widths, relative to
        ``max |psi|``.
    support : (float, float), optional
        Support of a callable ``psi``.

    Returns
    -------
    value : float
        The reconstruction, to be compared with ``psi(r0)``.

    Raises
    ------
    QuadratureError
        If the two panel widths disagree by more than ``quad_tol``.
    """

    if isinstance(lam, BoundaryCondition):
        bc = lam
    else:
        bc = BoundaryCondition.from_lambda(lam)
    nu = float(nu)
    if not (nu >= 0 and a > 0 and k_max > 0 and quad_tol > 0):
        raise DomainError('need nu >= 0, a > 0, k_max > 0 and quad_tol > 0')
    if not r0 > a:
        raise DomainError('reconstruction radius must exceed a')

    func, s_lo, s_hi, peak = _test_function(psi, support)
    if s_lo < a:
        raise DomainError('test function support must lie in [a, inf)')

    width = math.pi / (4.0 * max(s_hi, r0))
    coarse = _reconstruct(func, s_lo, s_hi, nu, bc, a, r0, k_max, width)
    fine = _reconstruct(func, s_lo, s_hi, nu, bc, a, r0, k_max, 0.5 * width)

    if abs(fine - coarse) > quad_tol * peak:
        raise QuadratureError(
            'k quadrature changed by {0:.3g} on halving the panels'.format(
                abs(fine - coarse)))
    return fine
