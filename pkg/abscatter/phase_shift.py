# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Phase shifts and S-matrix entries of one angular-momentum sector.

A sector is fixed by the angular momentum ``m``, the flux parameter
``alpha`` in ``[0, 1)``, the solenoid radius ``a`` and the boundary condition
imposed on the solenoid border.  The Robin family
``phi(a) = lam * phi'(a)`` contains Dirichlet (``lam = 0``); Neumann
(``lam = inf``) is represented by its own branch built from derivative
combinations only.

With :math:`\\nu = |m + \\alpha|` the phase shift is

.. math::

    \\delta_m^\\lambda(k, \\alpha) = \\Delta_m(\\alpha) + \\theta_\\lambda,
    \\qquad \\Delta_m(\\alpha) = \\frac{\\pi}{2}(|m| - |m + \\alpha|),

where :math:`\\tan\\theta_\\lambda` is the ratio of the mixing coefficients
:math:`J_\\nu(ka) - \\lambda k J'_\\nu(ka)` and
:math:`N_\\nu(ka) - \\lambda k N'_\\nu(ka)`, and
:math:`S = e^{2 i \\delta}`.
"""

from dataclasses import dataclass
import logging
import math

import numpy as np

from .errors import DomainError, KernelError, UnsupportedLambdaError
from .special_fn import bessel_jy, bessel_quad


__all__ = ['BoundaryCondition', 'SectorParams', 'canonicalize_flux',
           'delta_m', 'mixing_coefficients', 'normalization', 'theta_lambda',
           'phase_shift', 's_matrix', 's_matrix_zero_radius',
           'radial_function', 'map_tilde_lambda']


log = logging.getLogger(__name__)

DIRICHLET = 'dirichlet'
NEUMANN = 'neumann'
ROBIN = 'robin'

# Smallest |jc + i nc| accepted as an S-matrix denominator
_TINY_DENOMINATOR = 1e-300


@dataclass(frozen=True)
class BoundaryCondition(object):
    """
    A self-adjoint boundary condition on the solenoid border.

    Use the `dirichlet`, `neumann`, `robin`, `from_lambda` or `parse`
    constructors rather than building instances directly.

    Attributes
    ----------
    kind : str
        One of ``'dirichlet'``, ``'neumann'`` or ``'robin'``.
    lam : float or None
        The Robin length ``lam >= 0``; present only for ``kind == 'robin'``.
    """

    kind: str
    lam: object = None

    def __post_init__(self):
        if self.kind not in (DIRICHLET, NEUMANN, ROBIN):
            raise DomainError(
                'unknown boundary condition {0!r}'.format(self.kind))

        if self.kind == ROBIN:
            if self.lam is None:
                raise DomainError('a Robin condition needs a lambda value')
            lam = float(self.lam)
            if math.isnan(lam) or math.isinf(lam):
                raise UnsupportedLambdaError(
                    'Robin lambda must be finite (use the Neumann condition '
                    'for lambda = inf), got {0!r}'.format(self.lam))
            if lam < 0:
                raise UnsupportedLambdaError(
                    'negative Robin lambda {0!r} is not supported; only '
                    'lambda >= 0 is'.format(lam))
            object.__setattr__(self, 'lam', lam)
        elif self.lam is not None:
            raise DomainError(
                'lambda is only meaningful for a Robin condition')

    @classmethod
    def dirichlet(cls):
        return cls(DIRICHLET)

    @classmethod
    def neumann(cls):
        return cls(NEUMANN)

    @classmethod
    def robin(cls, lam):
        return cls(ROBIN, lam)

    @classmethod
    def from_lambda(cls, lam):
        """
        Robin condition for ``lam``; ``math.inf`` gives the Neumann branch.
        """

        if lam == math.inf:
            return cls.neumann()
        return cls.robin(lam)

    @classmethod
    def parse(cls, text):
        """
        Parse ``'dirichlet'``, ``'neumann'``, ``'robin:<lam>'`` or
        ``'robin:inf'`` (an alias for Neumann).
        """

        token = text.strip().lower()
        if token == DIRICHLET:
            return cls.dirichlet()
        if token == NEUMANN:
            return cls.neumann()
        if token.startswith(ROBIN + ':'):
            value = token.split(':', 1)[1]
            try:
                lam = float(value)
            except ValueError:
                raise DomainError(
                    'cannot parse Robin lambda from {0!r}'.format(text))
            return cls.from_lambda(lam)
        raise DomainError(
            "boundary condition must be 'dirichlet', 'neumann' or "
            "'robin:<lambda>', got {0!r}".format(text))

    @property
    def lam_value(self):
        """The Robin length, with 0 for Dirichlet and inf for Neumann."""

        if self.kind == DIRICHLET:
            return 0.0
        if self.kind == NEUMANN:
            return math.inf
        return self.lam

    @property
    def label(self):
        if self.kind == ROBIN:
            return 'robin:{0!r}'.format(self.lam)
        return self.kind

    def __str__(self):
        return self.label


def canonicalize_flux(alpha_raw):
    """
    Split a flux parameter into its canonical part in ``[0, 1)`` and an
    integer shift.

    Parameters
    ----------
    alpha_raw : float
        Any finite flux parameter.

    Returns
    -------
    alpha : float
        ``alpha_raw - n_shift``, in ``[0, 1)``.
    n_shift : int

    Examples
    --------
    >>> canonicalize_flux(1.25)
    (0.25, 1)
    >>> canonicalize_flux(-0.5)
    (0.5, -1)
    """

    alpha_raw = float(alpha_raw)
    if not math.isfinite(alpha_raw):
        raise DomainError('flux parameter must be finite')

    n_shift = math.floor(alpha_raw)
    alpha = alpha_raw - n_shift
    if alpha >= 1.0:
        # -1e-17 - (-1) rounds to exactly 1
        alpha = 0.0
        n_shift += 1
    return alpha, int(n_shift)


@dataclass(frozen=True)
class SectorParams(object):
    """
    One angular-momentum scattering channel.

    Attributes
    ----------
    m : int
        Angular momentum quantum number.
    alpha : float
        Flux parameter, stored canonically in ``[0, 1)``.
    a : float
        Solenoid radius, ``a > 0``.
    bc : `BoundaryCondition`
    """

    m: int
    alpha: float
    a: float
    bc: BoundaryCondition

    def __post_init__(self):
        if int(self.m) != self.m:
            raise DomainError(
                'angular momentum must be an integer, got {0!r}'.format(
                    self.m))
        object.__setattr__(self, 'm', int(self.m))
        alpha = float(self.alpha)
        if not 0.0 <= alpha < 1.0:
            raise DomainError(
                'alpha must lie in [0, 1), got {0!r}; use '
                'SectorParams.from_flux for other values'.format(self.alpha))
        object.__setattr__(self, 'alpha', alpha)
        a = float(self.a)
        if not (math.isfinite(a) and a > 0):
            raise DomainError(
                'solenoid radius must be positive, got {0!r}'.format(self.a))
        object.__setattr__(self, 'a', a)
        if not isinstance(self.bc, BoundaryCondition):
            raise DomainError('bc must be a BoundaryCondition instance')

    @classmethod
    def from_flux(cls, m, alpha_raw, a, bc):
        """
        Build a sector from an arbitrary flux, moving the integer part of
        ``alpha_raw`` into ``m`` so that ``m + alpha`` is unchanged.
        """

        alpha, n_shift = canonicalize_flux(alpha_raw)
        return cls(int(m) + n_shift, alpha, a, bc)

    @property
    def nu(self):
        """Bessel order ``|m + alpha|``."""

        return abs(self.m + self.alpha)

    @property
    def delta(self):
        """Zero-radius phase shift ``Delta_m(alpha)``."""

        return _delta(self.m, self.alpha)

    @property
    def beta(self):
        """``pi * (|m| - |m + alpha|)``, i.e. twice `delta`."""

        return math.pi * (abs(self.m) - abs(self.m + self.alpha))


def _delta(m, alpha):
    return 0.5 * np.pi * (np.abs(m) - np.abs(m + alpha))


def delta_m(m, alpha):
    """
    The phase shift of the zero-radius solenoid,
    ``(pi / 2) * (|m| - |m + alpha|)``, a function of ``alpha`` only.

    Parameters
    ----------
    m : int or array_like
    alpha : float
        Flux parameter in ``[0, 1)``.

    Returns
    -------
    delta : float or `~numpy.ndarray`
    """

    if not 0.0 <= alpha < 1.0:
        raise DomainError('alpha must lie in [0, 1), got {0!r}'.format(alpha))

    value = _delta(np.asarray(m), alpha)
    if np.ndim(value) == 0:
        return float(value)
    return value


def mixing_coefficients(quad, k, bc):
    """
    The combinations of :math:`J_\\nu` and :math:`N_\\nu` fixed by the
    boundary condition at ``x = k * a``.

    Parameters
    ----------
    quad : `~abscatter.special_fn.BesselQuad`
        Bessel values at ``x = k * a``.
    k : float or `~numpy.ndarray`
        Wave number; converts ``x``-derivatives to radial derivatives.
    bc : `BoundaryCondition`

    Returns
    -------
    jc, nc : float or `~numpy.ndarray`
        ``J - lam * k * J'`` and ``N - lam * k * N'`` for Robin (Dirichlet
        is the same arithmetic with ``lam = 0``), ``J'`` and ``N'`` for
        Neumann.
    """

    if bc.kind == NEUMANN:
        return quad.jp, quad.yp

    lam = 0.0 if bc.kind == DIRICHLET else bc.lam
    return quad.j - lam * k * quad.jp, quad.y - lam * k * quad.yp


def _check_k(k):
    k_arr = np.asarray(k, dtype=float)
    if not (np.all(np.isfinite(k_arr)) and np.all(k_arr > 0)):
        raise DomainError('wave number k must be positive and finite')
    return k_arr


def _sector_mixing(sector, k):
    k_arr = _check_k(k)
    quad = bessel_quad(sector.nu, k_arr * sector.a)
    jc, nc = mixing_coefficients(quad, k_arr, sector.bc)
    if np.any((jc == 0) & (nc == 0)):
        raise KernelError(
            'both mixing coefficients vanish for {0!r}; this contradicts the '
            'Wronskian and indicates a Bessel kernel failure'.format(sector))
    return jc, nc


def _as_output(value, like):
    if np.ndim(like) == 0:
        value = np.asarray(value)
        if np.iscomplexobj(value):
            return complex(value)
        return float(value)
    return value


def normalization(sector, k):
    """
    The normalization ``D = sqrt(jc**2 + nc**2)``, which never vanishes.
    """

    jc, nc = _sector_mixing(sector, k)
    return _as_output(np.hypot(jc, nc), k)


def theta_lambda(sector, k):
    """
    The boundary-condition phase :math:`\\theta_\\lambda`, defined by
    ``cos(theta) = nc / D`` and ``sin(theta) = jc / D``.

    Parameters
    ----------
    sector : `SectorParams`
    k : float or array_like
        Wave number, ``k > 0``.

    Returns
    -------
    theta : float or `~numpy.ndarray`
        Two-argument arctangent, in ``(-pi, pi]``.

    Raises
    ------
    KernelError
        If both mixing coefficients are zero.
    """

    jc, nc = _sector_mixing(sector, k)
    return _as_output(np.arctan2(jc, nc), k)


def phase_shift(sector, k):
    """
    The phase shift ``Delta_m(alpha) + theta_lambda(sector, k)``.

    The sum is reported raw: no reduction modulo ``pi`` or ``2 pi`` is
    applied, so values lie in ``(-3 pi / 2, 3 pi / 2]``.  Only ``exp(2 i
    delta)`` is branch free.
    """

    return _as_output(sector.delta + np.asarray(theta_lambda(sector, k)), k)


def s_matrix(sector, k):
    """
    The S-matrix entry

    .. math::

        S = -e^{2 i \\Delta_m(\\alpha)}
            \\frac{H^{(2)}_\\nu(ka) - \\lambda k H^{(2)\\prime}_\\nu(ka)}
                 {H^{(1)}_\\nu(ka) - \\lambda k H^{(1)\\prime}_\\nu(ka)}

    with the derivative-only ratio for the Neumann condition.

    Parameters
    ----------
    sector : `SectorParams`
    k : float or array_like
        Wave number, ``k > 0``.

    Returns
    -------
    s : complex or `~numpy.ndarray`
        Unit-modulus S-matrix entry.

    Raises
    ------
    KernelError
        If the denominator modulus falls below 1e-300.
    """

    jc, nc = _sector_mixing(sector, k)

    # rescale before dividing: nc alone can be ~1e280 for small ka
    scale = np.maximum(np.abs(jc), np.abs(nc))
    if np.any(~np.isfinite(scale)) or np.any(scale < _TINY_DENOMINATOR):
        raise KernelError(
            'S-matrix denominator vanished for {0!r}'.format(sector))
    w = (jc / scale) + 1j * (nc / scale)

    value = -np.exp(2j * sector.delta) * np.conj(w) / w
    return _as_output(value, k)


def s_matrix_zero_radius(m, alpha):
    """
    The zero-radius S-matrix entry ``exp(2 i Delta_m(alpha))``, i.e.
    ``exp(-i pi alpha)`` for ``m >= -alpha`` and ``exp(i pi alpha)``
    otherwise.
    """

    if not 0.0 <= alpha < 1.0:
        raise DomainError('alpha must lie in [0, 1), got {0!r}'.format(alpha))

    if m >= -alpha:
        return complex(np.exp(-1j * np.pi * alpha))
    return complex(np.exp(1j * np.pi * alpha))


def radial_function(sector, k, r):
    """
    The normalized radial solution

    .. math::

        \\varphi_m^\\lambda(k, r) = \\cos\\theta_\\lambda J_\\nu(kr)
            - \\sin\\theta_\\lambda N_\\nu(kr),

    which satisfies the boundary condition at ``r = a`` and behaves as
    ``(2 / (pi k r))**0.5 * cos(k r - nu pi / 2 - pi / 4 + theta_lambda)``
    at large ``r``.

    Parameters
    ----------
    sector : `SectorParams`
    k : float
        Wave number, ``k > 0``.
    r : float or array_like
        Radii, ``r >= a``.

    Returns
    -------
    phi : float or `~numpy.ndarray`
    """

    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < sector.a):
        raise DomainError('radial solutions are defined for r >= a only')

    jc, nc = _sector_mixing(sector, float(k))
    norm = np.hypot(jc, nc)
    j, y = bessel_jy(sector.nu, k * r_arr)
    return _as_output((nc / norm) * j - (jc / norm) * y, r)


def map_tilde_lambda(tilde, a):
    """
    Convert the Robin parameter of the substituted unknown
    ``psi = r**0.5 * phi`` (condition ``psi(a) = tilde * psi'(a)``) into
    the Robin length ``lam = 2 a tilde / (2 a - tilde)`` of ``phi``.

    Parameters
    ----------
    tilde : float
        Any real value, or ``math.inf``.
    a : float
        Solenoid radius, ``a > 0``.

    Returns
    -------
    lam : float
        ``math.inf`` marks the Neumann condition (``tilde == 2 a``).

    Raises
    ------
    DomainError
        If ``tilde`` is NaN or ``a <= 0``.
    UnsupportedLambdaError
        If the resulting ``lam`` is negative (``tilde = inf`` gives
        ``-2 a``).
    """

    if not a > 0:
        raise DomainError('solenoid radius must be positive')
    tilde = float(tilde)
    if math.isnan(tilde):
        raise DomainError('tilde lambda must be a number or inf, got nan')

    if math.isinf(tilde):
        lam = -2.0 * a
    elif tilde == 2.0 * a:
        return math.inf
    else:
        lam = 2.0 * a * tilde / (2.0 * a - tilde)

    if lam < 0:
        raise UnsupportedLambdaError(
            'tilde lambda {0!r} maps to lambda = {1!r}; only lambda >= 0 '
            'is supported'.format(tilde, lam))
    # -0.0 for tilde = -0.0
    return lam + 0.0
