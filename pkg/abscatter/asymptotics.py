# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
High- and low-energy limits of the S-matrix.

These closed forms do not share any code path with
`abscatter.phase_shift.s_matrix` beyond the sector bookkeeping, so they serve
as regime checks of the exact values.  Calling them outside their recommended
regime (``ka >= 1`` for the high-energy forms, ``ka <= 0.1`` for the low
energy forms) is allowed but issues a `~abscatter.errors.RegimeWarning`.
"""

from dataclasses import dataclass
import logging
import math
import warnings

import numpy as np
from scipy import special

from .errors import DomainError, RegimeWarning
from .phase_shift import DIRICHLET, NEUMANN


__all__ = ['LowEnergyCoeffs', 's_high_energy', 's_high_energy_bracket',
           'low_energy_coeffs', 's_low_energy', 'HIGH_ENERGY_MIN_KA',
           'LOW_ENERGY_MAX_KA']


log = logging.getLogger(__name__)

HIGH_ENERGY_MIN_KA = 1.0
LOW_ENERGY_MAX_KA = 0.1


@dataclass(frozen=True)
class LowEnergyCoeffs(object):
    """
    The ``k``-independent coefficients of the low-energy expansion.

    For the Neumann condition (``lam = inf``) they are the finite limits
    ``d1 / lam``, ``d2 / lam**2`` and ``d3 / lam``; the expansion is
    homogeneous in them, so the limit is exact.
    """

    d1: float
    d2: float
    d3: float


def _check_ka(k, a):
    k = float(k)
    a = float(a)
    if not (math.isfinite(k) and k > 0 and math.isfinite(a) and a > 0):
        raise DomainError('k and a must be positive and finite')
    return k, a


def _high_energy_warning(ka):
    if ka < HIGH_ENERGY_MIN_KA:
        warnings.warn('high-energy form evaluated at ka = {0:g} < {1:g}'
                      .format(ka, HIGH_ENERGY_MIN_KA), RegimeWarning)


def s_high_energy(m, k, a, bc):
    """
    Leading high-energy S-matrix entry.

    Returns ``(-1)**m exp(-2 i k a + i pi / 2)`` for Neumann and for any
    Robin condition with ``lam > 0``, and ``(-1)**m exp(-2 i k a - i pi /
    2)`` for Dirichlet.  The flux parameter drops out at this order.

    Parameters
    ----------
    m : int
    k, a : float
    bc : `~abscatter.phase_shift.BoundaryCondition`

    Returns
    -------
    s : complex
    """

    k, a = _check_ka(k, a)
    ka = k * a
    _high_energy_warning(ka)

    if bc.kind == DIRICHLET or (bc.kind != NEUMANN and bc.lam == 0):
        shift = -0.5 * math.pi
    else:
        shift = 0.5 * math.pi

    sign = -1.0 if int(m) % 2 else 1.0
    return complex(sign * np.exp(1j * (-2.0 * ka + shift)))


def s_high_energy_bracket(sector, k):
    """
    High-energy S-matrix entry keeping the ``lam``-dependent bracket,
    ``(-1)**m exp(-2 i k a + i pi / 2) * B``.

    With ``p = a - lam * nu`` and ``q = lam * k * a`` the bracket is ``B =
    -(p + i q) / (p - i q)``; Dirichlet gives ``B = -1`` and the Neumann limit
    is ``B = (i k a - nu) / (i k a + nu)``.  ``B`` tends to one as ``ka``
    grows for every ``lam > 0``.
    """

    k, a = _check_ka(k, sector.a)
    ka = k * a
    _high_energy_warning(ka)
    nu = sector.nu

    if sector.bc.kind == NEUMANN:
        bracket = (1j * ka - nu) / (1j * ka + nu)
    else:
        lam = sector.bc.lam_value
        p = a - lam * nu
        q = lam * ka
        bracket = -(p + 1j * q) / (p - 1j * q)

    sign = -1.0 if sector.m % 2 else 1.0
    return complex(sign * np.exp(1j * (-2.0 * ka + 0.5 * math.pi)) * bracket)


def low_energy_coeffs(nu, lam, a):
    """
    Coefficients ``d1``, ``d2`` and ``d3`` of the low-energy expansion.

    Parameters
    ----------
    nu : float
        Bessel order, ``nu > 0``.
    lam : float
        Robin length ``lam >= 0``; ``math.inf`` selects the scaled Neumann
        limit.
    a : float
        Solenoid radius.

    Returns
    -------
    coeffs : `LowEnergyCoeffs`

    Raises
    ------
    DomainError
        If ``nu <= 0``; the ``nu = 0`` sector has a logarithmic expansion
        handled by `s_low_energy`.

    Examples
    --------
    >>> c = low_energy_coeffs(0.5, 0.0, 1.0)
    >>> round(c.d1, 10)
    -0.5641895835
    """

    nu = float(nu)
    if not (math.isfinite(nu) and nu > 0):
        raise DomainError(
            'low-energy coefficients need nu > 0, got {0!r}'.format(nu))
    if not (math.isfinite(a) and a > 0):
        raise DomainError('solenoid radius must be positive')
    if not lam >= 0:
        raise DomainError('Robin lambda must be non-negative')

    gamma_nu = special.gamma(nu)
    gamma_next = special.gamma(nu + 1.0)

    if math.isinf(lam):
        d1 = -nu * gamma_nu / (math.pi * a)
        d3 = -nu / (a * gamma_next)
        d2 = nu ** 2 / (a ** 2 * gamma_next ** 2)
    else:
        d1 = (-gamma_nu / math.pi
              - lam * (2.0 * gamma_next - nu * gamma_nu) / (math.pi * a))
        d2 = (1.0 + lam ** 2 * nu ** 2 / a ** 2
              - 2.0 * lam * nu / a) / gamma_next ** 2
        d3 = (1.0 - lam * nu / a) / gamma_next

    return LowEnergyCoeffs(d1=float(d1), d2=float(d2), d3=float(d3))


def _s_low_energy_log(ka, lam, a, neumann):
    log_ka = math.log(ka)
    if log_ka == 0:
        raise DomainError(
            'the logarithmic low-energy form is singular at ka = 1')
    quarter = (0.5 * ka) ** 2
    scale = math.pi / (2.0 * log_ka)

    if neumann:
        j = scale * 2.0 * quarter / a
        n = -1.0 / (a * log_ka)
    else:
        j = scale * (1.0 + 2.0 * lam * quarter / a)
        n = 1.0 - lam / (a * log_ka)

    norm = n * n + j * j
    return complex((n * n - j * j) / norm, 2.0 * j * n / norm)


def s_low_energy(sector, k):
    """
    Low-energy S-matrix entry.

    For ``nu > 0`` the value is

    .. math::

        S \\approx e^{i\\beta}
            \\frac{d_1^2 - d_2 t^2 + 2 i d_1 d_3 t}{d_1^2 + d_2 t^2},
        \\qquad t = (ka/2)^{2\\nu},

    which tends to ``exp(i beta)`` as ``ka -> 0``.  The ``nu = 0`` sector
    uses the logarithmic expansion in ``L = ln(ka)`` in which the Robin
    length enters through ``N_0 - lam N_0' ~ (2 / pi) (L - lam / a)``.

    Parameters
    ----------
    sector : `~abscatter.phase_shift.SectorParams`
    k : float

    Returns
    -------
    s : complex

    Raises
    ------
    DomainError
        For ``nu = 0`` at ``ka = 1``, where ``ln(ka)`` vanishes.
    """

    k, a = _check_ka(k, sector.a)
    ka = k * a
    if ka > LOW_ENERGY_MAX_KA:
        warnings.warn('low-energy form evaluated at ka = {0:g} > {1:g}'
                      .format(ka, LOW_ENERGY_MAX_KA), RegimeWarning)

    neumann = sector.bc.kind == NEUMANN
    lam = sector.bc.lam_value
    nu = sector.nu

    if nu == 0:
        return _s_low_energy_log(ka, lam, a, neumann)

    coeffs = low_energy_coeffs(nu, lam, a)
    t = (0.5 * ka) ** (2.0 * nu)
    d1, d2, d3 = coeffs.d1, coeffs.d2, coeffs.d3

    den = d1 * d1 + d2 * t * t
    p = (d1 * d1 - d2 * t * t) / den
    q = 2.0 * d1 * d3 * t / den

    cos_b = math.cos(sector.beta)
    sin_b = math.sin(sector.beta)
    return complex(cos_b * p - sin_b * q, sin_b * p + cos_b * q)
