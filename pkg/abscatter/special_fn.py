# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Bessel functions of real non-negative order and their Hankel combinations.

This is the only numerical kernel of the package: every phase shift, S-matrix
entry and scattering amplitude is assembled from the `BesselQuad` values
returned here.  Function values come from `scipy.special.jv` and
`scipy.special.yv`; the derivatives are always obtained from the order
recurrence

.. math::

    J'_\\nu(x) = -J_{\\nu+1}(x) + \\frac{\\nu}{x} J_\\nu(x)

(and the same for :math:`Y_\\nu`), never by numerical differentiation.

All functions accept scalars or numpy arrays (broadcast against each other)
and are pure, so they may be called from any number of threads.
"""

from dataclasses import dataclass
import logging

import numpy as np
from scipy import special

from .errors import BesselOverflowError, DomainError


__all__ = ['BesselQuad', 'bessel_quad', 'bessel_jy', 'hankel1']


log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BesselQuad(object):
    """
    The values :math:`J_\\nu(x), Y_\\nu(x), J'_\\nu(x), Y'_\\nu(x)` at one
    order and argument (or at a broadcast array of them).

    Attributes
    ----------
    nu : float or `~numpy.ndarray`
        The order, ``nu >= 0``.
    x : float or `~numpy.ndarray`
        The argument, ``x > 0``; always ``k * a`` or ``k * r`` in this package.
    j, y : float or `~numpy.ndarray`
        Bessel functions of the first and second kind.
    jp, yp : float or `~numpy.ndarray`
        Their derivatives with respect to ``x``.
    """

    nu: object
    x: object
    j: object
    y: object
    jp: object
    yp: object

    def wronskian(self):
        """
        Return ``j * yp - jp * y``, which equals ``2 / (pi * x)`` exactly.
        """

        return self.j * self.yp - self.jp * self.y


def _validate(nu, x):
    nu = np.asarray(nu, dtype=float)
    x = np.asarray(x, dtype=float)

    if not (np.all(np.isfinite(nu)) and np.all(np.isfinite(x))):
        raise DomainError('Bessel order and argument must be finite')
    if np.any(nu < 0):
        raise DomainError(
            'negative Bessel order {0!r} is not supported'.format(
                float(np.min(nu))))
    if np.any(x <= 0):
        raise DomainError(
            'Bessel argument must be strictly positive, got {0!r}'.format(
                float(np.min(x))))

    return np.broadcast_arrays(nu, x)


def _check_representable(values, nu, x, name):
    bad = ~np.isfinite(values)
    if np.any(bad):
        idx = np.flatnonzero(bad.ravel())[0]
        raise BesselOverflowError(
            '{0}(nu={1!r}, x={2!r}) is not representable in double '
            'precision'.format(name, float(nu.ravel()[idx]),
                               float(x.ravel()[idx])))


def _scalar_or_array(value, scalar):
    if scalar:
        return float(value)
    return value


def bessel_jy(nu, x):
    """
    Evaluate :math:`J_\\nu(x)` and :math:`Y_\\nu(x)`.

    Parameters
    ----------
    nu : float or array_like
        Order, ``nu >= 0``.
    x : float or array_like
        Argument, ``x > 0``.

    Returns
    -------
    j, y : float or `~numpy.ndarray`
        Bessel functions of the first and second kind.

    Raises
    ------
    DomainError
        If ``x <= 0``, ``nu < 0`` or either is not finite.
    BesselOverflowError
        If :math:`Y_\\nu(x)` is beyond the double precision range (tiny ``x``
        combined with a large order).
    """

    scalar = np.ndim(nu) == 0 and np.ndim(x) == 0
    nu, x = _validate(nu, x)

    j = special.jv(nu, x)
    y = special.yv(nu, x)
    _check_representable(y, nu, x, 'Y')

    return _scalar_or_array(j, scalar), _scalar_or_array(y, scalar)


def bessel_quad(nu, x):
    """
    Evaluate the Bessel functions of order ``nu`` at ``x`` together with
    their derivatives.

    Parameters
    ----------
    nu : float or array_like
        Order, ``nu >= 0``.
    x : float or array_like
        Argument, ``x > 0``.

    Returns
    -------
    quad : `BesselQuad`
        The four values.  Scalar input gives float fields; array input gives
        array fields of the broadcast shape.

    Raises
    ------
    DomainError
        If ``x <= 0``, ``nu < 0`` or either is not finite.
    BesselOverflowError
        If :math:`Y_\\nu(x)` or :math:`Y_{\\nu+1}(x)` (needed for the
        derivative) overflows.

    Examples
    --------
    >>> q = bessel_quad(0.5, np.pi / 2)
    >>> round(q.j, 10)
    0.6366197724
    """

    scalar = np.ndim(nu) == 0 and np.ndim(x) == 0
    nu, x = _validate(nu, x)

    j = special.jv(nu, x)
    y = special.yv(nu, x)
    j_next = special.jv(nu + 1, x)
    y_next = special.yv(nu + 1, x)

    _check_representable(y, nu, x, 'Y')
    _check_representable(y_next, nu + 1, x, 'Y')

    ratio = nu / x
    jp = ratio * j - j_next
    yp = ratio * y - y_next
    # ratio * y can overflow even when y and y_next do not
    _check_representable(yp, nu, x, "Y'")

    return BesselQuad(nu=_scalar_or_array(nu, scalar),
                      x=_scalar_or_array(x, scalar),
                      j=_scalar_or_array(j, scalar),
                      y=_scalar_or_array(y, scalar),
                      jp=_scalar_or_array(jp, scalar),
                      yp=_scalar_or_array(yp, scalar))


def hankel1(q):
    """
    Hankel function of the first kind and its derivative from a `BesselQuad`.

    :math:`H^{(2)}_\\nu` is the complex conjugate for real ``x`` and has no
    separate function.

    Parameters
    ----------
    q : `BesselQuad`

    Returns
    -------
    h, hp : complex or `~numpy.ndarray`
        ``j + 1j * y`` and ``jp + 1j * yp``.
    """

    return q.j + 1j * q.y, q.jp + 1j * q.yp
