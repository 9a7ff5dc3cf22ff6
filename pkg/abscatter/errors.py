# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Exceptions and warnings raised by abscatter.

Everything raised on purpose by the package derives from `ScatteringError`.
Invalid numeric input is additionally a `ValueError`, so callers that only
know about the builtin hierarchy can still catch it.
"""

__all__ = ['ScatteringError', 'DomainError', 'ForwardDirectionError',
           'UnsupportedLambdaError', 'ResolutionError', 'ReferenceRangeError',
           'BesselOverflowError', 'KernelError', 'ConvergenceError',
           'AmplitudeConvergenceError', 'QuadratureError', 'PhaseFitError',
           'VerificationError', 'ScatteringWarning', 'RegimeWarning']


class ScatteringError(Exception):
    """Base class for all errors raised by abscatter."""


class DomainError(ScatteringError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class ForwardDirectionError(DomainError):
    """The scattering angle is the forward direction (theta = 0 mod 2 pi)."""


class UnsupportedLambdaError(DomainError):
    """A Robin parameter outside the supported range lambda >= 0."""


class ResolutionError(DomainError):
    """The radial integration grid does not resolve the wavelength."""


class ReferenceRangeError(DomainError):
    """The extended-precision reference was asked for an impractical point."""


class BesselOverflowError(ScatteringError, OverflowError):
    """A Bessel function value is not representable in double precision."""


class KernelError(ScatteringError, ArithmeticError):
    """
    A quantity that cannot vanish (or exceed one) mathematically did so
    numerically, which means the special-function kernel failed.
    """


class ConvergenceError(ScatteringError):
    """An iterative or truncated computation failed to reach its tolerance."""


class AmplitudeConvergenceError(ConvergenceError):
    """The partial-wave series did not converge below the truncation cap."""


class QuadratureError(ConvergenceError):
    """Nested quadrature results disagree beyond the requested tolerance."""


class PhaseFitError(ConvergenceError):
    """The asymptotic fit of a radial solution left a large residual."""


class VerificationError(ScatteringError):
    """At least one verification check exceeded its tolerance."""


class ScatteringWarning(UserWarning):
    """Base class for warnings issued by abscatter."""


class RegimeWarning(ScatteringWarning):
    """An asymptotic formula was evaluated outside its recommended regime."""
