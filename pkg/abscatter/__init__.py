# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Scattering off a finite-radius Aharonov-Bohm solenoid with Dirichlet,
Neumann and Robin boundary conditions.
"""

try:
    from .version import version as __version__
except ImportError:
    __version__ = ''
