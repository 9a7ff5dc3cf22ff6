# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Named verification suites.

Each suite returns a list of `CheckResult` objects, one per property, where
``value`` is the largest deviation observed and ``tolerance`` the bound it
must respect.  Random draws come from ``numpy.random.default_rng(seed)``, so
a suite run is reproducible.
"""

from dataclasses import dataclass
import itertools
import logging
import math

import numpy as np

from .asymptotics import s_high_energy, s_low_energy
from .errors import DomainError, VerificationError
from .oracle import (bessel_reference, bump, completeness_check,
                     extract_phase_shift, integrate_radial)
from .phase_shift import BoundaryCondition, SectorParams, phase_shift, s_matrix
from .special_fn import bessel_jy, bessel_quad


__all__ = ['CheckResult', 'SUITES', 'run_suite', 'assert_passed']


log = logging.getLogger(__name__)

SAMPLE_ALPHAS = (0.0, 0.25, 0.5, 0.9)
SAMPLE_LAMBDAS = (0.0, 0.1, 1.0, 10.0, math.inf)


@dataclass(frozen=True)
class CheckResult(object):
    name: str
    value: float
    tolerance: float

    @property
    def passed(self):
        return bool(self.value <= self.tolerance)


def _mod_pi_distance(x, y):
    d = (x - y) % math.pi
    return min(d, math.pi - d)


def _special_checks(rng):
    nus = np.linspace(0.0, 10.0, 50)
    xs = np.logspace(math.log10(0.05), 2.0, 50)
    nu_grid, x_grid = np.meshgrid(nus, xs)
    quad = bessel_quad(nu_grid, x_grid)
    expected = 2.0 / (math.pi * x_grid)
    wronskian = np.max(np.abs(quad.wronskian() - expected) / expected)

    x = np.linspace(0.1, 50.0, 500)
    scale = np.sqrt(2.0 / (math.pi * x))
    j_half, y_half = bessel_jy(0.5, x)
    j_3half, y_3half = bessel_jy(1.5, x)
    closed = max(
        np.max(np.abs(j_half - scale * np.sin(x)) / scale),
        np.max(np.abs(y_half + scale * np.cos(x)) / scale),
        np.max(np.abs(j_3half - scale * (np.sin(x) / x - np.cos(x))) / scale),
        np.max(np.abs(y_3half + scale * (np.cos(x) / x + np.sin(x))) / scale))

    worst = 0.0
    for nu, xv in zip(rng.uniform(0.0, 10.0, 200), rng.uniform(0.1, 30.0, 200)):
        j, y = bessel_jy(nu, xv)
        j_ref, y_ref = bessel_reference(nu, xv, digits=25)
        size = math.hypot(float(j_ref), float(y_ref))
        worst = max(worst, abs(j - float(j_ref)) / size,
                    abs(y - float(y_ref)) / size)

    return [CheckResult('wronskian', float(wronskian), 1e-10),
            CheckResult('half_integer_closed_forms', float(closed), 1e-12),
            CheckResult('reference_agreement', worst, 1e-10)]


def _unitarity_checks(rng):
    kas = np.logspace(-3.0, 3.0, 10)
    modulus = 0.0
    consistency = 0.0
    collapse = 0.0
    for m, alpha, lam in itertools.product(range(-10, 11), SAMPLE_ALPHAS,
                                           SAMPLE_LAMBDAS):
        sector = SectorParams(m, alpha, 1.0, BoundaryCondition.from_lambda(lam))
        s = s_matrix(sector, kas)
        delta = phase_shift(sector, kas)
        modulus = max(modulus, float(np.max(np.abs(np.abs(s) - 1.0))))
        consistency = max(consistency,
                          float(np.max(np.abs(s - np.exp(2j * delta)))))
        if lam == 0.0:
            dirichlet = SectorParams(m, alpha, 1.0,
                                     BoundaryCondition.dirichlet())
            collapse = max(collapse, float(np.max(np.abs(
                s - s_matrix(dirichlet, kas)))))

    neumann_limit = 0.0
    kas = np.logspace(-1.0, 1.0, 20)
    for m, alpha in itertools.product(range(-5, 6), SAMPLE_ALPHAS):
        robin = SectorParams(m, alpha, 1.0, BoundaryCondition.robin(1e8))
        neumann = SectorParams(m, alpha, 1.0, BoundaryCondition.neumann())
        neumann_limit = max(neumann_limit, float(np.max(np.abs(
            s_matrix(robin, kas) - s_matrix(neumann, kas)))))

    return [CheckResult('unit_modulus', modulus, 1e-12),
            CheckResult('s_equals_exp_2i_delta', consistency, 1e-10),
            CheckResult('dirichlet_collapse', collapse, 1e-14),
            CheckResult('neumann_limit', neumann_limit, 1e-6)]


def _regime_checks(rng):
    dirichlet = BoundaryCondition.dirichlet()
    neumann = BoundaryCondition.neumann()
    robin = BoundaryCondition.robin(1.0)

    high = 0.0
    for bc, alpha in itertools.product((dirichlet, robin, neumann), (0.0, 0.5)):
        for m, ka in ((0, 200.0), (1, 200.0), (5, 2000.0)):
            exact = s_matrix(SectorParams(m, alpha, 1.0, bc), ka)
            high = max(high, abs(exact - s_high_energy(m, ka, 1.0, bc)))

    robin_vs_neumann = 0.0
    dirichlet_vs_neumann = 0.0
    for m, alpha in itertools.product((0, 1), (0.0, 0.5)):
        s_n = s_matrix(SectorParams(m, alpha, 1.0, neumann), 200.0)
        s_r = s_matrix(SectorParams(m, alpha, 1.0, robin), 200.0)
        s_d = s_matrix(SectorParams(m, alpha, 1.0, dirichlet), 200.0)
        robin_vs_neumann = max(robin_vs_neumann, abs(s_r - s_n))
        dirichlet_vs_neumann = max(dirichlet_vs_neumann,
                                   abs(s_d + s_n))

    low = [s_matrix(SectorParams(0, 0.5, 1.0, bc), 1e-3)
           for bc in (dirichlet, robin, neumann)]
    indistinct = max(abs(s1 - s2) for s1, s2 in itertools.combinations(low, 2))

    exponent = 0.0
    expansion = 0.0
    for bc in (dirichlet, robin, neumann):
        sector = SectorParams(0, 0.5, 1.0, bc)
        target = np.exp(1j * sector.beta)
        d3 = abs(s_matrix(sector, 1e-3) - target)
        d4 = abs(s_matrix(sector, 1e-4) - target)
        exponent = max(exponent, abs(math.log10(d3 / d4) - 2 * sector.nu)
                       / (2 * sector.nu))
        expansion = max(expansion, abs(s_matrix(sector, 1e-3)
                                       - s_low_energy(sector, 1e-3)))

    log_form = 0.0
    for bc in (dirichlet, robin, neumann):
        sector = SectorParams(0, 0.0, 1.0, bc)
        log_form = max(log_form, abs(s_matrix(sector, 1e-4)
                                     - s_low_energy(sector, 1e-4)))

    return [CheckResult('high_energy_leading_form', high, 5e-2),
            CheckResult('high_energy_robin_vs_neumann', robin_vs_neumann,
                        1.5e-2),
            CheckResult('high_energy_dirichlet_vs_neumann',
                        dirichlet_vs_neumann, 5e-2),
            CheckResult('low_energy_indistinct', indistinct, 1e-2),
            CheckResult('low_energy_exponent', exponent, 0.1),
            CheckResult('low_energy_expansion', expansion, 1e-5),
            CheckResult('low_energy_log_form', log_form, 5e-3)]


def _random_bc(rng):
    choice = rng.integers(0, 3)
    if choice == 0:
        return BoundaryCondition.dirichlet()
    if choice == 1:
        return BoundaryCondition.neumann()
    return BoundaryCondition.robin(float(rng.uniform(0.0, 5.0)))


def _oracle_checks(rng):
    worst = 0.0
    for _ in range(30):
        m = int(rng.integers(-5, 6))
        alpha = float(rng.uniform(0.0, 1.0))
        bc = _random_bc(rng)
        k = float(rng.uniform(0.5, 20.0))
        sector = SectorParams(m, alpha, 1.0, bc)
        sol = integrate_radial(sector.nu, k, 1.0, bc)
        fit = extract_phase_shift(sol, m, alpha)
        worst = max(worst, _mod_pi_distance(fit.delta,
                                            phase_shift(sector, k)))

    def psi(r):
        return bump(r, centre=2.5)

    complete = 0.0
    for lam in (0.0, 1.0):
        value = completeness_check(psi, 0.5, lam, 1.0, 2.5, 60.0,
                                   support=(1.5, 3.5))
        complete = max(complete, abs(value - psi(2.5)) / psi(2.5))

    value = completeness_check(psi, 0.0, 1.0, 1.0, 2.5, 60.0,
                               quad_tol=1e-2, support=(1.5, 3.5))
    complete_log = abs(value - psi(2.5)) / psi(2.5)

    return [CheckResult('ode_phase_shift', worst, 1e-4),
            CheckResult('completeness', complete, 1e-3),
            CheckResult('completeness_nu0', complete_log, 1e-2)]


SUITES = {'special': _special_checks,
          'unitarity': _unitarity_checks,
          'regimes': _regime_checks,
          'oracle': _oracle_checks}


def run_suite(name, seed=0):
    """
    Run one verification suite, or all of them for ``name == 'all'``.

    Parameters
    ----------
    name : str
        One of ``'special'``, ``'unitarity'``, ``'regimes'``, ``'oracle'`` or
        ``'all'``.
    seed : int, optional
        Seed of the random draws.

    Returns
    -------
    results : list of `CheckResult`
    """

    if name == 'all':
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise DomainError('unknown verification suite {0!r}; choose from '
                          '{1}'.format(name, ', '.join(list(SUITES) + ['all'])))

    results = []
    for suite in names:
        rng = np.random.default_rng(seed)
        for result in SUITES[suite](rng):
            log.info('%s/%s: %.3g (tolerance %.3g)', suite, result.name,
                     result.value, result.tolerance)
            results.append(result)
    return results


def assert_passed(results):
    """Raise `~abscatter.errors.VerificationError` if any check failed."""

    failed = [r for r in results if not r.passed]
    if failed:
        raise VerificationError('{0} check(s) failed: {1}'.format(
            len(failed), ', '.join(r.name for r in failed)))
