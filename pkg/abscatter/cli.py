# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Command-line front end: ``abscatter {phase,smatrix,xsec,figure,verify}``.

Every subcommand writes one CSV table, to standard output by default.  The
table is preceded by ``#`` metadata lines echoing the full run configuration,
so that a file documents how it was produced.  Identical configurations give
byte-identical files.

Exit codes are 0 on success, 2 for usage errors, 3 for numerical or domain
errors and 4 when a verification suite fails.
"""

import argparse
from concurrent.futures import ThreadPoolExecutor
import csv
from dataclasses import dataclass, fields
import io
import logging
import math
import sys

import numpy as np

from . import __version__
from .amplitude import cross_section, cross_section_table, f_zero_radius
from .errors import DomainError, ScatteringError, VerificationError
from .phase_shift import (BoundaryCondition, SectorParams, phase_shift,
                          s_matrix, theta_lambda)
from .utils import write_if_different
from .verify import assert_passed, run_suite


__all__ = ['RunConfig', 'Table', 'emit_csv', 'run', 'main', 'FIGURES',
           'DEFAULT_SWEEP_TOL']


log = logging.getLogger(__name__)

DEFAULT_SWEEP_TOL = 1e-8

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_VERIFICATION = 4

SUBCOMMANDS = ('phase', 'smatrix', 'xsec', 'figure', 'verify')

DEFAULT_THETA = '0.01:{0!r}:600'.format(math.pi)


@dataclass(frozen=True)
class RunConfig(object):
    """
    A parsed command line.  Every field has a default, so a config is
    always complete.
    """

    subcommand: str
    alpha: float = 0.5
    a: float = 1.0
    bc: str = 'robin:1'
    k: str = '1'
    theta: str = DEFAULT_THETA
    m: str = '0'
    tol: float = DEFAULT_SWEEP_TOL
    out: str = '-'
    log_k: bool = True
    figure_id: int = 1
    suite: str = 'all'

    @classmethod
    def from_args(cls, namespace):
        values = {f.name: getattr(namespace, f.name)
                  for f in fields(cls) if hasattr(namespace, f.name)}
        return cls(**values)

    def metadata(self):
        """``key: value`` lines for every field, in declaration order."""

        return ['{0}: {1}'.format(f.name, getattr(self, f.name))
                for f in fields(self)]


@dataclass(frozen=True)
class Table(object):
    """Columns, their units and the data rows of one CSV output."""

    columns: tuple
    units: tuple
    rows: tuple
    notes: tuple = ()


# Argument parsing

def _grid_text(text):
    try:
        parts = [float(p) for p in text.split(':')]
    except ValueError:
        raise argparse.ArgumentTypeError(
            'expected a number or start:stop:count, got {0!r}'.format(text))
    if len(parts) == 3:
        if not parts[2].is_integer() or parts[2] < 1:
            raise argparse.ArgumentTypeError(
                'grid count must be a positive integer, got {0!r}'.format(
                    text))
    elif len(parts) != 1:
        raise argparse.ArgumentTypeError(
            'expected a number or start:stop:count, got {0!r}'.format(text))
    return text


def _m_text(text):
    try:
        parts = [int(p) for p in text.split(':')]
    except ValueError:
        raise argparse.ArgumentTypeError(
            'expected an integer or lo:hi, got {0!r}'.format(text))
    if len(parts) not in (1, 2) or parts[0] > parts[-1]:
        raise argparse.ArgumentTypeError(
            'expected an integer or lo:hi with lo <= hi, got {0!r}'.format(
                text))
    return text


def _bc_text(text):
    try:
        BoundaryCondition.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return text


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--alpha', type=float, default=0.5,
                        help='flux parameter (default: 0.5)')
    common.add_argument('--a', type=float, default=1.0,
                        help='solenoid radius (default: 1)')
    common.add_argument('--bc', type=_bc_text, default='robin:1',
                        help="'dirichlet', 'neumann' or 'robin:<lambda>' "
                             "(default: robin:1)")
    common.add_argument('--k', type=_grid_text, default='1',
                        help='wave number or start:stop:count (default: 1)')
    common.add_argument('--theta', type=_grid_text, default=DEFAULT_THETA,
                        help='angle or start:stop:count in (0, 2 pi) '
                             '(default: 0.01:pi:600)')
    common.add_argument('--m', type=_m_text, default='0',
                        help='angular momentum or lo:hi (default: 0)')
    common.add_argument('--tol', type=float, default=DEFAULT_SWEEP_TOL,
                        help='series truncation tolerance (default: 1e-8)')
    common.add_argument('--out', default='-',
                        help="output CSV path, '-' for standard output")
    spacing = common.add_mutually_exclusive_group()
    spacing.add_argument('--log-k', dest='log_k', action='store_true',
                         default=True, help='log-spaced k grids (default)')
    spacing.add_argument('--lin-k', dest='log_k', action='store_false',
                         help='linearly spaced k grids')

    parser = argparse.ArgumentParser(
        prog='abscatter',
        description='Scattering off a finite Aharonov-Bohm solenoid.')
    parser.add_argument('--version', action='version',
                        version='abscatter {0}'.format(__version__))
    sub = parser.add_subparsers(dest='subcommand', metavar='subcommand')
    sub.required = True

    sub.add_parser('phase', parents=[common],
                   help='phase shifts per sector')
    sub.add_parser('smatrix', parents=[common],
                   help='S-matrix entries per sector')
    sub.add_parser('xsec', parents=[common],
                   help='differential cross sections on a (k, theta) grid')
    figure = sub.add_parser('figure', parents=[common],
                            help='reproduce one of the preset figures')
    figure.add_argument('--id', dest='figure_id', type=int, required=True,
                        choices=sorted(FIGURES))
    verify = sub.add_parser('verify', parents=[common],
                            help='run a verification suite')
    verify.add_argument('--suite', default='all',
                        choices=['special', 'unitarity', 'regimes', 'oracle',
                                 'all'])
    return parser


# Grids

def _grid(text, log_spacing):
    parts = [float(p) for p in text.split(':')]
    if len(parts) == 1:
        return np.array(parts)
    start, stop, count = parts
    if log_spacing:
        if not (start > 0 and stop > 0):
            raise DomainError('log-spaced grids need positive end points')
        return np.logspace(math.log10(start), math.log10(stop), int(count))
    return np.linspace(start, stop, int(count))


def _k_grid(config):
    ks = _grid(config.k, config.log_k)
    if not np.all(ks > 0):
        raise DomainError('wave numbers must be positive')
    return ks


def _theta_grid(config):
    thetas = _grid(config.theta, False)
    if np.any(thetas <= 0) or np.any(thetas >= 2.0 * math.pi):
        raise DomainError('scattering angles must lie in (0, 2 pi)')
    return thetas


def _m_range(config):
    parts = [int(p) for p in config.m.split(':')]
    return range(parts[0], parts[-1] + 1)


# Subcommands

def _phase_table(config):
    bc = BoundaryCondition.parse(config.bc)
    ks = _k_grid(config)
    sectors = [SectorParams.from_flux(m, config.alpha, config.a, bc)
               for m in _m_range(config)]
    columns = [(s, phase_shift(s, ks), theta_lambda(s, ks)) for s in sectors]
    rows = []
    for i, k in enumerate(ks):
        for m, (sector, delta, theta) in zip(_m_range(config), columns):
            rows.append((k, m, sector.nu, delta[i], theta[i]))
    return Table(('k', 'm', 'nu', 'phase_shift', 'theta_lambda'),
                 ('1/length', '', '', 'rad', 'rad'), tuple(rows))


def _smatrix_table(config):
    bc = BoundaryCondition.parse(config.bc)
    ks = _k_grid(config)
    values = [s_matrix(SectorParams.from_flux(m, config.alpha, config.a, bc),
                       ks) for m in _m_range(config)]
    rows = []
    for i, k in enumerate(ks):
        for m, s in zip(_m_range(config), values):
            rows.append((k, m, s[i].real, s[i].imag, abs(s[i])))
    return Table(('k', 'm', 're_S', 'im_S', 'abs_S'),
                 ('1/length', '', '', '', ''), tuple(rows))


def _xsec_table(config):
    bc = BoundaryCondition.parse(config.bc)
    table = cross_section_table(_k_grid(config), _theta_grid(config),
                                config.alpha, config.a, bc, tol=config.tol)
    notes = ('m_max: {0}'.format(table.m_max),)
    return Table(table.columns, table.units, table.rows, notes)


_FIGURE_BCS = (('dirichlet', BoundaryCondition.dirichlet()),
               ('neumann', BoundaryCondition.neumann()))


def _figure_bcs(lam):
    return _FIGURE_BCS + (('robin', BoundaryCondition.robin(lam)),)


def _s_matrix_vs_k(tol):
    ks = np.logspace(math.log10(0.05), math.log10(20.0), 500)
    bcs = _figure_bcs(1.0)
    values = [s_matrix(SectorParams(1, 0.5, 1.0, bc), ks) for _, bc in bcs]
    rows = tuple((k,) + tuple(v[i].real for v in values)
                 for i, k in enumerate(ks))
    return Table(('k',) + tuple('re_S_' + name for name, _ in bcs),
                 ('1/length', '', '', ''), rows,
                 ('alpha: 0.5', 'a: 1', 'm: 1', 'lambda: 1',
                  'k: 0.05:20:500 log'))


def _xsec_vs_theta(k, lam, tol, zero_radius=False):
    thetas = np.linspace(0.01, math.pi, 600)
    bcs = _figure_bcs(lam)

    def evaluate(bc):
        return cross_section(k, thetas, 0.5, 1.0, bc, tol=tol)

    with ThreadPoolExecutor() as pool:
        values = list(pool.map(evaluate, [bc for _, bc in bcs]))

    names = ['dsigma_' + name for name, _ in bcs]
    if zero_radius:
        values.append(np.abs(f_zero_radius(k, thetas, 0.5)) ** 2)
        names.append('dsigma_zero_radius')

    rows = tuple((t,) + tuple(v[i] for v in values)
                 for i, t in enumerate(thetas))
    return Table(('theta',) + tuple(names),
                 ('rad',) + ('length',) * len(names), rows,
                 ('alpha: 0.5', 'a: 1', 'k: {0!r}'.format(k),
                  'lambda: {0!r}'.format(lam), 'theta: 0.01:pi:600 linear'))


def _xsec_vs_k(tol):
    ks = np.logspace(math.log10(0.01), math.log10(20.0), 500)
    theta = 0.5 * math.pi
    bcs = _figure_bcs(1.0)

    def evaluate(k):
        return tuple(cross_section(k, theta, 0.5, 1.0, bc, tol=tol)
                     for _, bc in bcs)

    with ThreadPoolExecutor() as pool:
        values = list(pool.map(evaluate, ks))

    rows = tuple((k,) + v for k, v in zip(ks, values))
    return Table(('k',) + tuple('dsigma_' + name for name, _ in bcs),
                 ('1/length', 'length', 'length', 'length'), rows,
                 ('alpha: 0.5', 'a: 1', 'theta: pi/2', 'lambda: 1',
                  'k: 0.01:20:500 log'))


FIGURES = {
    1: _s_matrix_vs_k,
    2: lambda tol: _xsec_vs_theta(30.0, 0.1, tol),
    3: _xsec_vs_k,
    4: lambda tol: _xsec_vs_theta(0.1, 1.0, tol, zero_radius=True),
    5: lambda tol: _xsec_vs_theta(1.5, 1.0, tol),
}


def _figure_table(config):
    return FIGURES[config.figure_id](config.tol)


def _verify_table(config):
    results = run_suite(config.suite)
    rows = tuple((r.name, r.value, r.tolerance, r.passed) for r in results)
    return Table(('check', 'value', 'tolerance', 'passed'),
                 ('', '', '', ''), rows), results


_BUILDERS = {'phase': _phase_table,
             'smatrix': _smatrix_table,
             'xsec': _xsec_table,
             'figure': _figure_table}


# Output

def _format_value(value):
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return '{0:.17g}'.format(float(value))
    return str(value)


def emit_csv(table, path, metadata=()):
    """
    Write ``table`` as CSV to ``path`` (``'-'`` for standard output).

    Parameters
    ----------
    table : `Table` or `~abscatter.amplitude.CrossSectionTable`
        Anything with ``columns``, ``units`` and ``rows``.
    path : str
    metadata : sequence of str, optional
        Lines written after the generator line, each prefixed by ``# ``.

    Raises
    ------
    DomainError
        If the table has no rows; nothing is written in that case.
    """

    if not table.rows:
        raise DomainError('refusing to write an empty table')

    buffer = io.StringIO()
    buffer.write('# generator: abscatter {0}\n'.format(__version__))
    for line in tuple(metadata) + tuple(getattr(table, 'notes', ())):
        buffer.write('# ' + line + '\n')

    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow('{0} [{1}]'.format(c, u) if u else c
                    for c, u in zip(table.columns, table.units))
    writer.writerows([_format_value(v) for v in row] for row in table.rows)
    text = buffer.getvalue()

    if path == '-':
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        write_if_different(path, text.encode('utf-8'))


def run(args):
    """
    Run the command line ``args`` and return the exit code.
    """

    parser = _build_parser()
    try:
        namespace = parser.parse_args(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    config = RunConfig.from_args(namespace)
    log.debug('running %s', config)

    try:
        if config.subcommand == 'verify':
            table, results = _verify_table(config)
            emit_csv(table, config.out, config.metadata())
            assert_passed(results)
        else:
            table = _BUILDERS[config.subcommand](config)
            emit_csv(table, config.out, config.metadata())
    except VerificationError as exc:
        log.error('abscatter: %s', exc)
        return EXIT_VERIFICATION
    except ScatteringError as exc:
        log.error('abscatter: %s', exc)
        return EXIT_NUMERIC
    except OSError as exc:
        log.error('abscatter: cannot write output: %s', exc)
        return EXIT_NUMERIC

    return EXIT_OK


def main(args=None):
    logging.basicConfig(level=logging.WARNING,
                        format='%(levelname)s: %(message)s')
    if args is None:
        args = sys.argv[1:]
    sys.exit(run(args))


if __name__ == '__main__':
    main()
