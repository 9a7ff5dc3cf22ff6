# Licensed under a 3-clause BSD style license - see LICENSE.rst
import csv
import math
import os

import numpy as np
import pytest

from .. import cli
from ..cli import (DEFAULT_SWEEP_TOL, FIGURES, RunConfig, Table, emit_csv,
                   run)
from ..errors import DomainError
from ..verify import CheckResult


def read_csv(path):
    with open(path, newline='') as fd:
        lines = fd.read().splitlines()
    meta = [line[2:] for line in lines if line.startswith('# ')]
    body = list(csv.reader(
        line for line in lines if not line.startswith('#')))
    return meta, body[0], body[1:]


def test_empty_table(tmpdir):
    path = str(tmpdir.join('empty.csv'))
    with pytest.raises(DomainError):
        emit_csv(Table(('k',), ('1/length',), ()), path)
    assert not os.path.exists(path)


def test_xsec_grid(tmpdir):
    path = str(tmpdir.join('xsec.csv'))
    code = run(['xsec', '--k', '1:2:2', '--lin-k', '--theta', '1:2:2',
                '--bc', 'dirichlet', '--out', path])
    assert code == 0
    meta, header, rows = read_csv(path)
    assert header == ['k [1/length]', 'theta [rad]', 'dsigma_dtheta [length]']
    assert len(rows) == 4
    assert [float(r[0]) for r in rows] == [1.0, 1.0, 2.0, 2.0]
    assert all(float(r[2]) >= 0 for r in rows)
    assert any(line.startswith('m_max: ') for line in meta)


def test_metadata_echo(tmpdir):
    path = str(tmpdir.join('xsec.csv'))
    run(['xsec', '--k', '3', '--theta', '1.5', '--bc', 'robin:0.25',
         '--alpha', '0.3', '--out', path])
    meta, _, _ = read_csv(path)
    assert meta[0].startswith('generator: abscatter')
    for line in ('subcommand: xsec', 'alpha: 0.3', 'bc: robin:0.25', 'k: 3',
                 'theta: 1.5', 'tol: {0}'.format(DEFAULT_SWEEP_TOL)):
        assert line in meta


def test_reruns_identical(capsys):
    args = ['xsec', '--k', '0.5:5:3', '--theta', '0.5:3:4', '--bc',
            'neumann']
    assert run(args) == 0
    first = capsys.readouterr().out
    assert run(args) == 0
    assert capsys.readouterr().out == first


@pytest.mark.parametrize('figure_id', [
    1, pytest.param(2, marks=pytest.mark.slow),
    pytest.param(3, marks=pytest.mark.slow), 4, 5])
def test_figure_reruns_identical(figure_id, capsys):
    args = ['figure', '--id', str(figure_id)]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert run(args) == 0
    assert capsys.readouterr().out == first
    assert 'figure_id: {0}'.format(figure_id) in first


def test_string_cells_quoted(tmpdir):
    path = str(tmpdir.join('names.csv'))
    table = Table(('check', 'value'), ('', ''),
                  (('unitarity, m = 0', 1e-15), ('plain', True)))
    emit_csv(table, path)
    _, header, rows = read_csv(path)
    assert header == ['check', 'value']
    assert rows == [['unitarity, m = 0', '1.0000000000000001e-15'],
                    ['plain', 'true']]


def test_standard_output(capsys):
    assert run(['smatrix', '--k', '1', '--m=-1:1']) == 0
    out = capsys.readouterr().out.splitlines()
    body = [line for line in out if not line.startswith('#')]
    assert body[0] == 'k [1/length],m,re_S,im_S,abs_S'
    assert len(body) == 4
    for row in body[1:]:
        assert abs(float(row.split(',')[4]) - 1) < 1e-12


def test_phase_table(tmpdir):
    path = str(tmpdir.join('phase.csv'))
    assert run(['phase', '--k', '0.1:10:5', '--m', '0:2', '--alpha', '1.25',
                '--out', path]) == 0
    _, header, rows = read_csv(path)
    assert header == ['k [1/length]', 'm', 'nu', 'phase_shift [rad]',
                      'theta_lambda [rad]']
    assert len(rows) == 15
    # alpha = 1.25 shifts m by one, so m = 0 carries nu = 1.25
    assert float(rows[0][2]) == 1.25


@pytest.mark.parametrize('args', [['bogus'], ['xsec', '--bogus'],
                                  ['xsec', '--bc', 'periodic'],
                                  ['xsec', '--bc', 'robin:-1'],
                                  ['xsec', '--k', '1:2'],
                                  ['phase', '--m', '3:1'],
                                  ['figure', '--id', '9']])
def test_usage_errors(args):
    assert run(args) == 2


@pytest.mark.parametrize('args', [['xsec', '--theta', '0'],
                                  ['xsec', '--k=-1'],
                                  ['xsec', '--theta', '7'],
                                  ['xsec', '--k', '0:2:3']])
def test_domain_errors(args, capsys):
    assert run(args) == 3
    assert capsys.readouterr().out == ''


def test_figure_presets(tmpdir):
    path = str(tmpdir.join('fig1.csv'))
    assert run(['figure', '--id', '1', '--out', path]) == 0
    meta, header, rows = read_csv(path)
    assert header == ['k [1/length]', 're_S_dirichlet', 're_S_neumann',
                      're_S_robin']
    assert len(rows) == 500
    assert 'figure_id: 1' in meta

    table = FIGURES[4](DEFAULT_SWEEP_TOL)
    assert table.columns == ('theta', 'dsigma_dirichlet', 'dsigma_neumann',
                             'dsigma_robin', 'dsigma_zero_radius')
    assert len(table.rows) == 600
    assert table.rows[-1][0] == pytest.approx(math.pi)


def test_figure_zero_radius_column():
    table = FIGURES[4](DEFAULT_SWEEP_TOL)
    data = np.array(table.rows)
    zero = 1.0 / (2 * math.pi * 0.1 * np.sin(0.5 * data[:, 0]) ** 2)
    np.testing.assert_allclose(data[:, 4], zero, rtol=1e-12)


def test_verify_subcommand(tmpdir):
    path = str(tmpdir.join('verify.csv'))
    assert run(['verify', '--suite', 'unitarity', '--out', path]) == 0
    _, header, rows = read_csv(path)
    assert header == ['check', 'value', 'tolerance', 'passed']
    assert all(row[3] == 'true' for row in rows)


def test_run_config_defaults():
    config = RunConfig('xsec')
    assert config.tol == DEFAULT_SWEEP_TOL
    assert config.metadata()[0] == 'subcommand: xsec'
    assert len(config.metadata()) == 12


def test_verification_failure_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(cli, 'run_suite',
                        lambda name: [CheckResult('forced', 1.0, 0.0)])
    assert run(['verify', '--suite', 'special']) == 4
    # the failing table is still written before the exit code is set
    assert 'forced,1,0,false' in capsys.readouterr().out


@pytest.mark.slow
def test_verify_oracle_subcommand(tmpdir):
    path = str(tmpdir.join('oracle.csv'))
    assert run(['verify', '--suite', 'oracle', '--out', path]) == 0
    _, header, rows = read_csv(path)
    assert header == ['check', 'value', 'tolerance', 'passed']
    assert rows
    assert all(row[3] == 'true' for row in rows)
