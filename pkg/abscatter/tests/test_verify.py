# Licensed under a 3-clause BSD style license - see LICENSE.rst
import pytest

from ..errors import DomainError, VerificationError
from ..verify import SUITES, CheckResult, assert_passed, run_suite


@pytest.mark.parametrize('name', ['special', 'unitarity', 'regimes'])
def test_suite_passes(name):
    results = run_suite(name)
    assert results
    failed = [(r.name, r.value, r.tolerance) for r in results if not r.passed]
    assert failed == []
    assert_passed(results)


@pytest.mark.slow
def test_oracle_suite_passes():
    assert_passed(run_suite('oracle'))


def test_suite_is_reproducible():
    first = run_suite('special', seed=5)
    second = run_suite('special', seed=5)
    assert first == second


def test_unknown_suite():
    with pytest.raises(DomainError):
        run_suite('nonexistent')
    assert 'all' not in SUITES


def test_assert_passed():
    good = CheckResult('good', 1e-12, 1e-10)
    bad = CheckResult('bad', 1.0, 1e-10)
    assert good.passed
    assert not bad.passed
    assert_passed([good])
    with pytest.raises(VerificationError, match='bad'):
        assert_passed([good, bad])
