# Licensed under a 3-clause BSD style license - see LICENSE.rst
import os

import pytest

from ..git_helpers import get_git_devstr, update_git_devstr
from ..utils import import_file, write_if_different
from ..version_helpers import _version_split, generate_version_py


@pytest.mark.parametrize(('version', 'expected'), [('0.1.dev', (0, 1, 0)),
                                                   ('1.2.3', (1, 2, 3)),
                                                   ('2.0rc1', (2, 0, 0))])
def test_version_split(version, expected):
    assert _version_split(version) == expected


def test_generate_version_py(tmpdir):
    tmpdir.mkdir('frozen')
    srcdir = str(tmpdir)
    version_py = os.path.join(srcdir, 'frozen', 'version.py')

    assert generate_version_py('frozen', '0.3.dev', release=False,
                               uses_git=False, srcdir=srcdir)
    module = import_file(version_py)
    assert module.version == '0.3.dev'
    assert (module.major, module.minor, module.bugfix) == (0, 3, 0)
    assert module.release is False
    assert module.githash == ''

    # unchanged version and release flag leave the file alone
    assert not generate_version_py('frozen', '0.3.dev', uses_git=False,
                                   srcdir=srcdir)

    assert generate_version_py('frozen', '0.3', release=True,
                               uses_git=False, srcdir=srcdir)
    module = import_file(version_py)
    assert module.version == '0.3'
    assert module.release is True


def test_generate_version_py_with_git(tmpdir):
    tmpdir.mkdir('frozen')
    srcdir = str(tmpdir)
    assert generate_version_py('frozen', '1.1.dev', release=False,
                               srcdir=srcdir)
    module = import_file(os.path.join(srcdir, 'frozen', 'version.py'))
    # tmpdir is not a git checkout, so the dev string stays bare
    assert module.version == '1.1.dev'
    assert module.githash == ''
    assert hasattr(module, 'get_git_devstr')


def test_git_devstr_outside_repository(tmpdir):
    assert get_git_devstr(show_warning=False, path=str(tmpdir)) == ''
    assert get_git_devstr(sha=True, show_warning=False,
                          path=str(tmpdir)) == ''
    assert update_git_devstr('2.0.dev', path=str(tmpdir)) == '2.0.dev'
    assert update_git_devstr('2.0') == '2.0'


def test_write_if_different(tmpdir):
    path = str(tmpdir.join('data.txt'))
    assert write_if_different(path, b'abc')
    assert not write_if_different(path, b'abc')
    assert write_if_different(path, b'abd')
    with open(path, 'rb') as fd:
        assert fd.read() == b'abd'
    with pytest.raises(TypeError):
        write_if_different(path, 'text')
