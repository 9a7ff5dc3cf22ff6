# Licensed under a 3-clause BSD style license - see LICENSE.rst

"""
Generation of the frozen ``version.py`` module.

Within the generated ``abscatter.version`` module, the `major`, `minor` and
`bugfix` variables hold the respective parts of the version number (bugfix is
0 if absent), `release` is True for a release and False for a development
version, and `githash` is the commit the package was built from (empty
outside git).  For the version string itself use::

    from abscatter import __version__
"""

import datetime
import inspect
import logging
import os

from . import git_helpers
from .utils import import_file, write_if_different


log = logging.getLogger(__name__)


def _version_split(version):
    """
    Split a version string into major, minor, and bugfix numbers (with bugfix
    optional, defaulting to 0).
    """

    for prerel in ('.dev', 'a', 'b', 'rc'):
        if prerel in version:
            version = version.split(prerel)[0]

    versplit = version.split('.')
    major = int(versplit[0])
    minor = int(versplit[1])
    bugfix = 0 if len(versplit) < 3 else int(versplit[2])
    return major, minor, bugfix


_FROZEN_VERSION_PY_TEMPLATE = """
# Autogenerated by {packagename}'s setup.py on {timestamp}

{header}

major = {major}
minor = {minor}
bugfix = {bugfix}

release = {rel}
"""[1:]


_FROZEN_VERSION_PY_WITH_GIT_HEADER = """
{git_helpers}

_last_generated_version = {verstr!r}

version = update_git_devstr(_last_generated_version)
githash = get_git_devstr(sha=True, show_warning=False)
"""[1:]


_FROZEN_VERSION_PY_PLAIN_HEADER = """
_last_generated_version = {verstr!r}

version = _last_generated_version
githash = ''
"""[1:]


def _git_helpers_source():
    try:
        source_lines = inspect.getsource(git_helpers).splitlines()
    except (OSError, TypeError):
        return None

    for idx, line in enumerate(source_lines):
        if line.startswith('# BEGIN'):
            return '\n'.join(source_lines[idx + 1:])
    return None


def _get_version_py_str(packagename, version, release, uses_git=True):
    timestamp = str(datetime.datetime.now())
    major, minor, bugfix = _version_split(version)

    header = None
    if uses_git:
        source = _git_helpers_source()
        if source:
            header = _FROZEN_VERSION_PY_WITH_GIT_HEADER.format(
                git_helpers=source, verstr=version)
        else:
            log.warning('Cannot get source code for abscatter.git_helpers; '
                        'git support disabled.')
    if header is None:
        header = _FROZEN_VERSION_PY_PLAIN_HEADER.format(verstr=version)

    return _FROZEN_VERSION_PY_TEMPLATE.format(packagename=packagename,
                                              timestamp=timestamp,
                                              header=header,
                                              major=major,
                                              minor=minor,
                                              bugfix=bugfix,
                                              rel=release)


def generate_version_py(packagename, version, release=None, uses_git=True,
                        srcdir='.'):
    """
    Regenerate ``<srcdir>/<packagename>/version.py`` if the frozen version or
    release flag changed.

    Returns
    -------
    written : bool
        True if the file was (re)written.
    """

    version_py = os.path.join(srcdir, packagename, 'version.py')

    last_generated_version = None
    current_release = None
    if os.path.exists(version_py):
        try:
            version_module = import_file(version_py)
        except Exception as exc:
            log.warning('Ignoring unreadable {0}: {1}'.format(version_py,
                                                              exc))
        else:
            last_generated_version = getattr(
                version_module, '_last_generated_version',
                getattr(version_module, 'version', None))
            current_release = getattr(version_module, 'release', None)

    if release is None:
        # Keep whatever the current value is, if it exists
        release = bool(current_release)

    if last_generated_version == version and current_release == release:
        return False

    log.info('Freezing version number to {0}'.format(version_py))
    content = _get_version_py_str(packagename, version, release,
                                  uses_git=uses_git)
    return write_if_different(version_py, content.encode('utf-8'))
