# Autogenerated by abscatter's setup.py on 2026-10-19 14:22:52.320617



import os
import subprocess
import warnings


def _run_git(args, path):
    """
    Run ``git <args>`` in ``path`` and return ``(returncode, stdout,
    stderr)`` with both streams decoded.
    """

    proc = subprocess.run(['git'] + list(args), cwd=path,
                          stdin=subprocess.DEVNULL, stdout=subprocess.PIPE,
                          stderr=subprocess.PIPE)
    return (proc.returncode, proc.stdout.decode('utf-8', 'replace'),
            proc.stderr.decode('utf-8', 'replace'))


def update_git_devstr(version, path=None):
    """
    Append the revision count to a ``.dev`` version when running from a git
    checkout.

    Release versions, and anything imported from outside a checkout, are
    returned unchanged.
    """

    if '.dev' not in version:
        return version

    try:
        # '' when not in git
        sha = get_git_devstr(sha=True, show_warning=False, path=path)
    except OSError:
        return version

    if not sha:
        return version

    base = version.split('.dev', 1)[0]
    return base + '.dev' + get_git_devstr(sha=False, show_warning=False,
                                          path=path)


def get_git_devstr(sha=False, show_warning=True, path=None):
    """
    Determine the revision of the enclosing git repository.

    Parameters
    ----------
    sha : bool
        If True return the full SHA1 of ``HEAD``; otherwise return the number
        of commits reachable from ``HEAD``.
    show_warning : bool
        If True, warn when git is missing or fails.
    path : str or None
        Directory (or file inside it) to look in.  Defaults to the directory
        of this module.

    Returns
    -------
    devstr : str
        The revision count or hash, or an empty string if it could not be
        determined.
    """

    if path is None:
        path = __file__
    if not os.path.isdir(path):
        path = os.path.abspath(os.path.dirname(path))

    args = ['rev-parse', 'HEAD'] if sha else ['rev-list', '--count', 'HEAD']

    try:
        returncode, stdout, stderr = _run_git(args, path)
    except OSError as exc:
        if show_warning:
            warnings.warn('Error running git: {0}'.format(exc))
        return ''

    if returncode == 128:
        if show_warning:
            warnings.warn('No git repository present; using the plain dev '
                          'version.')
        return ''
    elif returncode != 0:
        if show_warning:
            warnings.warn('git failed while determining the revision: '
                          + stderr.strip())
        return ''

    return stdout.strip()[:40]

_last_generated_version = '0.1.dev'

version = update_git_devstr(_last_generated_version)
githash = get_git_devstr(sha=True, show_warning=False)


major = 0
minor = 1
bugfix = 0

release = False
