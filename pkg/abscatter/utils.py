# Licensed under a 3-clause BSD style license - see LICENSE.rst

import importlib.util
import os


def write_if_different(filename, data):
    """Write ``data`` to ``filename``, if the content of the file is different.

    Parameters
    ----------
    filename : str
        The file name to be written to.
    data : bytes
        The data to be written to ``filename``.

    Returns
    -------
    written : bool
        False when the file already held exactly ``data``.
    """

    if not isinstance(data, bytes):
        raise TypeError('write_if_different needs bytes, got {0}'.format(
            type(data).__name__))

    if os.path.exists(filename):
        with open(filename, 'rb') as fd:
            if fd.read() == data:
                return False

    with open(filename, 'wb') as fd:
        fd.write(data)
    return True


def import_file(filename, name=None):
    """
    Import a module from a single file without importing the package it
    lives in.

    The module is not registered in `sys.modules`, so repeated calls always
    read the file afresh.
    """

    if name is None:
        stem = os.path.splitext(os.path.basename(filename))[0]
        name = '_abscatter_file_' + stem
    spec = importlib.util.spec_from_file_location(name, filename)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module
