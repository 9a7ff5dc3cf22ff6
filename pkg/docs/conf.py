# -*- coding: utf-8 -*-
# Licensed under a 3-clause BSD style license - see LICENSE.rst
#
# Sphinx configuration for the abscatter documentation.
#
# Build with ``sphinx-build docs docs/_build/html``.

import datetime

from abscatter import __version__


# -- General configuration ----------------------------------------------------

needs_sphinx = '1.8'

project = 'abscatter'
author = 'The abscatter Developers'
copyright = '{0}, {1}'.format(datetime.datetime.now().year, author)

version = __version__.split('.dev')[0]
release = __version__

intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'mpmath': ('https://mpmath.org/doc/current/', None),
    }

exclude_patterns = ['_build']

source_suffix = '.rst'
master_doc = 'index'

# The reST default role (used for this markup: `text`) to use for all
# documents; objects are looked up across every intersphinx target.
default_role = 'obj'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.doctest',
    'numpydoc',
    'sphinx_automodapi.automodapi',
    ]

# Don't show summaries of the members in each class along with the
# class' docstring
numpydoc_show_class_members = False

autosummary_generate = True

automodapi_toctreedirnm = 'api'


# -- Options for HTML output --------------------------------------------------

html_theme = 'alabaster'
html_last_updated_fmt = '%d %b %Y'

linkcheck_timeout = 60
