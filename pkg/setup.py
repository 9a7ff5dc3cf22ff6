#!/usr/bin/env python
# Licensed under a 3-clause BSD style license - see LICENSE.rst

import os

from setuptools import setup, find_packages

from abscatter.version_helpers import generate_version_py

NAME = 'abscatter'
VERSION = '0.1.dev'
RELEASE = 'dev' not in VERSION

generate_version_py(NAME, VERSION, RELEASE,
                    srcdir=os.path.dirname(os.path.abspath(__file__)))

# Use the updated version including the git rev count
from abscatter.version import version as VERSION

with open('README.rst') as fd:
    LONG_DESCRIPTION = fd.read()

setup(
    name=NAME,
    version=VERSION,
    description='Aharonov-Bohm scattering off a finite solenoid with '
                'Dirichlet, Neumann and Robin boundary conditions',
    long_description=LONG_DESCRIPTION,
    author='The abscatter Developers',
    license='BSD',
    packages=find_packages(exclude=['docs']),
    python_requires='>=3.7',
    install_requires=['numpy>=1.17', 'scipy>=1.4', 'mpmath>=1.1'],
    extras_require={
        'test': ['pytest>=4.6'],
        'docs': ['sphinx>=1.8', 'numpydoc', 'sphinx-automodapi'],
    },
    entry_points={
        'console_scripts': ['abscatter = abscatter.cli:main'],
    },
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    zip_safe=False,
)
