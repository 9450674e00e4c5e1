#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    CAUSALKG -- causal knowledge graphs from causal Bayesian networks
#
#    Permission is hereby granted, free of charge, to any person obtaining a copy
#    of this software and associated documentation files (the "Software"), to deal
#    in the Software without restriction, including without limitation the rights
#    to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
#    copies of the Software, and to permit persons to whom the Software is
#    furnished to do so, subject to the following conditions:
#
#    The above copyright notice and this permission notice shall be included in all
#    copies or substantial portions of the Software.
#
#    THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#    IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#    FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#    AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#    LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
#    OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
#    SOFTWARE.
#
''' Causal knowledge graphs: causal Bayesian networks, interventions, mediation, and explanation '''

from __future__ import print_function
import os

from setuptools import setup, find_packages

# CONSTANTS
PROJECT_NAME = 'causalkg'

KEYWORDS = (PROJECT_NAME,
            'causality', 'causal inference',
            'Bayesian network', 'do-calculus',
            'mediation', 'counterfactual',
            'knowledge graph', 'RDF-star', 'Turtle-star',
            'explainability',
            'NumPy', 'NetworkX', 'rdflib', 'pandas')

# PROJECT DIRECTORY
CWD = os.path.dirname(__file__)
BASE_PATH = os.path.join(
            os.path.abspath(CWD), PROJECT_NAME)

def project_content(*filenames):
    import io
    filepath = os.path.join(CWD, *filenames)
    if not os.path.isfile(filepath):
        raise IOError("""File %s doesn't exist""" % filepath)
    out = ''
    with io.open(filepath, 'r', encoding='utf-8') as handle:
        out += handle.read()
    if not out:
        raise ValueError("""File %s couldn't be read""" % os.path.sep.join(filenames))
    return out.strip()

# PROJECT VERSION & METADATA
__version__ = "<undefined>"
try:
    exec(compile(
        open(os.path.join(BASE_PATH,
            '__version__.py')).read(),
            '__version__.py', 'exec'))
except:
    print("ERROR COMPILING __version__.py")
    __version__ = '0.1.0'

# PROJECT DESCRIPTION
LONG_DESCRIPTION = project_content('ABOUT.md')

# SOFTWARE LICENSE
LICENSE = 'MIT'

# REQUIRED INSTALLATION DEPENDENCIES
INSTALL_REQUIRES = project_content('requirements', 'install.txt').splitlines()

# PYPI PROJECT CLASSIFIERS
CLASSIFIERS = [
    'Development Status :: 3 - Alpha',
    'License :: OSI Approved :: MIT License',
    'Intended Audience :: Developers',
    'Intended Audience :: Science/Research',
    'Operating System :: OS Independent',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Programming Language :: Python :: 3.8',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Programming Language :: Python :: 3.11',
    'Topic :: Scientific/Engineering :: Artificial Intelligence']

# THE CALL TO `setup(…)`
setup(
    name=PROJECT_NAME,

    version=__version__,
    description=__doc__.strip(),
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",

    keywords=" ".join(KEYWORDS),
    license=LICENSE, platforms=['any'],
    classifiers=CLASSIFIERS,

    packages=find_packages(exclude=('tests', 'tests.*', 'examples', 'examples.*')),
    package_data={ '' : ['*.*'] },
    include_package_data=True,
    zip_safe=False,
    python_requires='>=3.8',

    install_requires=INSTALL_REQUIRES,
    entry_points={
        'console_scripts' : [
            'causalkg = causalkg.cli:main'
        ]
    },
)
