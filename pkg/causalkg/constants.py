#!/usr/bin/env python
# encoding: utf-8
"""
constants.py

Process-wide settings for causalkg. Values are read once, at import;
the command-line interface overrides the tunable ones per invocation.
"""
from __future__ import print_function

from clu.constants.consts import DEBUG, ENCODING
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

# Numeric tolerance for CPT row sums, decomposition checks and oracle comparisons:
TOLERANCE = 1e-9

DEFAULT_ALPHA = 1.0
DEFAULT_SEED = 42
DEFAULT_ENGINE = 've'
DECIMALS = 4

# The causal ontology namespace -- versioned, closed vocabulary:
CKG_PREFIX = 'ckg'
CKG_NAMESPACE = 'https://w3id.org/causalkg/ontology/v1#'

# Variables without an IRI of their own are minted under this base:
DEFAULT_BASE_IRI = 'urn:causalkg:variable:'

# Embedded triples nested deeper than this are rejected by the parser:
MAX_NESTING = 64

NO_COLOR_VARIABLE = 'CAUSALKG_NO_COLOR'

export(DEBUG,               name='DEBUG')
export(ENCODING,            name='ENCODING')
export(TOLERANCE,           name='TOLERANCE')
export(DEFAULT_ALPHA,       name='DEFAULT_ALPHA')
export(DEFAULT_SEED,        name='DEFAULT_SEED')
export(DEFAULT_ENGINE,      name='DEFAULT_ENGINE')
export(DECIMALS,            name='DECIMALS')
export(CKG_PREFIX,          name='CKG_PREFIX')
export(CKG_NAMESPACE,       name='CKG_NAMESPACE')
export(DEFAULT_BASE_IRI,    name='DEFAULT_BASE_IRI')
export(MAX_NESTING,         name='MAX_NESTING')
export(NO_COLOR_VARIABLE,   name='NO_COLOR_VARIABLE')

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
