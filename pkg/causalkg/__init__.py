#!/usr/bin/env python
# -*- coding: utf-8 -*-
#    
#    CAUSALKG -- causal knowledge graphs from causal Bayesian networks,
#                with exact effects, Turtle-star output and a query language
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
from __future__ import print_function
from os.path import dirname

from clu.version import read_version_file, VersionInfo

# Embedded project metadata:
__version__ = read_version_file(dirname(__file__))
__title__ = 'causalkg'
__license__ = 'MIT'

# The CLU project version:
version_info = VersionInfo(__version__)

# The everyday API, one name per operation:
from causalkg.network.model import Variable, CptRow, Cpt, CausalBayesianNetwork
from causalkg.network.validation import validate
from causalkg.network.inference import Engine, query, joint_probability
from causalkg.network.sampling import sample, fit_cpts
from causalkg.network.modelfile import read_model, write_model
from causalkg.causal.intervention import do_transform, interventional_query
from causalkg.causal.mediation import (EffectSpec, decompose, total_causal_effect,
                                       natural_direct_effect, natural_indirect_effect)
from causalkg.causal.attribution import pn_bounds, ps_bounds, pns_bounds
from causalkg.ontology.roles import read_roles, validate_roles
from causalkg.graph.knowledge import build_kg, kg_diff
from causalkg.graph.turtlestar import serialize, parse
from causalkg.query.parser import parse_query
from causalkg.query.evaluation import evaluate
from causalkg.query.explanation import explain

# module exports:
__all__ = ('__version__', 'version_info', '__title__', '__license__',
           'Variable', 'CptRow', 'Cpt', 'CausalBayesianNetwork',
           'validate', 'Engine', 'query', 'joint_probability',
           'sample', 'fit_cpts', 'read_model', 'write_model',
           'do_transform', 'interventional_query',
           'EffectSpec', 'decompose', 'total_causal_effect',
           'natural_direct_effect', 'natural_indirect_effect',
           'pn_bounds', 'ps_bounds', 'pns_bounds',
           'read_roles', 'validate_roles', 'build_kg', 'kg_diff',
           'serialize', 'parse', 'parse_query', 'evaluate', 'explain')

__dir__ = lambda: list(__all__)
