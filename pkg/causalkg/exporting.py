#!/usr/bin/env python
# encoding: utf-8
"""
exporting.py

The CausalKG exporter. Every module registers its public names with
`@export` (or `export(value, name='NAME')`) and finishes by assigning
`__all__` and `__dir__` from `exporter.all_and_dir()`; names registered
here are also reachable through clu’s exporter registry under the
“causalkg” application name.
"""
from __future__ import print_function

import os

from clu.exporting import ExporterBase

# Module paths are qualified relative to the directory holding `causalkg/`:
basepath = os.path.dirname(
           os.path.dirname(os.path.abspath(__file__)))

class Exporter(ExporterBase, basepath=basepath, appname="causalkg"):
    """ Per-module export registry for the causalkg package """
    pass

exporter = Exporter(path=__file__)
export = exporter.decorator()

export(Exporter)

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
