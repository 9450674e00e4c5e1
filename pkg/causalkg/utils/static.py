#!/usr/bin/env python
# encoding: utf-8
"""
utils/static.py

Locate the data files shipped next to the package: the golden values and
sample documents under “tests/data”. Each namespace knows its data
directory and can hand back paths, listings and decoded JSON documents.
"""
from __future__ import print_function

import json
import os

from causalkg.constants import ENCODING
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

projectdir = os.path.dirname(
             os.path.dirname(
             os.path.dirname(os.path.abspath(__file__))))
namespaces = {}

def read_json(path):
    with open(path, 'r', encoding=ENCODING) as handle:
        return json.load(handle)

@export
def static_namespace(name):
    """ Return the namespace for the top-level project directory `name`,
        creating it on first use. Its callables resolve against the
        directory’s “data” subdirectory:

            ns.path('goldens.json')   → absolute path
            ns.listfiles()            → sorted file names
            ns.json('goldens.json')   → decoded document
    """
    if name in namespaces:
        return namespaces[name]
    from clu.typespace.namespace import SimpleNamespace as Namespace
    ns = Namespace()
    ns.name = str(name)
    ns.data = os.path.join(projectdir, ns.name, 'data')
    ns.path = lambda *parts: os.path.join(ns.data, *parts)
    ns.listfiles = lambda *parts: sorted(os.listdir(ns.path(*parts)))
    ns.json = lambda *parts: read_json(ns.path(*parts))
    namespaces[name] = ns
    return ns

tests = static_namespace('tests')

export(projectdir,      name='projectdir')
export(tests,           name='tests',       doc="tests → static namespace of the CausalKG test data (goldens)")

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
