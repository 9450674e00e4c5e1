#!/usr/bin/env python
# encoding: utf-8
"""
network/modelfile.py

Model and dataset files. A model is a JSON document:

    { "variables": [ { "name": "A",
                       "states": ["false", "true"],
                       "values": [0, 1],
                       "parents": [],
                       "cpt": [ { "given": {}, "dist": { "false": 0.4, "true": 0.6 } } ] },
                     … ] }

… where "values" is optional, and "cpt" may be left out of every
variable to describe a skeleton awaiting `fit_cpts(…)`. A dataset is a
UTF-8 CSV file with a header row of variable names and LF line endings.

Files that cannot be read, or do not have this shape, raise FormatError;
a model that reads fine but breaks an invariant is left for `validate(…)`.
"""
from __future__ import print_function

import json
import logging
import numbers
import os
import pandas

from causalkg.constants import ENCODING
from causalkg.errors import FormatError
from causalkg.network.model import Variable, CptRow, Cpt, CausalBayesianNetwork
from causalkg.network.sampling import Dataset
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

logger = logging.getLogger(__name__)

@export
def load_json(path):
    """ Read a JSON document, raising FormatError for any failure """
    try:
        with open(path, 'r', encoding=ENCODING) as handle:
            return json.load(handle)
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}")

@export
def dump_json(document, path):
    text = json.dumps(document, indent=2, ensure_ascii=False) + "\n"
    try:
        with open(path, 'w', encoding=ENCODING, newline="\n") as handle:
            handle.write(text)
    except OSError as exc:
        raise FormatError(f"cannot write {path}: {exc}")
    return path

def expect(condition, message):
    if not condition:
        raise FormatError(message)

def is_string_list(value):
    return isinstance(value, list) and all(isinstance(item, str) for item in value)

def is_number(value):
    return isinstance(value, numbers.Real) and not isinstance(value, bool)

def read_variable(entry, position):
    expect(isinstance(entry, dict), f"variable #{position}: not an object")
    name = entry.get('name')
    expect(isinstance(name, str) and name, f"variable #{position}: “name” must be a string")
    states = entry.get('states')
    expect(is_string_list(states), f"variable {name}: “states” must be a list of strings")
    values = entry.get('values')
    if values is not None:
        expect(isinstance(values, list) and all(is_number(value) for value in values),
               f"variable {name}: “values” must be a list of numbers")
        values = tuple(float(value) for value in values)
    parents = entry.get('parents', [])
    expect(is_string_list(parents), f"variable {name}: “parents” must be a list of names")
    return Variable(name, tuple(states), values, tuple(parents))

def read_cpt(variable, rows):
    expect(isinstance(rows, list), f"variable {variable.name}: “cpt” must be a list")
    out = []
    for position, row in enumerate(rows, start=1):
        where = f"variable {variable.name}, cpt row #{position}"
        expect(isinstance(row, dict), f"{where}: not an object")
        given = row.get('given', {})
        dist = row.get('dist')
        expect(isinstance(given, dict) and all(isinstance(v, str) for v in given.values()),
               f"{where}: “given” must map parents to states")
        unexpected = sorted(set(given) - set(variable.parents))
        expect(not unexpected, f"{where}: “given” binds non-parents {', '.join(unexpected)}")
        expect(isinstance(dist, dict) and all(is_number(p) for p in dist.values()),
               f"{where}: “dist” must map states to probabilities")
        unexpected = sorted(set(dist) - set(variable.states))
        expect(not unexpected, f"{where}: “dist” names undeclared states {', '.join(unexpected)}")
        missing = [state for state in variable.states if state not in dist]
        expect(not missing, f"{where}: “dist” leaves out {', '.join(missing)}")
        out.append(CptRow(tuple(given.get(parent) for parent in variable.parents),
                          tuple(float(dist[state]) for state in variable.states)))
    return Cpt(variable.name, tuple(out))

@export
def network_from_document(document):
    """ Build a (possibly invalid, possibly skeletal) model from a
        parsed JSON model document
    """
    expect(isinstance(document, dict), "model document must be a JSON object")
    entries = document.get('variables')
    expect(isinstance(entries, list), "model document lacks a “variables” list")
    variables, cpts = [], []
    for position, entry in enumerate(entries, start=1):
        variable = read_variable(entry, position)
        variables.append(variable)
        if 'cpt' in entry:
            cpts.append(read_cpt(variable, entry['cpt']))
    return CausalBayesianNetwork(tuple(variables), tuple(cpts))

@export
def network_to_document(model):
    out = []
    for variable in model.variables:
        entry = { 'name'    : variable.name,
                  'states'  : list(variable.states) }
        if variable.values is not None:
            entry['values'] = list(variable.values)
        entry['parents'] = list(variable.parents)
        cpt = model.cpt_index.get(variable.name)
        if cpt is not None:
            entry['cpt'] = [{ 'given' : { parent : state for parent, state \
                                          in zip(variable.parents, row.given) \
                                          if state is not None },
                              'dist'  : dict(zip(variable.states, row.dist)) } \
                            for row in cpt.rows]
        out.append(entry)
    return { 'variables' : out }

@export
def read_model(path):
    model = network_from_document(load_json(path))
    logger.debug("read %r from %s", model, path)
    return model

@export
def write_model(model, path):
    return dump_json(network_to_document(model), path)

@export
def read_dataset(path):
    """ Read a CSV dataset; every cell is kept as a string label """
    if not os.path.isfile(path):
        raise FormatError(f"cannot read {path}: no such file")
    try:
        frame = pandas.read_csv(path, dtype=str, encoding=ENCODING,
                                keep_default_na=False, na_filter=False)
    except pandas.errors.EmptyDataError:
        raise FormatError(f"{path}: empty file, expected a header row")
    except (OSError, UnicodeDecodeError, pandas.errors.ParserError) as exc:
        raise FormatError(f"cannot read {path}: {exc}")
    return Dataset(frame)

@export
def write_dataset(dataset, path):
    try:
        dataset.frame.to_csv(path, index=False, encoding=ENCODING,
                                   lineterminator="\n")
    except OSError as exc:
        raise FormatError(f"cannot write {path}: {exc}")
    return path

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
