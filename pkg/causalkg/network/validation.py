#!/usr/bin/env python
# encoding: utf-8
"""
network/validation.py

Validation reports. Problems with a candidate model -- or with a role
mapping, q.v. `causalkg.ontology.roles` -- are findings in a report,
never exceptions: a report with zero findings means every invariant holds.
"""
from __future__ import print_function

import itertools
import math
import networkx

from typing import NamedTuple, Optional, Tuple

from causalkg.constants import TOLERANCE
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

@export
class Finding(NamedTuple):

    kind: str
    message: str
    variable: Optional[str] = None
    row: Optional[Tuple] = None

    def __str__(self):
        return self.message

@export
class ValidationReport(object):

    """ An ordered, immutable collection of findings """
    __slots__ = ('findings',)

    def __init__(self, findings=()):
        self.findings = tuple(findings)

    @property
    def ok(self):
        return len(self.findings) == 0

    @property
    def kinds(self):
        return tuple(finding.kind for finding in self.findings)

    def of_kind(self, kind):
        return tuple(finding for finding in self.findings if finding.kind == kind)

    def __len__(self):
        return len(self.findings)

    def __iter__(self):
        yield from self.findings

    def __getitem__(self, idx):
        return self.findings[idx]

    def __eq__(self, other):
        if not isinstance(other, ValidationReport):
            return NotImplemented
        return self.findings == other.findings

    def __add__(self, other):
        return type(self)(self.findings + tuple(other))

    def __str__(self):
        return "\n".join(str(finding) for finding in self.findings)

    def __repr__(self):
        return "%s(%d findings)" % (type(self).__name__, len(self))

def describe_given(parents, given):
    return ", ".join(f"{parent}={state}" for parent, state in zip(parents, given))

def variable_findings(model):
    seen = set()
    for variable in model.variables:
        name = variable.name
        if name in seen:
            yield Finding('variable', f"variable {name}: declared more than once", name)
            continue
        seen.add(name)
        if len(variable.states) < 2:
            yield Finding('variable', f"variable {name}: needs at least two states", name)
        if len(set(variable.states)) != len(variable.states):
            yield Finding('variable', f"variable {name}: state labels are not unique", name)
        if variable.values is not None:
            if len(variable.values) != len(variable.states):
                yield Finding('variable', f"variable {name}: {len(variable.values)} values "
                                          f"for {len(variable.states)} states", name)
            elif not all(math.isfinite(value) for value in variable.values):
                yield Finding('variable', f"variable {name}: state values must be finite", name)
        if len(set(variable.parents)) != len(variable.parents):
            yield Finding('variable', f"variable {name}: parent listed twice", name)
        for parent in variable.parents:
            if parent not in model.index:
                yield Finding('variable', f"variable {name}: unknown parent {parent}", name)

def cycle_findings(model):
    graph = model.graph
    for component in networkx.strongly_connected_components(graph):
        source = min(component, key=model.order.get)
        if len(component) == 1 and not graph.has_edge(source, source):
            continue
        edges = networkx.find_cycle(graph.subgraph(component), source=source)
        path = [edges[0][0]] + [edge[1] for edge in edges]
        yield Finding('cycle', "cycle: " + "→".join(path), source)

def row_problems(variable, parents, row):
    """ Every problem with one CPT row, as a list of phrases """
    problems = []
    if len(row.given) != len(variable.parents):
        problems.append(f"binds {len(row.given)} of {len(variable.parents)} parents")
    else:
        for parent, state in zip(parents, row.given):
            if parent is not None and state not in parent.states:
                problems.append(f"unknown state {state} for parent {parent.name}")
    if len(row.dist) != variable.cardinality:
        problems.append(f"has {len(row.dist)} entries for {variable.cardinality} states")
    if not all(math.isfinite(p) and 0.0 <= p <= 1.0 for p in row.dist):
        problems.append("has entries outside [0, 1]")
    total = math.fsum(row.dist)
    if not abs(total - 1.0) < TOLERANCE:
        problems.append(f"sums to {total!r}")
    return problems

def cpt_findings(model):
    owners = set()
    for cpt in model.cpts:
        if cpt.owner not in model.index:
            yield Finding('cpt', f"cpt {cpt.owner}: no such variable", cpt.owner)
            continue
        if cpt.owner in owners:
            yield Finding('cpt', f"cpt {cpt.owner}: more than one CPT", cpt.owner)
            continue
        owners.add(cpt.owner)

    for variable in model.index.values():
        name = variable.name
        cpt = model.cpt_index.get(name)
        if cpt is None:
            yield Finding('cpt', f"cpt {name}: missing", name)
            continue
        parents = [model.index.get(parent) for parent in variable.parents]
        seen = set()
        for row in cpt.rows:
            given = describe_given(variable.parents, row.given)
            problems = row_problems(variable, parents, row)
            if problems:
                yield Finding('cpt', f"cpt {name} row ({given}): " + "; ".join(problems),
                              name, row.given)
            elif row.given in seen:
                yield Finding('cpt', f"cpt {name} row ({given}): duplicate row",
                              name, row.given)
            seen.add(row.given)
        if any(parent is None for parent in parents):
            continue
        for given in itertools.product(*(parent.states for parent in parents)):
            if given not in seen:
                yield Finding('cpt', f"cpt {name} row ({describe_given(variable.parents, given)}): "
                                      "missing", name, given)

@export
def validate(model, cpts=True):
    """ Check every invariant of a candidate model. With `cpts=False` only
        the structure is checked -- the variables and their graph -- as
        befits a skeleton awaiting `fit_cpts(…)`.
    """
    findings = list(variable_findings(model))
    findings.extend(cycle_findings(model))
    if cpts:
        findings.extend(cpt_findings(model))
    return ValidationReport(findings)

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
