#!/usr/bin/env python
# encoding: utf-8
"""
query/ast.py

Parsed queries. Parsing never consults a model: names are bound to
variables and states only when a query is evaluated, by `evaluate(…)`.
"""
from __future__ import print_function

import logging

from typing import NamedTuple

from causalkg.abc import Query
from causalkg.errors import MissingMediator, OverlappingQuery
from causalkg.causal.attribution import pn_bounds, ps_bounds, pns_bounds
from causalkg.causal.intervention import interventional_query
from causalkg.causal.mediation import EffectSpec, decompose
from causalkg.network.inference import query
from causalkg.query.evaluation import (Rung, ProbabilityResult,
                                       EffectResult, IntervalResult)
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

logger = logging.getLogger(__name__)

EFFECT_KINDS = ('TCE', 'NDE', 'NIE')
NECESSITY_KINDS = ('PN', 'PS', 'PNS')

@export
class Event(NamedTuple):

    variable: str
    state: str

    def __str__(self):
        return f"{self.variable}={self.state}"

def bind(events, where):
    """ Turn events into an assignment, refusing conflicting bindings """
    out = {}
    for variable, state in events:
        if out.get(variable, state) != state:
            raise OverlappingQuery(f"{variable} bound to both {out[variable]} "
                                   f"and {state} in {where}")
        out[variable] = state
    return out

def listing(events):
    return ", ".join(str(event) for event in events)

@export
class Associational(Query):

    """ P(targets | evidence) """
    __slots__ = ('targets', 'evidence')

    def __init__(self, targets, evidence=()):
        self.targets = tuple(Event(*event) for event in targets)
        self.evidence = tuple(Event(*event) for event in evidence)

    @property
    def rung(self):
        return Rung.ASSOCIATIONAL

    def variables(self):
        return tuple(event.variable for event in self.targets + self.evidence)

    def to_string(self):
        if not self.evidence:
            return f"P({listing(self.targets)})"
        return f"P({listing(self.targets)} | {listing(self.evidence)})"

    def evaluate(self, model, kg=None, engine=None):
        event = bind(self.targets, "targets")
        evidence = bind(self.evidence, "evidence")
        model.check_assignment(event)
        distribution = query(model, event.keys(), evidence, engine=engine)
        return ProbabilityResult(self, self.rung, distribution, event)

    def __repr__(self):
        return f"{type(self).__name__}({self.to_string()})"

@export
class Interventional(Associational):

    """ P(targets | do(interventions), evidence) """
    __slots__ = ('interventions',)

    def __init__(self, targets, interventions, evidence=()):
        super(Interventional, self).__init__(targets, evidence)
        self.interventions = tuple(Event(*event) for event in interventions)

    @property
    def rung(self):
        return Rung.INTERVENTIONAL

    def variables(self):
        return super(Interventional, self).variables() + \
               tuple(event.variable for event in self.interventions)

    def to_string(self):
        conditions = [f"do({listing(self.interventions)})"]
        if self.evidence:
            conditions.append(listing(self.evidence))
        return f"P({listing(self.targets)} | {', '.join(conditions)})"

    def evaluate(self, model, kg=None, engine=None):
        event = bind(self.targets, "targets")
        do_set = bind(self.interventions, "interventions")
        evidence = bind(self.evidence, "evidence")
        model.check_assignment(event)
        distribution = interventional_query(model, event.keys(), do_set,
                                            evidence, engine=engine)
        return ProbabilityResult(self, self.rung, distribution, event)

@export
class Effect(Query):

    """ TCE, NDE or NIE of a treatment on an outcome """
    __slots__ = ('kind', 'spec')

    def __init__(self, kind, spec):
        if kind not in EFFECT_KINDS:
            raise ValueError(f"unknown effect kind {kind!r}")
        self.kind = kind
        self.spec = spec

    @property
    def rung(self):
        if self.kind == 'TCE':
            return Rung.INTERVENTIONAL
        return Rung.COUNTERFACTUAL

    def variables(self):
        return tuple(name for name in (self.spec.treatment,
                                       self.spec.outcome,
                                       self.spec.mediator) if name is not None)

    def to_string(self):
        out = f"{self.kind}({self.spec.treatment} -> {self.spec.outcome}"
        if self.spec.mediator is not None:
            out += f" | via {self.spec.mediator}"
        if self.spec.t0 is not None:
            out += f", t0={self.spec.t0}, t1={self.spec.t1}"
        return out + ")"

    def evaluate(self, model, kg=None, engine=None):
        if self.kind != 'TCE' and self.spec.mediator is None:
            raise MissingMediator(f"{self.kind} needs a mediator: "
                                  f"{self.kind}({self.spec.treatment} -> "
                                  f"{self.spec.outcome} | via …)")
        report = decompose(model, self.spec, engine=engine)
        return EffectResult(self, self.rung, report, self.kind)

    def __repr__(self):
        return f"{type(self).__name__}({self.to_string()})"

@export
class Necessity(Query):

    """ PN, PS or PNS bounds for a cause event and an outcome event """
    __slots__ = ('kind', 'cause', 'outcome')

    bounds = { 'PN'     : pn_bounds,
               'PS'     : ps_bounds,
               'PNS'    : pns_bounds }

    def __init__(self, cause, outcome, kind='PN'):
        if kind not in NECESSITY_KINDS:
            raise ValueError(f"unknown attribution kind {kind!r}")
        self.kind = kind
        self.cause = Event(*cause)
        self.outcome = Event(*outcome)

    @property
    def rung(self):
        return Rung.COUNTERFACTUAL

    def variables(self):
        return (self.cause.variable, self.outcome.variable)

    def to_string(self):
        return f"{self.kind}({self.cause} -> {self.outcome})"

    def evaluate(self, model, kg=None, engine=None):
        interval = type(self).bounds[self.kind](model, self.cause, self.outcome, engine=engine)
        return IntervalResult(self, self.rung, interval, self.kind)

    def __repr__(self):
        return f"{type(self).__name__}({self.to_string()})"

@export
def effect(kind, treatment, outcome, mediator=None, t0=None, t1=None):
    return Effect(kind, EffectSpec(treatment, outcome, mediator, t0, t1))

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
