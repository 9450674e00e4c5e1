#!/usr/bin/env python
# encoding: utf-8
"""
query/evaluation.py

Query results, each tagged with the rung of the explainability ladder it
answers on: associational (statistical explainability), interventional
(context explainability) or counterfactual (domain explainability).
"""
from __future__ import print_function

from enum import unique

from clu.enums import alias, AliasingEnum

from causalkg.constants import DECIMALS
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

@export
@unique
class Rung(AliasingEnum):

    ASSOCIATIONAL       = 'associational'
    INTERVENTIONAL      = 'interventional'
    COUNTERFACTUAL      = 'counterfactual'
    STATISTICAL         = alias(ASSOCIATIONAL)
    CONTEXT             = alias(INTERVENTIONAL)
    DOMAIN              = alias(COUNTERFACTUAL)

    @property
    def explainability(self):
        return { 'associational'    : 'statistical',
                 'interventional'   : 'context',
                 'counterfactual'   : 'domain' }[self.value]

    @property
    def tag(self):
        """ e.g. “statistical (associational)” """
        return f"{self.explainability} ({self.value})"

    def to_string(self):
        return str(self.value)

    def __str__(self):
        return self.to_string()

def fixed(value, decimals=DECIMALS):
    return f"{value:.{decimals}f}"

@export
class QueryResult(object):

    """ Base result: the query answered, and its rung """
    __slots__ = ('query', 'rung')

    def __init__(self, query, rung):
        self.query = query
        self.rung = rung

    @property
    def value(self):
        raise NotImplementedError

    def to_text(self, decimals=DECIMALS):
        return f"{self.query.to_string()} = {fixed(self.value, decimals)}"

    def to_dict(self):
        return { 'query'    : self.query.to_string(),
                 'rung'     : self.rung.to_string(),
                 'value'    : self.value }

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self.to_text())

@export
class ProbabilityResult(QueryResult):

    """ A posterior distribution over the query’s target variables, and the
        probability it gives the targeted event
    """
    __slots__ = ('distribution', 'event')

    def __init__(self, query, rung, distribution, event):
        super(ProbabilityResult, self).__init__(query, rung)
        self.distribution = distribution
        self.event = dict(event)

    @property
    def value(self):
        return self.distribution.probability(self.event)

    def to_dict(self):
        out = super(ProbabilityResult, self).to_dict()
        out['distribution'] = self.distribution.to_dict()
        return out

@export
class EffectResult(QueryResult):

    __slots__ = ('report', 'kind')

    def __init__(self, query, rung, report, kind):
        super(EffectResult, self).__init__(query, rung)
        self.report = report
        self.kind = kind

    @property
    def value(self):
        return getattr(self.report, self.kind.lower())

    @property
    def warnings(self):
        return self.report.warnings

    def to_dict(self):
        out = super(EffectResult, self).to_dict()
        out['report'] = self.report.to_dict()
        return out

@export
class IntervalResult(QueryResult):

    __slots__ = ('interval', 'kind')

    def __init__(self, query, rung, interval, kind):
        super(IntervalResult, self).__init__(query, rung)
        self.interval = interval
        self.kind = kind

    @property
    def value(self):
        return self.interval

    def to_text(self, decimals=DECIMALS):
        return f"{self.query.to_string()} = [{fixed(self.interval.lo, decimals)}, " \
                                           f"{fixed(self.interval.hi, decimals)}]"

    def to_dict(self):
        out = super(IntervalResult, self).to_dict()
        out['value'] = { 'lo' : self.interval.lo, 'hi' : self.interval.hi }
        return out

@export
def evaluate(ast, model, kg=None, engine=None):
    """ Answer a parsed query against `model` """
    return ast.evaluate(model, kg=kg, engine=engine)

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
