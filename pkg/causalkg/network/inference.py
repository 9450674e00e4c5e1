#!/usr/bin/env python
# encoding: utf-8
"""
network/inference.py

Exact inference over a causal Bayesian network: the joint probability
of a full assignment, and posterior distributions computed two ways --
by brute-force enumeration of every completion (the oracle), and by
variable elimination with a min-degree elimination order.
"""
from __future__ import print_function

import itertools
import logging
import math
import networkx
import numpy

from enum import unique
from functools import reduce

from causalkg.abc import Enum
from causalkg.errors import OverlappingQuery, ZeroProbabilityEvidence
from causalkg.network.factor import Factor
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

logger = logging.getLogger(__name__)

@export
class Distribution(object):

    """ A normalized distribution over the joint states of `variables`
        (in model declaration order). `table` has one axis per variable;
        a distribution over no variables is the scalar 1.
    """
    __slots__ = ('variables', 'states', 'table')

    def __init__(self, variables, states, table):
        self.variables = tuple(variables)
        self.states = tuple(tuple(labels) for labels in states)
        self.table = numpy.asarray(table, dtype=float)

    def index(self, assignment):
        return tuple(labels.index(assignment[name]) \
                     for name, labels in zip(self.variables, self.states))

    def probability(self, assignment):
        """ P(assignment), where `assignment` binds a subset of the
            variables (the rest are summed out)
        """
        for name in assignment:
            if name not in self.variables:
                raise KeyError(name)
        marginal = self.marginal(assignment.keys())
        return float(marginal.table[marginal.index(assignment)])

    def __getitem__(self, assignment):
        return self.probability(assignment)

    def marginal(self, names):
        names = set(names)
        axes = tuple(idx for idx, name in enumerate(self.variables) if name not in names)
        keep = [idx for idx, name in enumerate(self.variables) if name in names]
        return type(self)([self.variables[idx] for idx in keep],
                          [self.states[idx] for idx in keep],
                          self.table.sum(axis=axes))

    def items(self):
        """ Iterate (assignment, probability) pairs in table order """
        for combination in itertools.product(*self.states):
            assignment = dict(zip(self.variables, combination))
            yield assignment, float(self.table[self.index(assignment)])

    def expectation(self, name, codings):
        """ E[name], given the numeric value of each of its states """
        marginal = self.marginal((name,))
        return math.fsum(p * value for p, value in zip(marginal.table, codings))

    def total(self):
        return float(self.table.sum())

    def to_dict(self):
        return { ",".join(f"{k}={v}" for k, v in assignment.items()) : p \
                 for assignment, p in self.items() }

    def __eq__(self, other):
        if not isinstance(other, Distribution):
            return NotImplemented
        return self.variables == other.variables and \
               self.states == other.states and \
               numpy.array_equal(self.table, other.table)

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, ", ".join(self.variables))

def prepare(model, targets, evidence):
    """ Check a query against the model; returns (targets, evidence indices) """
    model.require_valid()
    evidence = dict(evidence or {})
    targets = model.ordered(targets)
    indices = model.check_assignment(evidence)
    overlap = set(targets) & set(evidence)
    if overlap:
        raise OverlappingQuery("variables both targeted and observed: %s"
                               % ", ".join(model.ordered(overlap)))
    return targets, indices

@export
def joint_probability(model, assignment):
    """ The product over every variable of its CPT entry at `assignment` """
    model.require_valid()
    indices = model.check_assignment(assignment, complete=True)
    out = 1.0
    for name in model.names:
        variable = model.variable(name)
        index = tuple(indices[parent] for parent in variable.parents) + (indices[name],)
        out *= float(model.table(name)[index])
    return out

@export
def query_enumerate(model, targets, evidence=None):
    """ The exact posterior P(targets | evidence), by summing the joint
        probability of every full assignment consistent with the evidence
    """
    targets, observed = prepare(model, targets, evidence)
    evidence = dict(evidence or {})
    free = [name for name in model.names if name not in evidence]
    states = [model.variable(name).states for name in targets]
    table = numpy.zeros(tuple(len(labels) for labels in states), dtype=float)
    for combination in itertools.product(*(model.variable(name).states for name in free)):
        assignment = dict(evidence)
        assignment.update(zip(free, combination))
        index = tuple(model.variable(name).index(assignment[name]) for name in targets)
        table[index] += joint_probability(model, assignment)
    normalizer = float(table.sum())
    if normalizer <= 0.0:
        raise ZeroProbabilityEvidence("evidence has probability zero: %s" % evidence)
    return Distribution(targets, states, table / normalizer)

@export
def elimination_order(factors, hidden):
    """ Greedy min-degree order for eliminating `hidden` variables,
        on the interaction graph of the factor scopes. Ties go to
        the first of the tied variables in `hidden` order.
    """
    graph = networkx.Graph()
    for factor in factors:
        graph.add_nodes_from(factor.scope)
        graph.add_edges_from(itertools.combinations(factor.scope, 2))
    remaining = [name for name in hidden if name in graph]
    order = []
    while remaining:
        name = min(remaining, key=lambda node: (graph.degree(node), remaining.index(node)))
        neighbors = list(graph.neighbors(name))
        graph.add_edges_from(itertools.combinations(neighbors, 2))
        graph.remove_node(name)
        remaining.remove(name)
        order.append(name)
    return order

@export
def query_ve(model, targets, evidence=None):
    """ The exact posterior P(targets | evidence), by variable elimination """
    targets, observed = prepare(model, targets, evidence)
    factors = [Factor.from_cpt(model, name).reduce(observed) for name in model.names]
    hidden = [name for name in model.names if name not in targets and name not in observed]
    order = elimination_order(factors, hidden)
    logger.debug("eliminating %s", " → ".join(order) or "nothing")
    for name in order:
        involved = [factor for factor in factors if name in factor.scope]
        factors = [factor for factor in factors if name not in factor.scope]
        product = reduce(lambda a, b: a * b, involved, Factor.unit())
        factors.append(product.marginalize(name))
    joint = reduce(lambda a, b: a * b, factors, Factor.unit()).transpose(targets)
    normalizer = joint.total()
    if normalizer <= 0.0:
        raise ZeroProbabilityEvidence("evidence has probability zero: %s" % dict(evidence or {}))
    states = [model.variable(name).states for name in targets]
    return Distribution(targets, states, joint.values / normalizer)

@export
@unique
class Engine(Enum):

    """ The two interchangeable inference backends. Their contracts are
        identical; results agree elementwise to within 1e-9.
    """
    ENUMERATE   = 'enumerate'
    VE          = 've'

    @classmethod
    def of(cls, engine):
        """ Coerce None, a string, or an Engine to an Engine """
        from causalkg.constants import DEFAULT_ENGINE
        if engine is None:
            engine = DEFAULT_ENGINE
        if isinstance(engine, cls):
            return engine
        return cls.for_string(str(engine))

    def query(self, model, targets, evidence=None):
        if self is Engine.ENUMERATE:
            return query_enumerate(model, targets, evidence)
        return query_ve(model, targets, evidence)

@export
def query(model, targets, evidence=None, engine=None):
    """ Dispatch a posterior query to the chosen engine (default VE) """
    return Engine.of(engine).query(model, targets, evidence)

@export
def marginal(model, name, engine=None):
    return query(model, (name,), engine=engine)

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
