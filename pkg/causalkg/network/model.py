#!/usr/bin/env python
# encoding: utf-8
"""
network/model.py

Discrete causal Bayesian networks: variables with ordered state labels,
one conditional probability table per variable, and the directed acyclic
graph their parent lists induce.

Models are immutable. Anything derived from one -- the networkx graph,
the topological order, the numpy CPT arrays -- is computed lazily and
cached on the instance.
"""
from __future__ import print_function

import itertools
import networkx
import numpy

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Mapping, NamedTuple, Optional, Tuple

from causalkg.errors import (UnknownVariable, UnknownState,
                             IncompleteAssignment, InvalidModel)
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

# An assignment binds variable names to state labels:
Assignment = Mapping[str, str]

@export
class Variable(NamedTuple):

    """ A discrete variable. `values` optionally attaches a real number to
        each state -- the outcome coding used by effect computations --
        and defaults to the state’s index, so binary variables are 0/1.
    """
    name: str
    states: Tuple[str, ...]
    values: Optional[Tuple[float, ...]] = None
    parents: Tuple[str, ...] = ()

    @property
    def cardinality(self):
        return len(self.states)

    @property
    def is_exogenous(self):
        return len(self.parents) == 0

    @property
    def codings(self):
        """ The numeric value of every state, in state order """
        if self.values is None:
            return tuple(float(idx) for idx in range(len(self.states)))
        return tuple(float(value) for value in self.values)

    def index(self, state):
        try:
            return self.states.index(state)
        except ValueError:
            raise UnknownState(self.name, state, self.states)

    def value_of(self, state):
        return self.codings[self.index(state)]

    def detached(self):
        """ The same variable, with its parents severed """
        return self._replace(parents=())

@export
class CptRow(NamedTuple):

    """ One row of a CPT: the parent states (in the owner’s parent order;
        `None` marks a parent the source document failed to bind) and the
        distribution over the owner’s states, in state order.
    """
    given: Tuple[Optional[str], ...]
    dist: Tuple[float, ...]

@export
class Cpt(NamedTuple):

    owner: str
    rows: Tuple[CptRow, ...]

    @classmethod
    def from_table(cls, variable, parents, table):
        """ Build a CPT from an array shaped (|pa₁|, …, |paₖ|, |variable|),
            as produced by `CausalBayesianNetwork.table(…)`
        """
        table = numpy.asarray(table, dtype=float)
        rows = []
        for given in itertools.product(*(parent.states for parent in parents)):
            index = tuple(parent.states.index(state) for parent, state in zip(parents, given))
            rows.append(CptRow(tuple(given),
                               tuple(float(p) for p in table[index])))
        return cls(variable.name, tuple(rows))

    @classmethod
    def degenerate(cls, variable, state):
        """ A single-row CPT putting all probability mass on `state` """
        hit = variable.index(state)
        dist = tuple(1.0 if idx == hit else 0.0 for idx in range(variable.cardinality))
        return cls(variable.name, (CptRow((), dist),))

    def row(self, given):
        given = tuple(given)
        for row in self.rows:
            if row.given == given:
                return row
        raise KeyError(given)

@export
@dataclass(frozen=True)
class CausalBayesianNetwork(object):

    """ A causal Bayesian network G = ⟨V, E⟩ with one CPT per variable.

        Construction never validates -- `causalkg.network.validation.validate(…)`
        accepts arbitrary candidate models and reports what is wrong with
        them. Operations that need a valid model call `require_valid()`.
    """
    variables: Tuple[Variable, ...]
    cpts: Tuple[Cpt, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'variables', tuple(self.variables))
        object.__setattr__(self, 'cpts', tuple(self.cpts))

    @cached_property
    def index(self):
        out = {}
        for variable in self.variables:
            out.setdefault(variable.name, variable)
        return out

    @cached_property
    def names(self):
        return tuple(self.index)

    @cached_property
    def order(self):
        """ Declaration position of every variable """
        return { name : idx for idx, name in enumerate(self.names) }

    @cached_property
    def cpt_index(self):
        out = {}
        for cpt in self.cpts:
            out.setdefault(cpt.owner, cpt)
        return out

    @cached_property
    def graph(self):
        """ The induced directed graph, restricted to declared variables """
        graph = networkx.DiGraph()
        graph.add_nodes_from(self.names)
        graph.add_edges_from(self.edges)
        return graph

    @cached_property
    def edges(self):
        """ Every resolvable parent → child edge, in declaration order """
        return tuple((parent, variable.name) for variable in self.index.values() \
                                             for parent in variable.parents \
                                              if parent in self.index)

    @cached_property
    def topological_order(self):
        return tuple(networkx.lexicographical_topological_sort(self.graph,
                                                               key=self.order.get))

    @cached_property
    def report(self):
        from causalkg.network.validation import validate
        return validate(self)

    def require_valid(self):
        if not self.report.ok:
            raise InvalidModel(self.report)
        return self

    def variable(self, name):
        try:
            return self.index[name]
        except KeyError:
            raise UnknownVariable(name)

    def __contains__(self, name):
        return name in self.index

    def __len__(self):
        return len(self.variables)

    def cpt(self, name):
        self.variable(name)
        return self.cpt_index.get(name)

    def parents(self, name):
        return self.variable(name).parents

    def children(self, name):
        self.variable(name)
        return tuple(sorted(self.graph.successors(name), key=self.order.get))

    def ancestors(self, name):
        self.variable(name)
        return frozenset(networkx.ancestors(self.graph, name))

    def descendants(self, name):
        self.variable(name)
        return frozenset(networkx.descendants(self.graph, name))

    def has_path(self, source, target):
        """ True if a directed path of length ≥ 1 runs from source to target """
        return target in self.descendants(source)

    def ordered(self, names):
        """ Sort variable names into declaration order, checking each """
        names = set(names)
        for name in names:
            self.variable(name)
        return tuple(sorted(names, key=self.order.get))

    def cardinality(self, name):
        return self.variable(name).cardinality

    def check_assignment(self, assignment, complete=False):
        """ Raise UnknownVariable/UnknownState for a bad binding, and
            IncompleteAssignment if `complete` and a variable is unbound;
            returns the assignment as state indices.
        """
        indices = {}
        for name, state in assignment.items():
            indices[name] = self.variable(name).index(state)
        if complete:
            missing = [name for name in self.names if name not in assignment]
            if missing:
                raise IncompleteAssignment(missing)
        return indices

    def table(self, name):
        """ The CPT of `name` as a numpy array shaped (|pa₁|, …, |paₖ|, |name|) """
        return self.tables[name]

    @cached_property
    def tables(self):
        self.require_valid()
        out = {}
        for variable in self.index.values():
            parents = [self.index[parent] for parent in variable.parents]
            shape = tuple(parent.cardinality for parent in parents) + (variable.cardinality,)
            table = numpy.zeros(shape, dtype=float)
            for row in self.cpt_index[variable.name].rows:
                index = tuple(parent.states.index(state) for parent, state in zip(parents, row.given))
                table[index] = row.dist
            table.setflags(write=False)
            out[variable.name] = table
        return out

    def replaced(self, variable, cpt):
        """ A copy of this model with one variable and its CPT swapped out """
        variables = tuple(variable if v.name == variable.name else v for v in self.variables)
        cpts = tuple(cpt if c.owner == variable.name else c for c in self.cpts)
        return replace(self, variables=variables, cpts=cpts)

    def with_cpts(self, cpts):
        return replace(self, cpts=tuple(cpts))

    def skeleton(self):
        """ This model’s structure, with every CPT removed """
        return replace(self, cpts=())

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, ", ".join(self.names))

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
