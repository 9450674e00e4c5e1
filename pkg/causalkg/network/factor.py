#!/usr/bin/env python
# encoding: utf-8
"""
network/factor.py

Factors over discrete variables: a scope (an ordered tuple of variable
names) and a non-negative numpy array with one axis per scope variable.
Products broadcast over the union of the two scopes.
"""
from __future__ import print_function

import numpy

from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

@export
class Factor(object):

    __slots__ = ('scope', 'values')

    def __init__(self, scope, values):
        scope = tuple(scope)
        values = numpy.asarray(values, dtype=float)
        if len(set(scope)) != len(scope):
            raise ValueError(f"factor scope repeats a variable: {scope}")
        if values.ndim != len(scope):
            raise ValueError(f"factor over {len(scope)} variables "
                             f"given a rank-{values.ndim} table")
        if numpy.any(values < 0.0):
            raise ValueError("factor entries must be non-negative")
        self.scope = scope
        self.values = values

    @classmethod
    def unit(cls):
        """ The multiplicative identity: an empty scope, value 1 """
        return cls((), numpy.array(1.0))

    @classmethod
    def from_cpt(cls, model, name):
        variable = model.variable(name)
        return cls(variable.parents + (name,), model.table(name))

    @property
    def cards(self):
        return self.values.shape

    def cardinality(self, name):
        return self.values.shape[self.scope.index(name)]

    def reduce(self, evidence):
        """ Fix the variables bound in `evidence` (name → state index),
            dropping them from the scope.
        """
        if not any(name in evidence for name in self.scope):
            return self
        index = tuple(evidence[name] if name in evidence else slice(None) \
                                     for name in self.scope)
        scope = tuple(name for name in self.scope if name not in evidence)
        return type(self)(scope, self.values[index])

    def broadcast(self, scope):
        """ This factor’s table, transposed and reshaped to broadcast
            against a table over `scope` (a superset of this scope)
        """
        present = [name for name in scope if name in self.scope]
        values = numpy.transpose(self.values, [self.scope.index(name) for name in present])
        shape = [self.cardinality(name) if name in self.scope else 1 for name in scope]
        return values.reshape(shape)

    def __mul__(self, other):
        scope = self.scope + tuple(name for name in other.scope if name not in self.scope)
        return type(self)(scope, self.broadcast(scope) * other.broadcast(scope))

    def marginalize(self, *names):
        """ Sum the named variables out """
        axes = tuple(self.scope.index(name) for name in names)
        scope = tuple(name for name in self.scope if name not in names)
        return type(self)(scope, self.values.sum(axis=axes))

    def transpose(self, scope):
        scope = tuple(scope)
        if sorted(scope) != sorted(self.scope):
            raise ValueError(f"cannot transpose {self.scope} to {scope}")
        return type(self)(scope, numpy.transpose(self.values,
                                [self.scope.index(name) for name in scope]))

    def total(self):
        return float(self.values.sum())

    def __repr__(self):
        return "%s(%s) @ <%s>" % (type(self).__name__, ", ".join(self.scope), id(self))

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
