#!/usr/bin/env python
# encoding: utf-8
"""
causalkg/abc -- abstract base classes for queries and query engines.

A `Query` is anything with an `evaluate(model, kg=None, engine=…)` method
and a `rung` -- the query AST nodes of `causalkg.query.ast` are the
concrete ones. An `Enum` is an enumeration whose members carry behavior,
e.g. the inference engines of `causalkg.network.inference`.
"""
from __future__ import print_function

from abc import ABC, abstractmethod
from enum import Enum as EnumBase, EnumMeta

from clu.abstract import Slotted
from clu.predicates import isslotted, slots_for

from causalkg.exporting import Exporter

abstract = abstractmethod
exporter = Exporter(path=__file__)
export = exporter.decorator()

@export
def is_in_class(atx, cls):
    """ Test whether or not a class has a named attribute,
        regardless of whether the class uses `__slots__` or
        an internal `__dict__`.
    """
    if hasattr(cls, '__slots__') and atx in cls.__slots__:
        return True
    if hasattr(cls, '__dict__'):
        return atx in cls.__dict__
    return False

@export
def subclasshook(cls, subclass):
    """ A subclass hook function for both Query and Enum """
    if any(is_in_class('evaluate', ancestor) for ancestor in subclass.__mro__):
        return True
    return NotImplemented

def compare_via_slots(self, other):
    """ Compare two slotted objects by checking each available slot
        on each instance
    """
    if type(self) is not type(other):
        return NotImplemented
    if not isslotted(self) or not isslotted(other):
        return False
    for slot in slots_for(type(self)):
        if getattr(self, slot, None) != getattr(other, slot, None):
            return False
    return True

@export
class Query(ABC, metaclass=Slotted):

    """ Base abstract query class. """

    @property
    @abstract
    def rung(self):
        """ The explainability rung this query lives on -- one of the
            members of `causalkg.query.evaluation.Rung`
        """
        ...

    @abstract
    def evaluate(self, model, kg=None, engine=None):
        """ Evaluate the query against a model, returning a QueryResult """
        ...

    def variables(self):
        """ The names of every variable the query mentions """
        return ()

    def __call__(self, model, kg=None, engine=None):
        return self.evaluate(model, kg=kg, engine=engine)

    @classmethod
    def __subclasshook__(cls, subclass):
        return subclasshook(cls, subclass)

    def __eq__(self, other):
        """ Delegate to “compare_via_slots(…)” """
        return compare_via_slots(self, other)

    def __hash__(self):
        return hash((type(self).__name__,) + tuple(repr(getattr(self, slot, None)) \
                                             for slot in slots_for(type(self))))

class SlottedEnumMeta(EnumMeta, metaclass=Slotted):
    pass

@export
class Enum(EnumBase, metaclass=SlottedEnumMeta):

    """ Base abstract engine enum. """

    @abstract
    def query(self, model, targets, evidence=None):
        """ Compute a posterior distribution per the engine enum instance """
        ...

    @classmethod
    def for_string(cls, string):
        for member in cls:
            if member.to_string() == string:
                return member
        raise ValueError(f"for_string(): unknown {cls.__name__} “{string}”")

    def to_string(self):
        return str(self.value)

    def __str__(self):
        return self.to_string()

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
