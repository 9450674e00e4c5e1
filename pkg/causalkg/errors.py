#!/usr/bin/env python
# encoding: utf-8
"""
errors.py

The causalkg exception hierarchy. Domain errors derive from `ValueError`
(the command-line interface maps them to exit status 2); unreadable or
ill-formed files derive from `IOError` (exit status 3).
"""
from __future__ import print_function

from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

@export
class CausalKGError(Exception):
    """ Root of every exception raised on purpose by causalkg """
    pass

@export
class ModelError(CausalKGError, ValueError):
    """ A request that is ill-posed for the model it was made against """
    pass

@export
class UnknownVariable(ModelError):

    def __init__(self, name, where=None):
        self.name = name
        message = f"unknown variable “{name}”"
        if where:
            message += f" in {where}"
        super(UnknownVariable, self).__init__(message)

@export
class UnknownState(ModelError):

    def __init__(self, variable, state, states=()):
        self.variable = variable
        self.state = state
        message = f"unknown state “{state}” for variable “{variable}”"
        if states:
            message += " (declared: %s)" % ", ".join(states)
        super(UnknownState, self).__init__(message)

@export
class IncompleteAssignment(ModelError):

    def __init__(self, missing):
        self.missing = tuple(missing)
        super(IncompleteAssignment, self).__init__(
              "assignment leaves unbound: %s" % ", ".join(self.missing))

@export
class OverlappingQuery(ModelError):
    """ Targets, interventions and evidence must be pairwise disjoint """
    pass

@export
class ZeroProbabilityEvidence(ModelError):
    """ The evidence of a query has probability zero under the model """
    pass

@export
class InvalidModel(ModelError):

    """ Raised by operations whose precondition is a valid model;
        the offending `ValidationReport` rides along as `report`.
    """

    def __init__(self, report):
        self.report = report
        findings = "; ".join(str(finding) for finding in report)
        super(InvalidModel, self).__init__(f"invalid model: {findings}")

@export
class MissingColumn(ModelError):

    def __init__(self, column):
        self.column = column
        super(MissingColumn, self).__init__(f"dataset lacks a column for “{column}”")

@export
class UnestimableRow(ModelError):

    def __init__(self, variable, given):
        self.variable = variable
        self.given = dict(given)
        configuration = ", ".join(f"{k}={v}" for k, v in self.given.items())
        super(UnestimableRow, self).__init__(
              f"cannot estimate P({variable} | {configuration}): "
              "parent configuration never observed and alpha is 0")

@export
class InvalidEffectSpec(ModelError):
    pass

@export
class MissingMediator(ModelError):
    pass

@export
class ZeroJointProbability(ModelError):
    pass

@export
class InvalidBaseIri(ModelError):
    pass

@export
class UnmappedVariableInReport(ModelError):
    pass

@export
class RoleError(ModelError):
    """ A role mapping that cannot be read as the roles-file format demands """
    pass

@export
class GrammarError(ModelError):

    """ A syntax error, located by 1-based line and column, carrying the
        set of token kinds that would have been accepted at that point.
    """

    def __init__(self, message, line=1, column=1, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        self.detail = message
        located = f"{line}:{column}: {message}"
        if self.expected:
            located += " (expected %s)" % " | ".join(self.expected)
        super(GrammarError, self).__init__(located)

@export
class TurtleSyntaxError(GrammarError):
    pass

@export
class UnknownPrefix(GrammarError):

    def __init__(self, pname, line=1, column=1):
        self.pname = pname
        super(UnknownPrefix, self).__init__(f"undeclared prefix in “{pname}”",
                                            line=line, column=column)

@export
class QuerySyntaxError(GrammarError):

    @property
    def position(self):
        """ 1-based character offset -- queries are single-line """
        return self.column

@export
class DecompositionViolation(CausalKGError, ArithmeticError):
    """ TCE ≠ NDE − NIE(reversed): an internal bug, never a user error """
    pass

@export
class FormatError(CausalKGError, IOError):
    """ A file that could not be read, or not be understood """
    pass

@export
class NoCausalPath(UserWarning):
    """ The treatment is not an ancestor of the outcome; every effect is zero """
    pass

@export
class MediatorNotOnPath(UserWarning):
    pass

@export
class NotIdentified(UserWarning):
    pass

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
