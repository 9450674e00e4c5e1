#!/usr/bin/env python
# encoding: utf-8
"""
graph/knowledge.py

The causal knowledge graph: a set of statements (some of them about
other statements) plus a prefix table for serialization.

An annotated causal relation is asserted and quoted at once:

    ad:DriverDistraction ckg:causes ad:Collision .
    << ad:DriverDistraction ckg:causes ad:Collision >> ckg:totalCausalEffect "0.235827"^^xsd:double ;
                                                       ckg:causesWith ad:SuddenLaneChange .
"""
from __future__ import print_function

import logging

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import FrozenSet, Mapping

from rdflib import RDF, RDFS

from causalkg.errors import UnmappedVariableInReport
from causalkg.graph.terms import EmbeddedTriple, Statement, double, text, is_double
from causalkg.network.inference import query
from causalkg.ontology.roles import CausalRole
from causalkg.ontology.schema import OntologySchema, emit_schema
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

logger = logging.getLogger(__name__)

@export
@dataclass(frozen=True)
class CausalKnowledgeGraph(object):

    statements: FrozenSet[Statement] = frozenset()
    prefixes: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'statements', frozenset(self.statements))
        object.__setattr__(self, 'prefixes', dict(self.prefixes))

    def __hash__(self):
        return hash(self.statements)

    def __len__(self):
        return len(self.statements)

    def __iter__(self):
        yield from self.statements

    def __contains__(self, statement):
        return statement in self.statements

    def __or__(self, other):
        prefixes = dict(self.prefixes)
        prefixes.update(other.prefixes)
        return type(self)(self.statements | other.statements, prefixes)

    def including(self, *statements):
        return replace(self, statements=self.statements | frozenset(statements))

    def matching(self, subject=None, predicate=None, object=None):
        """ Every statement agreeing with the given positions """
        return tuple(statement for statement in self.statements \
                      if (subject is None or statement.subject == subject) \
                     and (predicate is None or statement.predicate == predicate) \
                     and (object is None or statement.object == object))

    def value(self, subject, predicate):
        """ The object of some statement (subject, predicate, ·), or None """
        found = sorted(self.matching(subject, predicate), key=lambda s: str(s.object))
        return found[0].object if found else None

    @cached_property
    def labels(self):
        """ Variable name for every labelled IRI """
        return { statement.subject : str(statement.object) \
                 for statement in self.statements \
                  if statement.predicate == RDFS.label }

    def iri_of(self, name):
        for iri, label in self.labels.items():
            if label == name:
                return iri
        return None

    @cached_property
    def causes(self):
        """ The asserted (cause, effect) IRI pairs """
        return frozenset((statement.subject, statement.object) \
                          for statement in self.statements \
                           if statement.predicate == OntologySchema.causes \
                          and not isinstance(statement.subject, EmbeddedTriple))

    def annotations(self, triple):
        """ predicate → object for every statement about `triple` """
        return { statement.predicate : statement.object \
                 for statement in self.matching(subject=triple) }

    def unasserted(self):
        """ Embedded triples used as subjects that are not also asserted """
        out = set()
        for statement in self.statements:
            subject = statement.subject
            if isinstance(subject, EmbeddedTriple):
                base = Statement(subject.subject, subject.predicate, subject.object)
                if base not in self.statements:
                    out.add(subject)
        return out

    def __repr__(self):
        return "%s(%d statements)" % (type(self).__name__, len(self))

@export
def kg_diff(a, b):
    """ The statements in exactly one of `a` and `b` """
    return frozenset(a.statements ^ b.statements)

def effect_statements(model, mapping, report):
    spec = report.spec
    names = [spec.treatment, spec.outcome] + \
           ([spec.mediator] if spec.mediator is not None else [])
    for name in names:
        if name not in model:
            raise UnmappedVariableInReport(f"effect report names {name}, "
                                            "which the model does not declare")
    treatment, outcome = mapping.iri(spec.treatment), mapping.iri(spec.outcome)
    triple = EmbeddedTriple(treatment, OntologySchema.causes, outcome)
    yield Statement(treatment, OntologySchema.causes, outcome)
    yield Statement(triple, OntologySchema.totalCausalEffect, double(report.tce))
    if spec.mediator is not None:
        yield Statement(triple, OntologySchema.causesWith, mapping.iri(spec.mediator))
        if report.nde is not None:
            yield Statement(triple, OntologySchema.naturalDirectEffect, double(report.nde))
        if report.nie is not None:
            yield Statement(triple, OntologySchema.naturalIndirectEffect, double(report.nie))

@export
def build_kg(model, mapping, reports=(), engine=None):
    """ Assemble the causal knowledge graph of `model`: the ontology,
        one ckg:causes statement per edge, role typing, labels, the
        marginal probability of every variable’s last (“active”) state,
        and the effect annotations of every report.
    """
    model.require_valid()
    statements = set(emit_schema())
    iris = { name : mapping.iri(name) for name in model.names }
    for parent, child in model.edges:
        statements.add(Statement(iris[parent], OntologySchema.causes, iris[child]))
    for name in model.names:
        role = mapping.role(name)
        if role is not CausalRole.CONTEXT:
            statements.add(Statement(iris[name], RDF.type, role.iri))
        statements.add(Statement(iris[name], RDFS.label, text(name)))
        variable = model.variable(name)
        marginal = query(model, (name,), engine=engine)
        active = marginal.probability({ name : variable.states[-1] })
        statements.add(Statement(iris[name], OntologySchema.probability, double(active)))
    for report in reports:
        statements.update(effect_statements(model, mapping, report))
    prefixes = dict(OntologySchema.prefixes)
    prefixes.update(mapping.namespace_prefixes())
    logger.debug("built a knowledge graph of %d statements", len(statements))
    return CausalKnowledgeGraph(frozenset(statements), prefixes)

@export
def effect_values(kg):
    """ (treatment IRI, outcome IRI) → { predicate : float } for every
        annotated causal relation
    """
    out = {}
    for statement in kg:
        if isinstance(statement.subject, EmbeddedTriple) and is_double(statement.object):
            key = (statement.subject.subject, statement.subject.object)
            out.setdefault(key, {})[statement.predicate] = float(str(statement.object))
    return out

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
