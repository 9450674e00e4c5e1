#!/usr/bin/env python
# encoding: utf-8
"""
ontology/schema.py

The causal ontology: a closed, versioned vocabulary under one namespace.
Three classes name the causal roles; two object properties relate causal
variables; four data properties carry effect sizes and probabilities.
"""
from __future__ import print_function

from rdflib import Namespace, RDF, RDFS, OWL, XSD

from causalkg.constants import CKG_PREFIX, CKG_NAMESPACE
from causalkg.graph.terms import Statement
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

CKG = Namespace(CKG_NAMESPACE)

@export
class OntologySchema(object):

    namespace = CKG

    # Classes:
    Treatment               = CKG.Treatment
    Mediator                = CKG.Mediator
    Outcome                 = CKG.Outcome

    # Object properties:
    causes                  = CKG.causes
    causesWith              = CKG.causesWith

    # Data properties:
    totalCausalEffect       = CKG.totalCausalEffect
    naturalDirectEffect     = CKG.naturalDirectEffect
    naturalIndirectEffect   = CKG.naturalIndirectEffect
    probability             = CKG.probability

    classes = (Treatment, Mediator, Outcome)
    object_properties = (causes, causesWith)
    data_properties = (totalCausalEffect, naturalDirectEffect,
                       naturalIndirectEffect, probability)

    # The prefixes every causal knowledge graph declares:
    prefixes = { CKG_PREFIX   : CKG_NAMESPACE,
                 'owl'        : str(OWL),
                 'rdf'        : str(RDF),
                 'rdfs'       : str(RDFS),
                 'xsd'        : str(XSD) }

    @classmethod
    def vocabulary(cls):
        """ Every term of the ontology, paired with its OWL kind """
        return tuple((term, OWL.Class) for term in cls.classes) \
             + tuple((term, OWL.ObjectProperty) for term in cls.object_properties) \
             + tuple((term, OWL.DatatypeProperty) for term in cls.data_properties)

    @classmethod
    def contains(cls, iri):
        return any(term == iri for term, _ in cls.vocabulary())

@export
def emit_schema():
    """ The declaration triples of the causal ontology, one per term """
    return frozenset(Statement(term, RDF.type, kind) \
                     for term, kind in OntologySchema.vocabulary())

export(CKG, name='CKG')

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
