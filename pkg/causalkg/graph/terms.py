#!/usr/bin/env python
# encoding: utf-8
"""
graph/terms.py

Knowledge-graph terms. IRIs and literals are rdflib’s `URIRef` and
`Literal`; an `EmbeddedTriple` is a whole triple used as a term, which
is what lets a statement be about another statement.
"""
from __future__ import print_function

import math

from dataclasses import dataclass
from typing import Union

from rdflib import Literal, URIRef, XSD

from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

@export
@dataclass(frozen=True)
class EmbeddedTriple(object):

    subject: 'Term'
    predicate: URIRef
    object: 'Term'

    def __post_init__(self):
        check_triple(self.subject, self.predicate, self.object)

    @property
    def depth(self):
        """ Nesting depth: 1 for a triple of plain terms """
        return 1 + max(term_depth(self.subject), term_depth(self.object))

Term = Union[URIRef, Literal, EmbeddedTriple]

@export
@dataclass(frozen=True)
class Statement(object):

    subject: Term
    predicate: URIRef
    object: Term

    def __post_init__(self):
        check_triple(self.subject, self.predicate, self.object)

    @property
    def embedded(self):
        """ This statement, quoted as an embedded triple """
        return EmbeddedTriple(self.subject, self.predicate, self.object)

    def terms(self):
        yield from (self.subject, self.predicate, self.object)

def check_triple(subject, predicate, object):
    if not isinstance(predicate, URIRef):
        raise TypeError(f"predicate must be an IRI, not {predicate!r}")
    if not isinstance(subject, (URIRef, EmbeddedTriple)):
        raise TypeError(f"subject must be an IRI or embedded triple, not {subject!r}")
    if not isinstance(object, (URIRef, Literal, EmbeddedTriple)):
        raise TypeError(f"object must be a term, not {object!r}")

@export
def term_depth(term):
    if isinstance(term, EmbeddedTriple):
        return term.depth
    return 0

@export
def double(value):
    """ An xsd:double literal whose lexical form is the shortest decimal
        that round-trips to `value`
    """
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"cannot represent {value!r} as a finite xsd:double")
    return Literal(repr(value), datatype=XSD.double, normalize=False)

@export
def is_double(term):
    return isinstance(term, Literal) and term.datatype == XSD.double

@export
def double_value(term):
    return float(str(term))

@export
def text(value):
    """ A plain string literal """
    return Literal(str(value))

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
