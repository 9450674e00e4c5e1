# encoding: utf-8
from __future__ import print_function

import pytest

from hypothesis import given
from hypothesis.strategies import binary, text as texts

from rdflib import URIRef, XSD

from causalkg.causal.mediation import EffectSpec, EffectReport
from causalkg.errors import TurtleSyntaxError, UnknownPrefix, FormatError, GrammarError
from causalkg.graph.knowledge import build_kg
from causalkg.graph.terms import EmbeddedTriple
from causalkg.graph.turtlestar import serialize, parse, dump, load
from causalkg.ontology.schema import OntologySchema

from .strategies import knowledge_graphs

ANNOTATED = """\
@prefix ad: <http://example.org/ad#> .
@prefix ckg: <https://w3id.org/causalkg/ontology/v1#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .

# one asserted, annotated relation
ad:DriverDistraction ckg:causes ad:Collision .
<< ad:DriverDistraction ckg:causes ad:Collision >> ckg:totalCausalEffect "12.51"^^xsd:double ;
    ckg:naturalDirectEffect 7.06 ;
    ckg:naturalIndirectEffect "10.680"^^xsd:double ;
    ckg:causesWith ad:SuddenLaneChange .
"""

def relation():
    return EmbeddedTriple(URIRef("http://example.org/ad#DriverDistraction"),
                          OntologySchema.causes,
                          URIRef("http://example.org/ad#Collision"))

@given(knowledge_graphs())
def test_round_trip(kg):
    again = parse(serialize(kg))
    assert again.statements == kg.statements
    assert serialize(again) == serialize(kg)

def test_annotations_are_doubles():
    kg = parse(ANNOTATED)
    assert len(kg) == 5
    assert not kg.unasserted()
    annotations = kg.annotations(relation())
    lexical = { predicate : str(value) for predicate, value in annotations.items() \
                                        if predicate != OntologySchema.causesWith }
    assert lexical == { OntologySchema.totalCausalEffect     : "12.51",
                        OntologySchema.naturalDirectEffect   : "7.06",
                        OntologySchema.naturalIndirectEffect : "10.68" }
    assert all(annotations[predicate].datatype == XSD.double for predicate in lexical)

def test_canonical_output(collision, roles, goldens):
    numbers = goldens['collision']['annotation']
    spec = EffectSpec('DriverDistraction', 'Collision', 'SuddenLaneChange')
    report = EffectReport.annotation(spec, numbers['tce'], numbers['nde'], numbers['nie'])
    kg = build_kg(collision, roles, (report,))
    output = serialize(kg)
    assert output == serialize(build_kg(collision, roles, (report,)))
    assert output.startswith("@prefix ad: <http://example.org/ad#> .\n")
    assert output.endswith(" .\n")
    assert 'ckg:totalCausalEffect "12.51"^^xsd:double' in output
    assert "<< ad:DriverDistraction ckg:causes ad:Collision >>" in output
    assert parse(output).statements == kg.statements

def test_file_round_trip(tmp_path, collision, roles):
    kg = build_kg(collision, roles)
    path = dump(kg, str(tmp_path / 'collision.ttl'))
    assert load(path).statements == kg.statements
    with pytest.raises(FormatError):
        load(str(tmp_path / 'missing.ttl'))

def test_missing_terminator():
    text = "<http://example.org/a> <http://example.org/p> <http://example.org/b>"
    with pytest.raises(TurtleSyntaxError) as info:
        parse(text)
    assert info.value.line == 1
    assert info.value.column == len(text) + 1
    assert "end of input" in str(info.value)
    assert "'.'" in info.value.expected

def test_unknown_prefix():
    with pytest.raises(UnknownPrefix) as info:
        parse("@prefix ad: <http://example.org/ad#> .\n\nex:a ad:p ad:b .\n")
    assert (info.value.line, info.value.column) == (3, 1)
    assert info.value.pname == "ex:a"

@pytest.mark.parametrize('document', [
    "<a> <http://example.org/p> <http://example.org/b> .",
    "<http://example.org/a> <http://example.org/p> \"inf\"^^<http://www.w3.org/2001/XMLSchema#double> .",
    "<http://example.org/a> <http://example.org/p> << <http://example.org/a> <http://example.org/p> .",
    "@prefix ad <http://example.org/ad#> .",
    "_:b0 <http://example.org/p> <http://example.org/b> .",
    "\"literal\" <http://example.org/p> <http://example.org/b> .",
])
def test_malformed_documents(document):
    with pytest.raises(TurtleSyntaxError):
        parse(document)

def test_nesting_limit():
    inner = "<http://example.org/a>"
    for _ in range(65):
        inner = f"<< {inner} <http://example.org/p> <http://example.org/b> >>"
    with pytest.raises(TurtleSyntaxError) as info:
        parse(f"{inner} <http://example.org/p> <http://example.org/b> .")
    assert "nested deeper" in str(info.value)

def test_empty_documents():
    assert len(parse("")) == 0
    assert len(parse("# nothing but a comment\n")) == 0
    assert serialize(parse("")) == ""

@given(binary(max_size=256))
def test_arbitrary_bytes(data):
    try:
        parse(data)
    except GrammarError:
        pass

@given(texts(max_size=128))
def test_arbitrary_text(data):
    try:
        parse(data)
    except GrammarError:
        pass
