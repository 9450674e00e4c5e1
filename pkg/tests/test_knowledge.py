# encoding: utf-8
from __future__ import print_function

import pytest

from rdflib import RDF, RDFS, URIRef, XSD

from causalkg.causal.mediation import EffectSpec, EffectReport, decompose
from causalkg.errors import UnmappedVariableInReport, InvalidModel
from causalkg.graph.knowledge import CausalKnowledgeGraph, build_kg, kg_diff, effect_values
from causalkg.graph.terms import EmbeddedTriple, Statement, double, text
from causalkg.ontology.schema import OntologySchema

AD = "http://example.org/ad#"

def ad(name):
    return URIRef(AD + name)

@pytest.fixture(scope='module')
def report(collision, roles):
    (pattern,) = roles.patterns()
    return decompose(collision, EffectSpec(pattern.treatment, pattern.outcome, pattern.mediator))

@pytest.fixture(scope='module')
def kg(collision, roles, report):
    return build_kg(collision, roles, (report,))

def test_edges_are_asserted(kg, goldens):
    edges = kg.matching(predicate=OntologySchema.causes)
    asserted = [statement for statement in edges \
                 if not isinstance(statement.subject, EmbeddedTriple)]
    assert len(asserted) == goldens['collision']['edges']
    assert (ad('Rain'), ad('SlipperyRoad')) in kg.causes

def test_statement_count(kg):
    # ontology + edges + role typing + labels + probabilities + one annotated relation:
    assert len(kg) == 9 + 9 + 3 + 8 + 8 + 4

def test_roles_and_labels(kg):
    assert Statement(ad('SuddenLaneChange'), RDF.type, OntologySchema.Mediator) in kg
    assert kg.matching(ad('Snow'), RDF.type) == ()
    assert kg.labels[ad('DriverDistraction')] == 'DriverDistraction'
    assert kg.iri_of('Collision') == ad('Collision')
    assert kg.iri_of('Hail') is None

def test_marginal_probabilities(kg, goldens):
    value = kg.value(ad('Snow'), OntologySchema.probability)
    assert value.datatype == XSD.double
    assert float(str(value)) == pytest.approx(goldens['collision']['marginals']['Snow'])

def test_annotated_relation(kg, report):
    triple = EmbeddedTriple(ad('DriverDistraction'), OntologySchema.causes, ad('Collision'))
    annotations = kg.annotations(triple)
    assert annotations[OntologySchema.causesWith] == ad('SuddenLaneChange')
    assert annotations[OntologySchema.totalCausalEffect] == double(report.tce)
    assert not kg.unasserted()
    values = effect_values(kg)[(ad('DriverDistraction'), ad('Collision'))]
    assert values[OntologySchema.naturalDirectEffect] == report.nde
    assert values[OntologySchema.naturalIndirectEffect] == report.nie

def test_recorded_annotation(collision, roles, goldens):
    numbers = goldens['collision']['annotation']
    spec = EffectSpec('DriverDistraction', 'Collision', 'SuddenLaneChange')
    recorded = EffectReport.annotation(spec, numbers['tce'], numbers['nde'], numbers['nie'])
    kg = build_kg(collision, roles, (recorded,))
    triple = EmbeddedTriple(ad('DriverDistraction'), OntologySchema.causes, ad('Collision'))
    assert str(kg.annotations(triple)[OntologySchema.totalCausalEffect]) == "12.51"

def test_unmapped_variable_in_report(collision, roles):
    stray = EffectReport.annotation(EffectSpec('Hail', 'Collision'), 0.1)
    with pytest.raises(UnmappedVariableInReport):
        build_kg(collision, roles, (stray,))

def test_report_outside_the_role_patterns(collision, roles):
    assert ('Snow', 'Collision') not in {(p.treatment, p.outcome) for p in roles.patterns()}
    unclaimed = decompose(collision, EffectSpec('Snow', 'Collision'))
    kg = build_kg(collision, roles, (unclaimed,))
    triple = EmbeddedTriple(ad('Snow'), OntologySchema.causes, ad('Collision'))
    annotations = kg.annotations(triple)
    assert annotations[OntologySchema.totalCausalEffect] == double(unclaimed.tce)
    assert OntologySchema.causesWith not in annotations

def test_invalid_model_is_refused(collision, roles):
    with pytest.raises(InvalidModel):
        build_kg(collision.skeleton(), roles)

def test_diff(collision, roles, kg):
    bare = build_kg(collision, roles)
    difference = kg_diff(kg, bare)
    assert len(difference) == 4
    assert all(isinstance(statement.subject, EmbeddedTriple) for statement in difference)
    assert kg_diff(kg, kg) == frozenset()

def test_union_and_including():
    a = CausalKnowledgeGraph([Statement(ad('A'), RDFS.label, text('A'))], { 'ad' : AD })
    b = CausalKnowledgeGraph([Statement(ad('B'), RDFS.label, text('B'))])
    union = a | b
    assert len(union) == 2 and union.prefixes == { 'ad' : AD }
    assert len(a.including(Statement(ad('A'), OntologySchema.causes, ad('B')))) == 2
    assert len(a) == 1
