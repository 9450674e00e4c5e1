# encoding: utf-8
from __future__ import print_function

import pytest

from rdflib import OWL, RDF, URIRef

from causalkg.constants import CKG_NAMESPACE, DEFAULT_BASE_IRI
from causalkg.errors import InvalidBaseIri, RoleError
from causalkg.ontology.roles import (CausalRole, Pattern, RoleMapping,
                                     default_iri, roles_from_document,
                                     roles_to_document, validate_roles)
from causalkg.ontology.schema import OntologySchema, emit_schema

def test_schema_statements():
    statements = emit_schema()
    assert len(statements) == 9
    assert all(statement.predicate == RDF.type for statement in statements)
    kinds = [statement.object for statement in statements]
    assert kinds.count(OWL.Class) == 3
    assert kinds.count(OWL.ObjectProperty) == 2
    assert kinds.count(OWL.DatatypeProperty) == 4
    assert all(str(statement.subject).startswith(CKG_NAMESPACE) for statement in statements)

def test_schema_membership():
    assert OntologySchema.contains(URIRef(CKG_NAMESPACE + 'causesWith'))
    assert not OntologySchema.contains(URIRef(CKG_NAMESPACE + 'prevents'))
    assert CausalRole.MEDIATOR.iri == OntologySchema.Mediator
    assert CausalRole.CONTEXT.iri is None

def test_role_strings():
    assert CausalRole.for_string('Outcome') is CausalRole.OUTCOME
    assert str(CausalRole.TREATMENT) == 'Treatment'
    with pytest.raises(RoleError):
        CausalRole.for_string('Confounder')

def test_role_aliases():
    assert CausalRole.CAUSE is CausalRole.TREATMENT
    assert CausalRole.EFFECT is CausalRole.OUTCOME
    assert CausalRole.for_string('Treatment') is CausalRole.CAUSE
    assert [str(role) for role in CausalRole] == ['Treatment', 'Mediator', 'Outcome', 'Context']

class TestDefaultIri(object):

    def test_percent_encoding(self):
        assert default_iri('Lane Change', 'http://example.org/ad#') == \
               URIRef('http://example.org/ad#Lane%20Change')
        assert default_iri('Snow', DEFAULT_BASE_IRI) == URIRef(DEFAULT_BASE_IRI + 'Snow')

    @pytest.mark.parametrize('base', ['ad#', 'relative/path/', '', 'http://ex ample.org/'])
    def test_relative_base_is_refused(self, base):
        with pytest.raises(InvalidBaseIri):
            default_iri('Snow', base)

class TestRoleMapping(object):

    def test_collision_roles(self, roles):
        assert roles.base_iri == "http://example.org/ad#"
        assert roles.role('DriverDistraction') is CausalRole.TREATMENT
        assert roles.role('Snow') is CausalRole.CONTEXT
        assert roles.iri('Collision') == URIRef("http://example.org/ad#Collision")
        assert roles.namespace_prefixes() == { 'ad' : "http://example.org/ad#" }

    def test_mediated_pattern_claims_its_pair(self, roles):
        assert roles.patterns() == (Pattern('DriverDistraction', 'Collision',
                                            'SuddenLaneChange'),)
        assert str(roles.patterns()[0]) == \
               "DriverDistraction → SuddenLaneChange → Collision"

    def test_implicit_pattern(self):
        mapping = roles_from_document({ 'roles' : { 'A' : 'Treatment',
                                                    'B' : 'Outcome' } })
        assert mapping.patterns() == (Pattern('A', 'B'),)
        assert RoleMapping().patterns() == ()

    def test_explicit_iri(self):
        mapping = roles_from_document({ 'roles' : { 'Collision' : {
                                          'role' : 'Outcome',
                                          'iri'  : "http://example.org/ad#Crash" } } })
        assert mapping.iri('Collision') == URIRef("http://example.org/ad#Crash")

    def test_document_round_trip(self, roles):
        assert roles_from_document(roles_to_document(roles)) == roles

    @pytest.mark.parametrize('document', [
        [],
        { 'roles' : { 'A' : { 'iri' : 'http://example.org/A' } } },
        { 'roles' : { 'A' : 'Confounder' } },
        { 'roles' : { 'A' : { 'role' : 'Outcome', 'pattern' : { 'outcome' : 'B' } } } },
        { 'roles' : { 'A' : { 'role' : 'Mediator', 'pattern' : { 'outcome' : 'B' } } } },
        { 'prefix' : 'not a name', 'roles' : {} },
    ])
    def test_malformed_documents(self, document):
        with pytest.raises(RoleError):
            roles_from_document(document)

    def test_relative_base_in_document(self):
        with pytest.raises(InvalidBaseIri):
            roles_from_document({ 'base_iri' : 'ad#' })

class TestValidateRoles(object):

    def test_collision_roles_are_valid(self, collision, roles):
        assert validate_roles(collision, roles).ok

    def test_unknown_variable(self, collision):
        mapping = roles_from_document({ 'roles' : { 'Hail' : 'Context' } })
        (finding,) = validate_roles(collision, mapping)
        assert finding.kind == 'role'
        assert 'unknown variable' in finding.message

    def test_treatment_must_reach_outcome(self, collision):
        mapping = roles_from_document({ 'roles' : {
            'Collision' : { 'role' : 'Treatment', 'pattern' : { 'outcome' : 'Snow' } },
            'Snow'      : 'Outcome' } })
        (finding,) = validate_roles(collision, mapping)
        assert finding.kind == 'pattern'
        assert 'is not an ancestor of outcome Snow' in finding.message

    def test_mediator_off_the_path(self, collision):
        mapping = roles_from_document({ 'roles' : {
            'DriverDistraction' : 'Treatment',
            'Rain'              : { 'role'    : 'Mediator',
                                    'pattern' : { 'treatment' : 'DriverDistraction',
                                                  'outcome'   : 'Collision' } },
            'Collision'         : 'Outcome' } })
        (finding,) = validate_roles(collision, mapping)
        assert finding.variable == 'Rain'
        assert 'not on a directed path' in finding.message

    def test_duplicate_iris(self, collision):
        mapping = roles_from_document({ 'roles' : {
            'Snow' : { 'role' : 'Context', 'iri' : 'http://example.org/ad#Rain' } },
            'base_iri' : 'http://example.org/ad#' })
        (finding,) = validate_roles(collision, mapping)
        assert 'duplicate IRI' in finding.message
