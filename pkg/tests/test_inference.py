# encoding: utf-8
from __future__ import print_function

import numpy
import pytest

from hypothesis import given
from hypothesis.strategies import data, just, sampled_from, sets

from causalkg.errors import OverlappingQuery, ZeroProbabilityEvidence, UnknownVariable
from causalkg.network.factor import Factor
from causalkg.network.inference import (Engine, Distribution, joint_probability,
                                        query, query_enumerate, query_ve,
                                        elimination_order, marginal)
from causalkg.network.model import Variable, CptRow, Cpt, CausalBayesianNetwork

from .strategies import networks, brute_probability, close, STATES

ALL_FALSE = { 'CellphoneUse'        : 'false',
              'Alcohol'             : 'false',
              'Snow'                : 'false',
              'Rain'                : 'false',
              'DriverDistraction'   : 'false',
              'SlipperyRoad'        : 'false',
              'SuddenLaneChange'    : 'false',
              'Collision'           : 'false' }

def test_joint_probability(collision, goldens):
    assert joint_probability(collision, ALL_FALSE) == \
           pytest.approx(goldens['collision']['joint_all_false'], abs=1e-12)

@pytest.mark.parametrize('engine', ['ve', 'enumerate'])
@pytest.mark.parametrize('name', ['Snow', 'SlipperyRoad', 'DriverDistraction', 'Collision'])
def test_marginals(collision, goldens, engine, name):
    expected = goldens['collision']['marginals'][name]
    distribution = marginal(collision, name, engine=engine)
    assert distribution.probability({ name : 'true' }) == pytest.approx(expected, abs=1e-9)
    assert distribution.total() == pytest.approx(1.0)

@pytest.mark.parametrize('engine', list(Engine))
def test_conditional(collision, goldens, engine):
    distribution = query(collision, ('Collision',), { 'CellphoneUse' : 'true' }, engine=engine)
    assert distribution[{ 'Collision' : 'true' }] == \
           pytest.approx(goldens['collision']['collision_given_cellphone'], abs=1e-9)

def test_engine_strings():
    assert Engine.of(None) is Engine.VE
    assert Engine.of('enumerate') is Engine.ENUMERATE
    assert str(Engine.VE) == 've'
    with pytest.raises(ValueError):
        Engine.of('gibbs')

def test_overlapping_query(collision):
    with pytest.raises(OverlappingQuery):
        query(collision, ('Snow',), { 'Snow' : 'true' })

def test_unknown_target(collision):
    with pytest.raises(UnknownVariable):
        query(collision, ('Hail',))

def test_zero_probability_evidence():
    a = Variable('A', STATES)
    b = Variable('B', STATES, None, ('A',))
    model = CausalBayesianNetwork((a, b),
                                  (Cpt('A', (CptRow((), (1.0, 0.0)),)),
                                   Cpt('B', (CptRow(('s0',), (0.5, 0.5)),
                                             CptRow(('s1',), (0.5, 0.5))))))
    for engine in Engine:
        with pytest.raises(ZeroProbabilityEvidence):
            query(model, ('B',), { 'A' : 's1' }, engine=engine)

def test_distribution_marginal_and_dict():
    distribution = Distribution(('A', 'B'), (STATES, STATES),
                                numpy.array([[0.1, 0.2], [0.3, 0.4]]))
    assert distribution.probability({ 'A' : 's1' }) == pytest.approx(0.7)
    assert distribution.marginal(('B',)).table.tolist() == pytest.approx([0.4, 0.6])
    assert distribution.to_dict()['A=s0,B=s1'] == pytest.approx(0.2)
    assert distribution.expectation('B', (0.0, 10.0)) == pytest.approx(6.0)
    with pytest.raises(KeyError):
        distribution.probability({ 'C' : 's0' })

def test_factor_product_and_marginalize():
    f = Factor(('A',), numpy.array([0.25, 0.75]))
    g = Factor(('A', 'B'), numpy.array([[0.5, 0.5], [0.1, 0.9]]))
    product = (f * g).marginalize('A')
    assert product.scope == ('B',)
    assert product.values.tolist() == pytest.approx([0.2, 0.8])

def test_elimination_order_is_deterministic(collision):
    factors = [Factor.from_cpt(collision, name) for name in collision.names]
    hidden = [name for name in collision.names if name != 'Collision']
    first = elimination_order(factors, hidden)
    assert sorted(first) == sorted(hidden)
    assert elimination_order(factors, hidden) == first
    # the four roots each touch two variables; the first one declared goes first
    assert first[0] == 'CellphoneUse'

@given(data())
def test_engines_agree_with_brute_force(data):
    model = data.draw(networks())
    names = model.names
    target = data.draw(sampled(names))
    others = [name for name in names if name != target]
    observed = data.draw(subsets(others))
    evidence = { name : data.draw(sampled(STATES)) for name in sorted(observed) }
    enumerated = query_enumerate(model, (target,), evidence)
    eliminated = query_ve(model, (target,), evidence)
    assert numpy.allclose(enumerated.table, eliminated.table, rtol=0.0, atol=1e-9)
    assert close(eliminated.probability({ target : 's1' }),
                 brute_probability(model, { target : 's1' }, evidence))

@given(data())
def test_joint_query_matches_brute_force(data):
    model = data.draw(networks(min_size=3))
    first, second = data.draw(sampled(model.names)), data.draw(sampled(model.names))
    if first == second:
        return
    distribution = query_ve(model, (first, second))
    for assignment, p in distribution.items():
        assert close(p, brute_probability(model, assignment))

def sampled(values):
    return sampled_from(tuple(values))

def subsets(values):
    if not values:
        return just(frozenset())
    return sets(sampled_from(tuple(values)), max_size=len(values))
