# encoding: utf-8
from __future__ import print_function

import numpy
import pytest

from causalkg.errors import ModelError, MissingColumn, UnestimableRow, UnknownState
from causalkg.network.model import Variable, CausalBayesianNetwork
from causalkg.network.sampling import Dataset, sample, fit_cpts

BINARY = ('f', 't')

@pytest.fixture
def skeleton():
    return CausalBayesianNetwork((Variable('A', BINARY),
                                  Variable('B', BINARY, parents=('A',))))

def rows(*pairs):
    return Dataset.from_rows(('A', 'B'), ({ 'A' : a, 'B' : b } for a, b in pairs))

OBSERVED = rows(('f', 'f'), ('f', 't'), ('t', 't'), ('t', 't'), ('t', 'f'))

def test_fit_with_smoothing(skeleton):
    fitted = fit_cpts(skeleton, OBSERVED, alpha=1.0)
    numpy.testing.assert_allclose(fitted.table('A'), [3/7, 4/7])
    numpy.testing.assert_allclose(fitted.table('B'), [[2/4, 2/4],
                                                      [2/5, 3/5]])

def test_fit_maximum_likelihood(skeleton):
    fitted = fit_cpts(skeleton, OBSERVED, alpha=0)
    numpy.testing.assert_allclose(fitted.table('A'), [0.4, 0.6])
    numpy.testing.assert_allclose(fitted.table('B'), [[0.5, 0.5],
                                                      [1/3, 2/3]])

def test_unobserved_parent_configuration(skeleton):
    data = rows(('f', 'f'), ('f', 't'))
    with pytest.raises(UnestimableRow) as info:
        fit_cpts(skeleton, data, alpha=0)
    assert info.value.variable == 'B'
    assert info.value.given == { 'A' : 't' }
    smoothed = fit_cpts(skeleton, data, alpha=1)
    numpy.testing.assert_allclose(smoothed.table('B')[1], [0.5, 0.5])

def test_fit_rejects_bad_data(skeleton):
    with pytest.raises(MissingColumn):
        fit_cpts(skeleton, Dataset.from_rows(('A',), [{ 'A' : 'f' }]))
    with pytest.raises(UnknownState):
        fit_cpts(skeleton, rows(('f', 'maybe')))
    with pytest.raises(ModelError):
        fit_cpts(skeleton, OBSERVED, alpha=-1)

def test_sample_is_seeded(collision):
    first = sample(collision, 200, seed=3)
    assert first == sample(collision, 200, seed=3)
    assert first != sample(collision, 200, seed=4)
    assert first.columns == tuple(collision.names)
    assert len(first) == 200
    for name in collision.names:
        assert set(first.column(name)) <= set(collision.variable(name).states)

def test_sample_nothing(collision):
    assert len(sample(collision, 0)) == 0
    with pytest.raises(ModelError):
        sample(collision, -1)

def test_sample_frequencies(collision, goldens):
    data = sample(collision, 100000, seed=42)
    for name, expected in goldens['collision']['marginals'].items():
        observed = (data.column(name) == 'true').mean()
        assert observed == pytest.approx(expected, abs=0.01)

@pytest.mark.slow
@pytest.mark.parametrize('seed', [42, 43])
def test_fit_recovers_every_cpt_entry(collision, seed):
    fitted = fit_cpts(collision.skeleton(), sample(collision, 100000, seed=seed), alpha=1)
    for name in collision.names:
        expected = collision.tables[name]
        assert fitted.tables[name].shape == expected.shape
        assert fitted.tables[name].ravel().tolist() == \
               pytest.approx(expected.ravel().tolist(), abs=0.02)
