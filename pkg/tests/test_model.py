# encoding: utf-8
from __future__ import print_function

import json
import pytest

from causalkg.errors import (UnknownVariable, UnknownState, IncompleteAssignment,
                             InvalidModel, FormatError)
from causalkg.fixtures import collision_network
from causalkg.network.model import Variable, CptRow, Cpt, CausalBayesianNetwork
from causalkg.network.modelfile import (read_model, write_model, network_from_document,
                                        network_to_document)
from causalkg.network.validation import validate

def coin(name='A', parents=()):
    return Variable(name, ('false', 'true'), None, tuple(parents))

def chain():
    a, b = coin('A'), coin('B', ('A',))
    cpts = (Cpt('A', (CptRow((), (0.4, 0.6)),)),
            Cpt('B', (CptRow(('false',), (0.9, 0.1)),
                      CptRow(('true',), (0.2, 0.8)))))
    return CausalBayesianNetwork((a, b), cpts)

class TestVariable(object):

    def test_codings_default_to_state_index(self):
        assert coin().codings == (0.0, 1.0)
        assert Variable('T', ('lo', 'mid', 'hi'), (1, 5, 10)).codings == (1.0, 5.0, 10.0)

    def test_unknown_state(self):
        with pytest.raises(UnknownState):
            coin().index('maybe')

    def test_detached_drops_parents(self):
        assert coin('B', ('A',)).detached().parents == ()

class TestNetwork(object):

    def test_structure(self, collision, goldens):
        assert len(collision) == goldens['collision']['variables']
        assert len(collision.edges) == goldens['collision']['edges']
        assert collision.parents('Collision') == ('SuddenLaneChange',
                                                  'DriverDistraction',
                                                  'SlipperyRoad')
        assert collision.children('DriverDistraction') == ('SuddenLaneChange', 'Collision')
        assert collision.has_path('Alcohol', 'Collision')
        assert not collision.has_path('Collision', 'Alcohol')
        assert 'Snow' in collision.ancestors('Collision')
        assert collision.topological_order.index('Rain') < \
               collision.topological_order.index('SlipperyRoad')

    def test_unknown_variable(self, collision):
        with pytest.raises(UnknownVariable):
            collision.variable('Hail')
        assert 'Hail' not in collision

    def test_check_assignment(self, collision):
        assert collision.check_assignment({ 'Snow' : 'true' }) == { 'Snow' : 1 }
        with pytest.raises(UnknownState):
            collision.check_assignment({ 'Snow' : 'heavy' })
        with pytest.raises(IncompleteAssignment):
            collision.check_assignment({ 'Snow' : 'true' }, complete=True)

    def test_table_shape(self, collision):
        table = collision.table('Collision')
        assert table.shape == (2, 2, 2, 2)
        # LaneChange=true, Distraction=true, Slippery=false:
        assert table[1, 1, 0, 1] == pytest.approx(0.45)
        assert table[0, 0, 1, 1] == pytest.approx(0.08)

    def test_skeleton_is_invalid_but_structurally_sound(self, collision):
        skeleton = collision.skeleton()
        assert not skeleton.report.ok
        assert set(skeleton.report.kinds) == { 'cpt' }
        assert validate(skeleton, cpts=False).ok
        with pytest.raises(InvalidModel):
            skeleton.require_valid()

class TestValidation(object):

    def test_collision_is_valid(self, collision):
        assert validate(collision).ok

    def test_cycle_is_named(self):
        a, b = coin('A', ('B',)), coin('B', ('A',))
        report = validate(CausalBayesianNetwork((a, b)), cpts=False)
        assert report.kinds == ('cycle',)
        assert 'A' in str(report) and 'B' in str(report)

    def test_row_sum(self):
        model = chain()
        broken = model.replaced(model.variable('A'),
                                Cpt('A', (CptRow((), (0.5, 0.6)),)))
        report = validate(broken)
        assert report.kinds == ('cpt',)
        assert report[0].variable == 'A'

    @pytest.mark.parametrize('owner,row', [(cpt.owner, row.given) \
                                           for cpt in collision_network().cpts \
                                           for row in cpt.rows])
    def test_any_broken_row_is_one_finding(self, collision, owner, row):
        cpt = collision.cpt(owner)
        rows = tuple(CptRow(entry.given, (entry.dist[0] + 0.1,) + entry.dist[1:]) \
                     if entry.given == row else entry for entry in cpt.rows)
        broken = collision.replaced(collision.variable(owner), Cpt(owner, rows))
        report = validate(broken)
        assert report.kinds == ('cpt',)
        assert report[0].variable == owner
        assert report[0].row == row

    def test_missing_row(self):
        model = chain()
        broken = model.replaced(model.variable('B'),
                                Cpt('B', (CptRow(('false',), (0.9, 0.1)),)))
        (finding,) = validate(broken)
        assert 'missing' in finding.message

    def test_unknown_parent_and_single_state(self):
        model = CausalBayesianNetwork((Variable('A', ('only',)),
                                       coin('B', ('Ghost',))))
        messages = [finding.message for finding in validate(model, cpts=False)]
        assert any('two states' in message for message in messages)
        assert any('unknown parent Ghost' in message for message in messages)

class TestModelFile(object):

    def test_round_trip(self, tmp_path, collision):
        path = str(tmp_path / 'collision.json')
        write_model(collision, path)
        again = read_model(path)
        assert network_to_document(again) == network_to_document(collision)
        assert again.table('Collision').tolist() == collision.table('Collision').tolist()

    def test_missing_file(self, tmp_path):
        with pytest.raises(FormatError):
            read_model(str(tmp_path / 'nowhere.json'))

    def test_invalid_json(self, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text("{ \"variables\": [", encoding='utf-8')
        with pytest.raises(FormatError):
            read_model(str(path))

    def test_dist_with_undeclared_state(self):
        document = { 'variables' : [{ 'name'    : 'A',
                                      'states'  : ['false', 'true'],
                                      'cpt'     : [{ 'given' : {},
                                                     'dist'  : { 'false' : 0.5,
                                                                 'maybe' : 0.5 } }] }] }
        with pytest.raises(FormatError):
            network_from_document(document)

    def test_skeleton_document(self):
        document = json.loads('{"variables": [{"name": "A", "states": ["x", "y"]}]}')
        model = network_from_document(document)
        assert model.cpts == ()
        assert validate(model, cpts=False).ok

def test_package_api():
    import causalkg
    assert causalkg.__version__ == '0.1.0'
    assert causalkg.CausalBayesianNetwork is CausalBayesianNetwork
    assert all(hasattr(causalkg, name) for name in causalkg.__all__)

def test_static_namespace():
    from causalkg.utils.static import static_namespace, tests
    assert static_namespace('tests') is tests
    assert 'goldens.json' in tests.listfiles()
    assert tests.json('goldens.json')['collision']['marginals']['Snow'] == pytest.approx(0.2)
