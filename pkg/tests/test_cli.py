# encoding: utf-8
from __future__ import print_function

import io
import json
import pytest

from causalkg.cli import main
from causalkg.network.inference import marginal
from causalkg.network.modelfile import read_model, network_to_document

def run(*argv):
    """ Run the command line, returning (status, stdout, stderr) """
    out, err = io.StringIO(), io.StringIO()
    status = main(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()

def paths(directory):
    return str(directory / 'collision.json'), str(directory / 'roles.json')

def test_example_writes_its_files(tmp_path):
    status, out, _ = run('example', '-o', str(tmp_path))
    assert status == 0
    assert sorted(path.name for path in tmp_path.iterdir()) == \
           ['README.md', 'collision.json', 'roles.json']
    assert 'collision.json' in out
    readme = (tmp_path / 'README.md').read_text(encoding='utf-8')
    assert "NDE(DriverDistraction -> Collision | via SuddenLaneChange)" in readme

def test_unknown_example(tmp_path):
    status, _, err = run('example', 'traffic-jam', '-o', str(tmp_path))
    assert status == 2
    assert "collision" in err

def test_validate(example_dir):
    model, _ = paths(example_dir)
    status, out, err = run('validate', model)
    assert status == 0
    assert out == "ok: 8 variables, 9 edges\n"
    assert err == ""

def test_validate_as_json(example_dir):
    model, _ = paths(example_dir)
    status, out, _ = run('validate', model, '--format=json')
    assert status == 0
    assert json.loads(out) == { 'ok' : True, 'findings' : [] }

def test_missing_file(tmp_path):
    status, _, err = run('validate', str(tmp_path / 'nowhere.json'))
    assert status == 3
    assert err.startswith("causalkg: cannot read")

def test_cyclic_model(tmp_path):
    path = tmp_path / 'cycle.json'
    document = { 'variables' : [{ 'name' : 'A', 'states' : ['f', 't'], 'parents' : ['B'] },
                                { 'name' : 'B', 'states' : ['f', 't'], 'parents' : ['A'] }] }
    path.write_text(json.dumps(document), encoding='utf-8')
    status, out, err = run('validate', str(path))
    assert status == 2
    assert out == ""
    assert "cycle" in err

@pytest.mark.parametrize('argv', [
    ('frobnicate',),
    ('query',),
    ('validate', 'a.json', '--no-such-flag'),
])
def test_usage_errors(argv):
    status, _, err = run(*argv)
    assert status == 2
    assert "usage" in err.lower()

def test_bad_option_values(example_dir):
    model, _ = paths(example_dir)
    assert run('validate', model, '--format=yaml')[0] == 2
    assert run('validate', model, '--engine=gibbs')[0] == 2
    assert run('sample', model, 'ten')[0] == 2

def test_help_and_version(capsys):
    assert main(['--version'], out=io.StringIO(), err=io.StringIO()) == 0
    assert main(['--help'], out=io.StringIO(), err=io.StringIO()) == 0
    assert "Usage:" in capsys.readouterr().out

def test_effects(example_dir):
    model, _ = paths(example_dir)
    status, out, _ = run('effects', model, '--treatment=DriverDistraction',
                         '--outcome=Collision', '--mediator=SuddenLaneChange')
    assert status == 0
    assert out.splitlines()[1:] == ["TCE = 0.2358", "NDE = 0.1140", "NIE = 0.0703"]

def test_effects_as_json(example_dir, goldens):
    model, _ = paths(example_dir)
    status, out, _ = run('effects', model, '--treatment=DriverDistraction',
                         '--outcome=Collision', '--mediator=SuddenLaneChange',
                         '--format=json', '--engine=enumerate')
    assert status == 0
    document = json.loads(out)
    expected = goldens['collision']['effects']
    for key in ('tce', 'nde', 'nie', 'nie_reversed'):
        assert document[key] == pytest.approx(expected[key], abs=1e-9)
    assert document['mediator'] == 'SuddenLaneChange'

def test_effects_with_unknown_variable(example_dir):
    model, _ = paths(example_dir)
    status, _, err = run('effects', model, '--treatment=Hail', '--outcome=Collision')
    assert status == 2
    assert "Hail" in err

def test_build_is_deterministic(example_dir):
    model, roles = paths(example_dir)
    first, second = example_dir / 'first.ttl', example_dir / 'second.ttl'
    assert run('build', model, '--roles=' + roles, '-o', str(first))[0] == 0
    assert run('build', model, '--roles=' + roles, '-o', str(second))[0] == 0
    assert first.read_bytes() == second.read_bytes()
    status, out, _ = run('build', model, '--roles=' + roles)
    assert status == 0
    assert out.encode('utf-8') == first.read_bytes()
    assert "ckg:causesWith ad:SuddenLaneChange" in out

def test_build_with_broken_roles(example_dir):
    model, _ = paths(example_dir)
    roles = example_dir / 'broken.json'
    roles.write_text(json.dumps({ 'roles' : { 'Hail' : 'Context' } }), encoding='utf-8')
    status, _, err = run('build', model, '--roles=' + str(roles))
    assert status == 2
    assert "unknown variable" in err

def test_query(example_dir):
    model, _ = paths(example_dir)
    status, out, _ = run('query', model, "P(Snow=true | do(Collision=true))")
    assert status == 0
    assert out == "P(Snow=true | do(Collision=true)) = 0.2000\n"

def test_query_with_explanation(example_dir):
    model, roles = paths(example_dir)
    kg = str(example_dir / 'collision.ttl')
    assert run('build', model, '--roles=' + roles, '-o', kg)[0] == 0
    status, out, _ = run('query', model,
                         "NDE(DriverDistraction -> Collision | via SuddenLaneChange)",
                         '--kg=' + kg, '--explain')
    assert status == 0
    assert out.startswith("NDE(DriverDistraction -> Collision | via SuddenLaneChange) = 0.1140\n")
    assert "[domain (counterfactual)]" in out
    assert "Mediated (ckg:causesWith) by: SuddenLaneChange." in out

def test_query_as_json(example_dir, goldens):
    model, _ = paths(example_dir)
    status, out, _ = run('query', model, "P(Collision=true)", '--format=json')
    assert status == 0
    document = json.loads(out)
    assert document['rung'] == 'associational'
    assert document['value'] == pytest.approx(goldens['collision']['marginals']['Collision'])

def test_malformed_query(example_dir):
    model, _ = paths(example_dir)
    status, out, err = run('query', model, "P(Collision=true |)")
    assert status == 2
    assert out == ""
    assert "condition" in err

def test_shell(example_dir, monkeypatch):
    model, _ = paths(example_dir)
    lines = ["# collision questions",
             "P(Collision=true)",
             "",
             "P(Hail=true)",
             "TCE(DriverDistraction -> Collision)",
             "P(Snow=true | do(Collision=true))",
             ":quit",
             "P(Rain=true)"]
    monkeypatch.setattr('sys.stdin', io.StringIO("\n".join(lines) + "\n"))
    status, out, _ = run('shell', model)
    assert status == 0
    answers = out.splitlines()
    assert len(answers) == 4
    assert answers[0].startswith("P(Collision=true) = 0.1165")
    assert answers[1].startswith("error: ")
    assert answers[2] == "TCE(DriverDistraction -> Collision) = 0.2358"
    assert answers[3] == "P(Snow=true | do(Collision=true)) = 0.2000"

@pytest.mark.slow
def test_sample_then_fit(example_dir, goldens):
    model, _ = paths(example_dir)
    data = example_dir / 'data.csv'
    assert run('sample', model, '100000', '--seed=42', '-o', str(data))[0] == 0
    skeleton = example_dir / 'skeleton.json'
    document = network_to_document(read_model(model))
    for entry in document['variables']:
        del entry['cpt']
    skeleton.write_text(json.dumps(document), encoding='utf-8')
    fitted = example_dir / 'fitted.json'
    assert run('fit', str(skeleton), str(data), '-o', str(fitted))[0] == 0
    recovered = read_model(str(fitted))
    for name, expected in goldens['collision']['marginals'].items():
        assert marginal(recovered, name).probability({ name : 'true' }) == \
               pytest.approx(expected, abs=0.02)

def test_sampling_is_seeded(example_dir):
    model, _ = paths(example_dir)
    first = run('sample', model, '50', '--seed=7')[1]
    assert first == run('sample', model, '50', '--seed=7')[1]
    assert first != run('sample', model, '50', '--seed=8')[1]
    header, *rows = first.splitlines()
    assert header.split(',')[0] == 'CellphoneUse'
    assert len(rows) == 50

def test_fit_without_smoothing_on_sparse_data(example_dir):
    model, _ = paths(example_dir)
    data = example_dir / 'few.csv'
    assert run('sample', model, '5', '-o', str(data))[0] == 0
    status, _, err = run('fit', model, str(data), '--alpha=0')
    assert status == 2
    assert err.startswith("causalkg: ")
