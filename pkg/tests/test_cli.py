import json

import pytest

from seqgen.compiler import compile_plan
from seqgen.mps import fidelity, mps_from_dense, product_state
from seqgen.parser import (read_csv, read_json, read_plan, read_state,
                           write_plan, write_state)
from seqgen.recipes import cluster_state
from seqgen.scripts import (compile_state, make_recipe, physics_sweep,
                            verify_plan)
from seqgen.scripts.cli import SeqgenCli


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_recipe_w(workdir):
    assert make_recipe.main(['w', '-n', '4']) == 0
    for fn in ('w_4.json', 'w_4.plan.json', 'w_4.adiabatic.plan.json',
               'w_4.report.json'):
        assert (workdir / fn).exists()
    report = read_json('w_4.report.json')
    assert report['command'] == 'recipe'
    assert report['bond_profile'] == [1, 2, 2, 2, 1]
    assert report['decoupled'] is True
    assert 'timings' not in report
    for f in report['fidelities'].values():
        assert f > 1 - 1e-10


def test_recipe_ghz(workdir):
    assert make_recipe.main(['ghz', '-n', '5']) == 0
    report = read_json('ghz_5.report.json')
    assert report['bond_profile'] == [1, 2, 2, 2, 2, 1]
    assert report['fidelities']['adiabatic_plan'] > 1 - 1e-10


def test_recipe_cluster_angles(workdir):
    assert make_recipe.main(['cluster', '-n', '4',
                             '--theta', '0.7853981633974483']) == 0
    state = read_state('cluster_4.json')
    assert fidelity(state, cluster_state(4)) > 1 - 1e-12


def test_recipe_atomic(workdir):
    assert make_recipe.main(['atomic-cluster', '-n', '3',
                             '--outcome', '1']) == 0
    report = read_json('atomic-cluster_3.report.json')
    assert report['fidelities']['closed_form'] > 1 - 1e-10
    assert report['decoupled'] is None
    assert not (workdir / 'atomic-cluster_3.plan.json').exists()


def test_recipe_rejects_single_qubit(workdir, capsys):
    assert make_recipe.main(['w', '-n', '1']) == 2
    assert 'seqgen: error' in capsys.readouterr().err


def test_compile_roundtrip(workdir, w4):
    write_state('w4.json', w4)
    assert compile_state.main(['-s', 'w4.json', '--timings']) == 0
    plan = read_plan('w4.plan.json')
    assert plan.ancilla_dim == 2
    report = read_json('w4.plan.report.json')
    assert report['fidelities']['roundtrip'] > 1 - 1e-12
    assert report['extra']['schedule'] == [[4, 2], [4, 2], [4, 2], [2, 2]]
    assert report['extra']['max_residual'] < 1e-12
    assert set(report['timings']) == {'read', 'compile', 'verify'}
    assert len(report['inputs_digest']) == 64


def test_compile_product_state(workdir):
    write_state('prod.json', product_state([0, 1, 1]))
    assert compile_state.main(['-s', 'prod.json', '-o', 'p.json']) == 0
    assert read_plan('p.json').ancilla_dim == 1
    assert read_json('p.report.json')['bond_profile'] == [1, 1, 1, 1]


def test_compile_bad_input(workdir):
    (workdir / 'bad.json').write_text('{"n": 2, ')
    assert compile_state.main(['-s', 'bad.json']) == 2
    (workdir / 'unnorm.json').write_text(json.dumps(
        {'n': 1, 'dims': [2], 'amps': [[1.0, 0.0], [1.0, 0.0]]}))
    assert compile_state.main(['-s', 'unnorm.json']) == 2
    assert compile_state.main(['-s', 'missing.json']) == 2


def test_verify(workdir, w4):
    write_state('w4.json', w4)
    write_plan('w4.plan.json', compile_plan(mps_from_dense(w4)))
    assert verify_plan.main(['-p', 'w4.plan.json', '-s', 'w4.json']) == 0
    report = read_json('w4.plan.verify.report.json')
    assert report['fidelities']['target'] > 1 - 1e-12
    assert report['decoupled'] is True


def test_verify_other_target(workdir, w4):
    assert make_recipe.main(['ghz', '-n', '4']) == 0
    write_plan('w4.plan.json', compile_plan(mps_from_dense(w4)))
    assert verify_plan.main(['-p', 'w4.plan.json', '-s', 'ghz_4.json',
                             '-o', 'r.json']) == 0
    assert read_json('r.json')['fidelities']['target'] < 1e-20


def test_verify_tampered_plan(workdir, w4):
    write_state('w4.json', w4)
    write_plan('w4.plan.json', compile_plan(mps_from_dense(w4)))
    data = read_json('w4.plan.json')
    data['steps'][1][0][0] = [3.0, 0.0]
    (workdir / 'w4.plan.json').write_text(json.dumps(data))
    assert verify_plan.main(['-p', 'w4.plan.json', '-s', 'w4.json',
                             '-o', 'r.json']) == 3
    report = read_json('r.json')
    assert report['extra']['failed_steps'] == [2]
    assert report['fidelities'] == {}


def test_physics_sweep_default(workdir, capsys):
    assert physics_sweep.main([]) == 0
    rows = read_csv('sweep.csv')
    assert [float(r['Delta_over_g']) for r in rows] == [50, 100, 200, 400]
    assert all(r['level'] == 'full' for r in rows)
    report = read_json('sweep.report.json')
    assert report['extra']['monotone'] is True
    assert report['extra']['points'] == 4
    assert report['extra']['max_leakage'] < 1e-8
    assert 'Monotone in |Delta|: yes' in capsys.readouterr().out


def test_physics_sweep_single_point_json(workdir):
    assert physics_sweep.main(['--delta', '200', '--level', 'adiabatic',
                               '--format', 'json']) == 0
    rows = read_json('sweep.json')
    assert len(rows) == 1
    assert rows[0]['infidelity'] < 1e-12
    assert rows[0]['n_max'] == 4


def test_physics_sweep_bad_grid(workdir):
    assert physics_sweep.main(['--delta', '0']) == 2
    assert physics_sweep.main(['--workers', '0']) == 2


def test_physics_sweep_workers(workdir):
    args = ['--delta', '50', '100', '--omega', '1', '0.5']
    assert physics_sweep.main(args + ['-o', 'one.csv']) == 0
    assert physics_sweep.main(args + ['--workers', '2', '-o', 'two.csv']) == 0
    assert read_csv('one.csv') == read_csv('two.csv')


def test_outdir(workdir, monkeypatch):
    monkeypatch.setenv('SEQGEN_OUTDIR', str(workdir / 'out'))
    assert make_recipe.main(['ghz', '-n', '3']) == 0
    assert (workdir / 'out' / 'ghz_3.json').exists()
    assert (workdir / 'out' / 'ghz_3.report.json').exists()
    assert not (workdir / 'ghz_3.json').exists()


def test_log_file(workdir):
    assert make_recipe.main(['w', '-n', '3', '-l', 'run.log']) == 0
    assert 'Bond profile: [1, 2, 2, 1]' in (workdir / 'run.log').read_text()


def test_outputs_are_deterministic(workdir):
    make_recipe.main(['w', '-n', '5', '-o', 'a.json'])
    make_recipe.main(['w', '-n', '5', '-o', 'b.json'])
    for suffix in ('.json', '.plan.json', '.report.json'):
        assert ((workdir / ('a' + suffix)).read_bytes()
                == (workdir / ('b' + suffix)).read_bytes())


def test_cli_dispatch(workdir):
    assert SeqgenCli(['recipe', 'ghz', '-n', '3']).status == 0
    assert SeqgenCli(['physics-sweep', '--delta', '0']).status == 2
    assert SeqgenCli(['bogus']).status == 2
    assert SeqgenCli(['_recipe']).status == 2
    with pytest.raises(SystemExit):
        SeqgenCli(['--version'])


def test_recipe_random_is_seeded(workdir):
    assert make_recipe.main(['random', '-n', '6', '-D', '3', '--seed', '5',
                             '-o', 'a.json']) == 0
    assert make_recipe.main(['random', '-n', '6', '-D', '3', '--seed', '5',
                             '-o', 'b.json']) == 0
    assert make_recipe.main(['random', '-n', '6', '-D', '3', '--seed', '6',
                             '-o', 'c.json']) == 0
    assert (workdir / 'a.json').read_bytes() == (workdir / 'b.json').read_bytes()
    assert (workdir / 'a.json').read_bytes() != (workdir / 'c.json').read_bytes()
    report = read_json('a.report.json')
    assert report['bond_profile'] == [1, 2, 3, 3, 3, 2, 1]
    assert report['extra']['D'] == 3
    assert report['fidelities']['plan'] > 1 - 1e-10
    assert make_recipe.main(['random', '-n', '4', '-D', '0']) == 2


@pytest.mark.parametrize('fields', [{'dims': 2}, {'dims': ['x']},
                                    {'n': 'two'}])
def test_compile_mistyped_state(workdir, capsys, fields):
    data = {'n': 2, 'dims': [2, 2],
            'amps': [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]}
    data.update(fields)
    (workdir / 'typed.json').write_text(json.dumps(data))
    assert compile_state.main(['-s', 'typed.json']) == 2
    assert 'seqgen: error' in capsys.readouterr().err


@pytest.mark.parametrize('fields', [{'D': '2'}, {'steps': 'none'},
                                    {'schedule': [[None, 2]]}])
def test_verify_mistyped_plan(workdir, capsys, w4, fields):
    write_state('w4.json', w4)
    write_plan('w4.plan.json', compile_plan(mps_from_dense(w4)))
    data = read_json('w4.plan.json')
    data.update(fields)
    (workdir / 'w4.plan.json').write_text(json.dumps(data))
    assert verify_plan.main(['-p', 'w4.plan.json', '-s', 'w4.json']) == 2
    assert 'seqgen: error' in capsys.readouterr().err


@pytest.mark.parametrize('extra', [['--theta', '0.1', '0.7', '0.9'],
                                   ['--phi', '0.1', '0.2']])
def test_recipe_ghz_takes_single_angles(workdir, extra):
    assert make_recipe.main(['ghz', '-n', '3'] + extra) == 2
    assert not (workdir / 'ghz_3.json').exists()
