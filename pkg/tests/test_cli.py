"""
The `simil` command line: exit codes, reports and run configuration.
"""
import json
import logging

import pytest

from simil.cli.config import RunConfig
from simil.cli.demos import DEMOS
from simil.cli.main import DEGENERATE, FAILED, INPUT_ERROR, OK, main
from simil.cli.properties import SUITE_COUNTS, SUITES, run_suite
from simil.dist import JointDist
from simil.errors import FileFormatError
from simil.io import write_distribution

def _run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)

def test_check_exit_codes(capsys, fixtures_dir):
    gap = fixtures_dir / 'supermodular_gap'
    code, report = _run(capsys, 'check', 'cad', gap / 'supermodular_gap_F.yaml', gap / 'supermodular_gap_G.yaml')
    assert code == OK
    assert report['holds'] and report['reverified']

    shift = fixtures_dir / 'contour_shift'
    F, G = shift / 'contour_shift_F.yaml', shift / 'contour_shift_G.yaml'
    code, report = _run(capsys, 'check', 'cad', F, G)
    assert code == FAILED
    assert report['violation']['indices'] == {'s' : '2', 's_prime' : '3'}
    assert report['reverified']
    assert _run(capsys, 'check', 'ccad', F, G)[0] == OK
    assert _run(capsys, 'check', 'cad', G, G)[0] == OK

def test_dominant_participation_from_files(capsys, fixtures_dir):
    game = fixtures_dir / 'games' / 'dominance_game.yaml'
    dist = fixtures_dir / 'supermodular_gap' / 'supermodular_gap_F.yaml'
    code, report = _run(capsys, 'equilibria', game, dist)
    assert code == OK
    assert [e['participation'] for e in report['equilibria']] == [['0', '1']]
    assert report['stats']['max_p'] == report['stats']['min_p'] == '1'

def test_statewise_check(capsys, fixtures_dir):
    bankrun = fixtures_dir / 'bankrun'
    F, G = bankrun / 'puzzle_F.yaml', bankrun / 'puzzle_G.yaml'
    code, report = _run(capsys, 'check', 'cad-statewise', F, G)
    assert code == FAILED
    assert report['differing_states'] == ['1/2']
    # families need --statewise for pairwise orders
    assert _run(capsys, 'check', 'cad', F, G)[0] == INPUT_ERROR

def test_witness_bundle_round_trip(capsys, fixtures_dir, tmp_path):
    shift = fixtures_dir / 'contour_shift'
    F, G = shift / 'contour_shift_F.yaml', shift / 'contour_shift_G.yaml'
    bundle = tmp_path / 'witness.yaml'
    code, report = _run(capsys, 'witness', F, G, '--family', 'private-max', '--bundle', bundle)
    assert code == OK
    assert report['bundle'] == str(bundle)
    assert report['verification']['passed']

    code, report = _run(capsys, 'verify', bundle)
    assert code == OK
    assert len(report['table']) == 4

def test_no_witness_between_identical_inputs(capsys, fixtures_dir):
    G = fixtures_dir / 'contour_shift' / 'contour_shift_G.yaml'
    code, report = _run(capsys, 'witness', G, G, '--family', 'private-max')
    assert code == FAILED
    assert report['witness'] is None

def test_bad_input_exit_code(capsys, fixtures_dir, tmp_path):
    missing = tmp_path / 'missing.yaml'
    G = fixtures_dir / 'contour_shift' / 'contour_shift_G.yaml'
    assert _run(capsys, 'check', 'cad', missing, G)[0] == INPUT_ERROR
    notes = fixtures_dir / 'contour_shift' / 'provenance.yaml'
    assert _run(capsys, 'check', 'cad', notes, G)[0] == INPUT_ERROR

def test_degenerate_witness_exit_code(capsys, tmp_path, binary_space):
    # F never repeats a signal, so F_s({s}) = 0 and the congestion weight at s is undefined
    F, G = tmp_path / 'alternating.yaml', tmp_path / 'matching.yaml'
    write_distribution(JointDist(binary_space, 2, {('0', '1') : 1}), F)
    write_distribution(JointDist(binary_space, 2, {('0', '0') : "1/2", ('1', '1') : "1/2"}), G)
    assert _run(capsys, 'check', 'cad', F, G)[0] == FAILED
    code, report = _run(capsys, 'witness', F, G, '--family', 'congestion')
    assert code == DEGENERATE
    assert report is None
    assert _run(capsys, 'witness', F, G, '--family', 'private-max')[0] == OK

def test_equilibria_of_the_bank_run(capsys, fixtures_dir):
    bankrun = fixtures_dir / 'bankrun'
    code, report = _run(capsys, 'equilibria', bankrun / 'bankrun_game.yaml', bankrun / 'puzzle_G.yaml', '--cutoffs')
    assert code == OK
    assert report['game']['kind'] == 'common'
    assert isinstance(report['table'], list)

def test_validate(capsys, fixtures_dir):
    shift = fixtures_dir / 'contour_shift' / 'contour_shift_F.yaml'
    code, report = _run(capsys, 'validate', shift)
    assert code == OK
    assert report['files'][str(shift)]['passed']

    # both signals of the dominance game pay the same
    game = fixtures_dir / 'games' / 'dominance_game.yaml'
    assert _run(capsys, 'validate', game)[0] == FAILED
    assert _run(capsys, 'validate', fixtures_dir / 'bankrun' / 'bankrun_game.yaml')[0] == INPUT_ERROR
    assert _run(capsys, 'validate', fixtures_dir / 'bankrun' / 'bankrun_game.yaml', '--players', 2)[0] == OK

@pytest.mark.parametrize('name', sorted(DEMOS))
def test_demos_pass(capsys, name):
    code, report = _run(capsys, 'demo', name)
    assert code == OK
    assert report['passed']
    assert all(check['passed'] for check in report['checks'])

def test_report_written_to_file(capsys, tmp_path):
    out = tmp_path / 'reports' / 'sweep.csv'
    code = main(['bankrun-sweep', '--points', '3', '--format', 'csv', '--out', str(out)])
    assert code == OK
    assert capsys.readouterr().out == ''
    lines = out.read_text().splitlines()
    assert lines[0].startswith('a,a_float,eG,eB')
    assert len(lines) == 4

def test_property_command(capsys):
    code, report = _run(capsys, 'property', 'orders', '--seed', 7, '--count', 5)
    assert code == OK
    assert report['seed'] == 7 and report['count'] == 5
    assert report['suites'][0]['instances'] == 5

def test_suites_are_deterministic():
    first = run_suite('rationalize', 11, 5).to_dict()
    second = run_suite('rationalize', 11, 5).to_dict()
    assert first == second

@pytest.mark.slow
@pytest.mark.parametrize('name', sorted(SUITES))
def test_property_suites_pass(name):
    result = run_suite(name, 20240917)
    assert result.report['count'] == SUITE_COUNTS[name]
    assert result.passed, result.to_dict()['checks']

def test_every_suite_has_a_default_count():
    assert set(SUITE_COUNTS) == set(SUITES)
    assert RunConfig().count is None
    assert run_suite('expected-count', 3, 20).passed

def test_run_config(tmp_path, caplog):
    path = tmp_path / 'run.yaml'
    path.write_text("seed: 3\npoints: 5\ncolour: blue\nparams:\n  epsilon: 1/20\n")
    with caplog.at_level(logging.WARNING):
        config = RunConfig.from_yaml(path)
    assert 'colour' in caplog.text
    assert (config.seed, config.points) == (3, 5)
    assert config.updated(seed = None, points = 7).to_dict()['points'] == 7
    assert config.params == {'epsilon' : '1/20'}
    with pytest.raises(FileFormatError):
        RunConfig(format = 'xml')
    with pytest.raises(FileFormatError):
        RunConfig(points = 1)

def test_run_config_supplies_defaults(capsys, tmp_path):
    path = tmp_path / 'run.yaml'
    path.write_text("points: 3\nparams:\n  preset: intro\n")
    code, report = _run(capsys, 'bankrun-sweep', '--config', path)
    assert code == OK
    assert report['params']['preset'] == 'intro'
    assert len(report['table']) == 3
