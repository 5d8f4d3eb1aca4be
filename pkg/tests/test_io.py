"""
Reading and writing instance files, provenance notes and reports.
"""
from fractions import Fraction
import json
import logging

import pandas as pd
import pytest

from simil import instances
from simil.applications.bankrun import bank_run_game
from simil.dist import NonExchJointDist, validate
from simil.errors import FileFormatError, InvalidDistributionError
from simil.io import (
    DistributionReader, FamilyReader, FixtureSet, GameReader, WitnessBundleReader,
    distribution_from_dict, distribution_to_dict, open_file, render_report, write_bundle,
    write_distribution, write_game, write_report,
)
from simil.io.writers import write_text
from simil.witnesses import PRIVATE_MAX, verify_package, witness_from_verdict

def test_fixture_set_finds_every_instance(fixtures_dir):
    fixtures = FixtureSet(fixtures_dir)
    assert len(fixtures) == 10
    assert len(fixtures.distributions) == 6
    assert len(fixtures.families) == 2
    assert len(fixtures.games) == 2
    assert fixtures.bundles == []
    assert 'contour_shift_F' in fixtures
    with pytest.raises(KeyError):
        fixtures['provenance']

def test_fixtures_match_the_instances(fixtures_dir):
    fixtures = FixtureSet(fixtures_dir)
    F, G = instances.contour_shift_pair()
    assert fixtures['contour_shift_F'].dist == F
    assert fixtures['contour_shift_G'].dist == G

    gap_F, gap_G = instances.supermodular_gap_pair()
    assert fixtures['supermodular_gap_F'].dist == gap_F
    assert fixtures['supermodular_gap_G'].dist == gap_G

    mid_F, mid_G = instances.correlation_puzzle_pair()
    assert fixtures['puzzle_mid_F'].dist == mid_F
    assert fixtures['puzzle_mid_G'].dist == mid_G

    family_F, _ = instances.correlation_puzzle_families()
    read = fixtures['puzzle_F'].family
    assert read.prior == family_F.prior
    assert list(read.per_state) == list(family_F.per_state)

    assert fixtures['bankrun_game'].game.to_dict() == bank_run_game().to_dict()
    assert fixtures['dominance_game'].game.to_dict() == instances.dominance_game(instances.binary_space(), 3).to_dict()

def test_provenance_notes(fixtures_dir):
    reader = open_file(fixtures_dir / 'contour_shift' / 'contour_shift_F.yaml')
    assert isinstance(reader, DistributionReader)
    assert reader.provenance.expected['cad'] == 'violated at Point(2, 3)'
    assert reader.provenance.source.startswith('independent uniform')

def test_missing_provenance_is_a_warning(tmp_path, caplog):
    F, _ = instances.contour_shift_pair()
    path = tmp_path / 'shifted.yaml'
    write_distribution(F, path)
    with caplog.at_level(logging.WARNING):
        reader = open_file(path)
    assert reader.provenance is None
    assert 'No provenance notes' in caplog.text
    assert reader.dist == F

def test_newer_format_version_is_a_warning(tmp_path, caplog):
    data = distribution_to_dict(instances.supermodular_gap_pair()[0])
    data['version'] = 2
    path = tmp_path / 'future.json'
    write_text(json.dumps(data), path)
    with caplog.at_level(logging.WARNING):
        reader = open_file(path)
    assert 'more recent' in caplog.text
    assert reader.dist == instances.supermodular_gap_pair()[0]

def test_family_and_nonexchangeable_round_trip(tmp_path, binary_space):
    family, _ = instances.correlation_puzzle_families()
    write_distribution(family, tmp_path / 'family.yaml')
    reader = open_file(tmp_path / 'family.yaml')
    assert isinstance(reader, FamilyReader)
    assert list(reader.family.per_state) == list(family.per_state)
    assert reader.family.states.labels == family.states.labels

    dist = NonExchJointDist(binary_space, 2, {('0', '1') : "1/2", ('1', '1') : "1/2"})
    write_distribution(dist, tmp_path / 'ordered.yaml')
    read = open_file(tmp_path / 'ordered.yaml').dist
    assert isinstance(read, NonExchJointDist)
    assert read.marginal_vectors == dist.marginal_vectors

def test_game_weights_round_trip(tmp_path, binary_space):
    game = instances.dominance_game(binary_space, 3)
    write_game(game, tmp_path / 'weighted.yaml', weights = [1, "1/2", 0])
    reader = open_file(tmp_path / 'weighted.yaml')
    assert isinstance(reader, GameReader)
    assert reader.weights == (Fraction(1), Fraction(1, 2), Fraction(0))
    assert reader.game == game

def test_witness_bundle_replays_on_its_own(tmp_path, contour_shift):
    F, G = contour_shift
    package = witness_from_verdict(PRIVATE_MAX, F, G)
    write_bundle(package, tmp_path / 'witness.yaml', F, G)
    reader = open_file(tmp_path / 'witness.yaml')
    assert isinstance(reader, WitnessBundleReader)
    bundle = reader.bundle
    assert bundle.package == package
    assert verify_package(bundle.package, bundle.F, bundle.G)
    with pytest.raises(FileFormatError):
        write_bundle(package, tmp_path / 'half.yaml', F)

def test_malformed_files_are_rejected(tmp_path):
    path = tmp_path / 'unknown_signal.yaml'
    write_text(
        "format: simil-distribution\nversion: 1\n"
        "signals: [a, b]\nplayers: 2\n"
        "mass:\n  - {profile: [a, c], p: 1}\n",
        path,
    )
    with pytest.raises(FileFormatError):
        open_file(path)

    stray = tmp_path / 'notes.yaml'
    write_text("title: not an instance\n", stray)
    with pytest.raises(FileFormatError):
        open_file(stray)
    with pytest.raises(FileFormatError):
        open_file(tmp_path / 'missing.yaml')

def test_lenient_parsing_keeps_bad_masses():
    data = {
        'signals' : ['0', '1'],
        'players' : 2,
        'mass' : [{'profile' : ['0', '0'], 'p' : '3/2'}, {'profile' : ['1', '1'], 'p' : '-1/2'}],
    }
    with pytest.raises(InvalidDistributionError):
        distribution_from_dict(data)
    report = validate(distribution_from_dict(data, strict = False))
    assert not report

def test_reports(tmp_path):
    frame = pd.DataFrame([{'order' : 'cad', 'holds' : False}])
    assert render_report(frame, 'csv').splitlines() == ['order,holds', 'cad,False']
    rendered = json.loads(render_report({'value' : Fraction(1, 3), 'table' : frame}))
    assert rendered == {'value' : '1/3', 'table' : [{'order' : 'cad', 'holds' : False}]}
    with pytest.raises(FileFormatError):
        render_report({}, 'xml')

    write_report({'table' : frame}, tmp_path / 'out' / 'report.csv', 'csv')
    assert (tmp_path / 'out' / 'report.csv').read_text().startswith('order,holds')
    assert [p.name for p in (tmp_path / 'out').iterdir()] == ['report.csv']
