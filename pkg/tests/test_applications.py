"""
Bank run, second-price auction and invest-game rationalizability.
"""
from fractions import Fraction

import pytest

from simil import instances
from simil.applications.auction import (
    EtiStep, auction_revenue, eti_apply_sequence, eti_decompose, revenue_table,
)
from simil.applications.bankrun import (
    INTRO, BankRunParams, bank_run_analysis, bank_run_crossings, bank_run_family, bank_run_sweep,
    bank_run_thresholds, dominance_bound, equilibrium_runs, expected_run, feasibility_bound,
    intro_example_suite, sweep_grid,
)
from simil.applications.beliefs import belief_step, common_belief, rationalizable_sets
from simil.errors import InfeasibleTransformError, ParameterError

EPSILON, P = Fraction(1, 20), Fraction(97, 100)

def test_bank_run_bounds():
    assert feasibility_bound(P) == Fraction(9, 40000)
    assert dominance_bound(EPSILON) == Fraction(57, 59)
    with pytest.raises(ParameterError):
        BankRunParams.appendix(EPSILON, "9/10")
    with pytest.raises(ParameterError):
        BankRunParams.appendix(EPSILON, P, "1/100")
    with pytest.raises(ParameterError):
        BankRunParams.appendix("1/2", P)
    assert BankRunParams.intro(EPSILON, P).prior == (Fraction(1, 20), Fraction(9, 10), Fraction(1, 20))
    assert BankRunParams.appendix(EPSILON, P).prior == (Fraction(1, 20), Fraction(17, 20), Fraction(1, 10))

def test_bank_run_thresholds_match_the_incentive_crossings():
    alpha_star, alpha_star_star = bank_run_thresholds(EPSILON, P)
    assert alpha_star == Fraction(319033, 680000)
    assert alpha_star_star == Fraction(160403, 340000)
    assert bank_run_crossings(EPSILON, P) == (alpha_star, alpha_star_star)
    with pytest.raises(ParameterError):
        bank_run_thresholds(EPSILON, P, INTRO)

def test_bank_run_analysis_at_zero_perturbation():
    analysis = bank_run_analysis(BankRunParams.appendix(EPSILON, P))
    assert analysis.good_exists and analysis.bad_exists
    assert analysis.region == 'e_G, e_B'
    assert analysis.minimal_expected_run == Fraction(251, 2000)
    assert analysis.maximal_expected_run == Fraction(1779, 1000)

def test_expected_run_is_twice_the_run_mass():
    params = BankRunParams.appendix(EPSILON, P)
    analysis = bank_run_analysis(params)
    good = next(sigma for sigma in analysis.equilibria if sigma.cutoff == 2)
    assert expected_run(bank_run_family(params), good) == 2 * Fraction(251, 4000)

def test_maximal_run_falls_by_the_middle_signal_mass():
    params = BankRunParams.appendix(EPSILON, P)
    good_run, bad_run = equilibrium_runs(params)
    assert (good_run, bad_run) == (Fraction(251, 2000), Fraction(1779, 1000))
    assert bad_run - good_run == 2 * bank_run_family(params).mixture_marginal[1]
    assert equilibrium_runs(params.with_a(feasibility_bound(P))) == (good_run, bad_run)

def test_sweep_grid_and_frame():
    grid = sweep_grid(P, 5)
    assert grid[0] == 0 and grid[-1] == Fraction(9, 40000)
    assert len(set(grid)) == 5
    with pytest.raises(ParameterError):
        sweep_grid(P, 1)

    sweep = bank_run_sweep(EPSILON, P, points = 4)
    assert list(sweep.columns) == [
        'a', 'a_float', 'eG', 'eB', 'region', 'maximal_expected_run', 'minimal_expected_run',
    ]
    assert len(sweep) == 4
    assert sweep.attrs['feasibility_bound'] == '9/40000'
    assert sweep.attrs['alpha_star'] == '319033/680000'
    # both thresholds lie beyond the feasible perturbations
    assert sweep['eG'].all() and sweep['eB'].all()

def test_intro_sweep_has_no_thresholds():
    sweep = bank_run_sweep(EPSILON, P, points = 2, preset = INTRO)
    assert 'alpha_star' not in sweep.attrs
    assert sweep.attrs['params']['preset'] == INTRO

def test_correlation_puzzle_report():
    report = intro_example_suite(instances.puzzle_params())
    assert report.correlation_puzzle
    assert report.pqd.holds and not report.cad.holds and not report.ccad.holds
    assert report.statewise_violation.theta == 1
    assert not report.degenerate
    out = report.to_dict()
    assert out['statewise_violation']['indices']['theta'] == '1/2'

    flat = intro_example_suite(instances.puzzle_params(0))
    assert flat.degenerate
    assert flat.cad.holds and flat.statewise_violation is None

def test_auction_revenue_and_decomposition():
    F, G = instances.auction_pair()
    assert auction_revenue(G) == Fraction(15, 8)
    assert auction_revenue(F) == Fraction(199, 100)

    decomposition = eti_decompose(F, G)
    assert decomposition
    assert tuple(decomposition.steps) == instances.AUCTION_STEPS
    assert list(decomposition.df['revenue_increment']) == ['1/50', '3/40', '1/50']

    table = revenue_table(G, decomposition.steps)
    assert list(table['increment']) == list(table['predicted'])
    assert table['revenue'].iloc[-1] == '199/100'

def test_decomposition_fails_when_not_cad_ranked(contour_shift):
    F, G = contour_shift
    decomposition = eti_decompose(F, G)
    assert not decomposition
    assert decomposition.steps == []
    assert (decomposition.failure.s, decomposition.failure.s_prime) == (1, 2)
    assert decomposition.failure.f_mass == Fraction(29, 400)
    assert decomposition.to_dict()['failure']['s_prime'] == '3'

def test_eti_validation(uniform_pair_dist):
    with pytest.raises(ParameterError):
        EtiStep(2, 1, Fraction(1, 100))
    with pytest.raises(ParameterError):
        EtiStep(0, 1, Fraction(-1, 100))
    with pytest.raises(InfeasibleTransformError):
        eti_apply_sequence(uniform_pair_dist, [EtiStep(0, 1, Fraction(1, 10))], check_prefixes = True)
    with pytest.raises(ParameterError):
        auction_revenue(instances.supermodular_gap_pair()[0])

def test_rationalizable_sets_grow_under_diagonal_mixtures():
    F, G = instances.rationalize_pair()
    x = instances.RATIONALIZE_X.__getitem__
    f_sets, g_sets = rationalizable_sets(F, x), rationalizable_sets(G, x)

    assert g_sets.invest == (frozenset({2, 3}), frozenset({2, 3}))
    assert f_sets.invest == (frozenset({1, 2, 3}), frozenset({1, 2, 3}))
    assert f_sets.not_invest == g_sets.not_invest == (frozenset({0, 1, 2}),) * 2
    assert g_sets.iterations == (2, 1)
    assert f_sets.to_dict()['invest'] == [['2', '3', '4'], ['2', '3', '4']]

def test_threshold_given_by_signal(uniform_pair_dist):
    x = {'1' : "-1/10", '2' : "1/5", '3' : "7/10", '4' : "11/10"}
    by_label = rationalizable_sets(uniform_pair_dist, x)
    assert by_label.invest[0] == frozenset({2, 3})
    with pytest.raises(ParameterError):
        rationalizable_sets(uniform_pair_dist, {'1' : 0})

def test_belief_operator(uniform_pair_dist):
    everything = frozenset(range(4))
    half = (lambda s: Fraction(1, 2),) * 2
    assert belief_step(uniform_pair_dist, (everything, frozenset({0, 1})), half) == (everything, frozenset({0, 1}))
    assert belief_step(uniform_pair_dist, (everything, frozenset({0})), half) == (frozenset(), frozenset({0}))
    result = common_belief(uniform_pair_dist, half, (everything, frozenset({0})))
    assert result.sets == (frozenset(), frozenset())
    assert result.iterations == 2
