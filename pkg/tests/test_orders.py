"""
Order checks on the worked instances, their certificates, and the
implications between the orders on generated pairs.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings

from simil import instances
from simil.dist import JointDist, SignalSpace, diagonal_mixture, product, third_order_shuffle
from simil.errors import ParameterError, SpaceMismatchError
from simil.orders import (
    MarginalMismatch, Order, PairViolation, PointViolation, SetViolation,
    check, check_cad, check_cad_nonexch, check_cad_statewise, check_ccad,
    check_icad, check_pqd_2d, check_scad, supermodular_functional, verdicts_frame,
)
from simil.dist.random import random_joint, random_transfers

from strategies import joints, weights

def test_supermodular_gap(supermodular_gap):
    F, G = supermodular_gap
    assert check_cad(F, G).holds
    assert supermodular_functional(F, ('1', '1', '1')) == Fraction(1, 6)
    assert supermodular_functional(G, ('1', '1', '1')) == Fraction(1, 4)
    assert supermodular_functional(F, ('0', '0', '0')) == Fraction(1, 3)
    assert supermodular_functional(G, ('0', '0', '0')) == 0

def test_contour_shift_separates_cad_from_contour_cad(contour_shift):
    F, G = contour_shift
    assert check_ccad(F, G).holds
    assert check_icad(F, G).holds

    cad = check_cad(F, G)
    assert not cad
    violation = cad.violation
    assert isinstance(violation, PointViolation)
    assert violation.indices(F.space) == {'s' : '2', 's_prime' : '3'}
    assert (violation.lhs, violation.rhs) == (Fraction(29, 100), Fraction(1, 4))

    set_form = cad.set_form
    assert set_form.K == frozenset({0, 1, 3})
    assert (set_form.lhs, set_form.rhs) == (Fraction(71, 100), Fraction(3, 4))
    assert cad.reverify(F, G)

def test_correlation_puzzle_middle_state():
    F, G = instances.correlation_puzzle_pair()
    assert check_pqd_2d(F, G).holds

    cad = check_cad(F, G)
    assert not cad
    assert cad.violation.indices(F.space) == {'s' : '1/2', 's_prime' : '1/2'}
    assert cad.violation.lhs == Fraction(9407, 9700)
    assert cad.violation.rhs == Fraction(9409, 9700)
    assert not check_ccad(F, G)

def test_supermodular_transfers_need_not_be_cad():
    F, G = instances.sm_not_cad_pair()
    assert not check_cad(F, G)
    assert not check_ccad(F, G)

def test_unequal_marginals_are_incomparable(binary_space):
    F = product(["1/2", "1/2"], 2, binary_space)
    G = product(["1/4", "3/4"], 2, binary_space)
    verdict = check_cad(F, G)
    assert isinstance(verdict.violation, MarginalMismatch)
    assert verdict.reverify(F, G)

def test_shape_mismatch_raises(binary_space):
    F = product(["1/2", "1/2"], 2, binary_space)
    G = product(["1/2", "1/2"], 3, binary_space)
    with pytest.raises(SpaceMismatchError):
        check_cad(F, G)
    with pytest.raises(ParameterError):
        check_pqd_2d(G, G)

def test_tampered_certificate_does_not_reverify(contour_shift):
    F, G = contour_shift
    forged = PointViolation(lhs = Fraction(1, 2), rhs = Fraction(1, 4), s = 1, s_prime = 2)
    assert not forged.reverify(F, G)
    diagonal = PointViolation(lhs = Fraction(1, 4), rhs = Fraction(1, 4), s = 1, s_prime = 1)
    assert not diagonal.reverify(F, G)

def test_third_order_shuffle_is_cad_equal_but_not_strong_cad(binary_space):
    G = product(["1/2", "1/2"], 3, binary_space)
    F = third_order_shuffle(G, '0', '1', "1/16")
    assert check_cad(F, G) and check_cad(G, F)
    assert not check_scad(F, G)
    assert not check_scad(G, F)
    assert check_scad(G, G)

def test_nonexch_agrees_on_exchangeable_inputs(contour_shift):
    F, G = contour_shift
    verdict = check_cad_nonexch(F, G)
    assert not verdict
    assert isinstance(verdict.violation, PairViolation)
    assert verdict.violation.inner.indices(F.space) == {'s' : '2', 's_prime' : '3'}
    assert isinstance(verdict.set_form.inner, SetViolation)
    assert verdict.reverify(F.to_nonexch(), G.to_nonexch())
    assert check_cad_nonexch(G, G)

def test_null_signals_are_vacuous_in_both_cad_checks():
    space = SignalSpace.from_values([0, 1, 2])
    dist = JointDist(space, 2, {(0, 0) : Fraction(1, 2), (1, 1) : Fraction(1, 2)}, by_index = True)
    assert dist.marginal_vector[2] == 0
    assert check_cad(dist, dist).holds
    assert check_cad_nonexch(dist, dist).holds

    mixed = JointDist(space, 2, {(0, 0) : Fraction(1, 4), (0, 1) : Fraction(1, 2), (1, 1) : Fraction(1, 4)}, by_index = True)
    assert check_cad(dist, mixed) and check_cad_nonexch(dist, mixed)
    assert not check_cad(mixed, dist)
    assert not check_cad_nonexch(mixed, dist)

def test_statewise_contour_cad(puzzle_families):
    F_family, G_family = puzzle_families
    verdict = check_cad_statewise(F_family, G_family, Order.CCAD)
    assert not verdict
    assert verdict.differing == ('1/2',)
    assert verdict.violation.theta == 1
    assert verdict['-1/2'].holds

    same = check_cad_statewise(G_family, G_family)
    assert same and same.differing == ()

def test_dispatch_and_frame(contour_shift):
    F, G = contour_shift
    verdicts = {name : check(name, F, G) for name in ('cad', 'ccad', 'icad')}
    assert [v.holds for v in verdicts.values()] == [False, True, True]
    frame = verdicts_frame(verdicts)
    assert list(frame['holds']) == [False, True, True]
    assert frame.loc[0, 'variant'] == 'Point'
    assert frame.loc[0, 'lhs'] == '29/100'

@settings(derandomize = True, max_examples = 60)
@given(joints(max_players = 4, max_signals = 5))
def test_every_distribution_is_similar_to_itself(dist):
    assert check_cad(dist, dist)
    assert check_ccad(dist, dist)
    assert check_icad(dist, dist)

@settings(derandomize = True, max_examples = 60)
@given(joints(max_players = 4, max_signals = 4), weights)
def test_diagonal_mixture_ranks_in_every_order(dist, t):
    mixed = diagonal_mixture(dist, t)
    assert check_cad(mixed, dist)
    assert check_ccad(mixed, dist)
    assert check_scad(mixed, dist)

def test_cad_implies_contour_cad_implies_interval(rng):
    for _ in range(60):
        n = int(rng.integers(2, 5))
        players = int(rng.integers(2, 4))
        G = random_joint(rng, SignalSpace.from_values(range(n)), players)
        F = random_transfers(rng, G, int(rng.integers(1, 4)))
        cad, ccad, icad = check_cad(F, G), check_ccad(F, G), check_icad(F, G)
        assert ccad.holds or not cad.holds
        assert ccad.holds == icad.holds
        for verdict in (cad, ccad, icad):
            assert verdict.reverify(F, G)
