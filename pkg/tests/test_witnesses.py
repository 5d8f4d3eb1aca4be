"""
Witness games built from order violations, replayed through the
games module.
"""
from fractions import Fraction

import pytest

from simil import instances
from simil.dist import product, third_order_shuffle
from simil.errors import ParameterError, UnverifiableViolationError
from simil.orders import SetViolation, check_cad, check_cad_statewise, Order
from simil.witnesses import (
    COMMON, CONGESTION, PRIVATE_MAX, PRIVATE_MIN, SCAD, SEPARABLE, WitnessDirection,
    separating_functional, verify_package, witness_common, witness_from_verdict,
    witness_private_max,
)

def test_private_max_witness_on_contour_shift(contour_shift):
    F, G = contour_shift
    package = witness_from_verdict(PRIVATE_MAX, F, G)
    assert package.strategy.labels() == ['1', '2', '4']
    assert G.space.labels[package.pivot] == '2'
    assert package.game.alpha == (Fraction(1), Fraction(-3, 4), Fraction(-2), Fraction(1))
    assert package.failing_net_payoff == Fraction(-1, 25)
    assert package.direction is WitnessDirection.MAX_PARTICIPATION_DROPS

    transcript = verify_package(package, F, G)
    assert transcript
    assert list(transcript.df['passed']) == [True] * 4

def test_private_min_witness_on_contour_shift(contour_shift):
    F, G = contour_shift
    package = witness_from_verdict(PRIVATE_MIN, F, G)
    assert package.strategy.labels() == ['3']
    assert package.failing_net_payoff == Fraction(1, 25)
    assert verify_package(package, F, G)

def test_private_witnesses_on_the_correlation_puzzle():
    F, G = instances.correlation_puzzle_pair()
    for family in (PRIVATE_MAX, PRIVATE_MIN):
        package = witness_from_verdict(family, F, G)
        assert G.space.labels[package.pivot] == '1/2'
        assert verify_package(package, F, G)

def test_congestion_witness(contour_shift):
    F, G = contour_shift
    package = witness_from_verdict(CONGESTION, F, G)
    assert package.equilibrium_under == 'F'
    assert all(b <= 0 for b in package.game.beta)
    assert package.failing_net_payoff == 1 - Fraction(3, 4) / Fraction(71, 100)
    assert verify_package(package, F, G)

def test_strong_witness_on_a_third_order_shuffle(binary_space):
    G = product(["1/2", "1/2"], 3, binary_space)
    F = third_order_shuffle(G, '0', '1', "1/16")
    assert witness_from_verdict(PRIVATE_MAX, F, G) is None

    package = witness_from_verdict(SCAD, F, G)
    assert package.game.h.values[0] == 0
    assert package.failing_net_payoff < 0
    assert verify_package(package, F, G)

def test_common_value_witness_on_the_puzzle(puzzle_families):
    F_family, G_family = puzzle_families
    package = witness_from_verdict(COMMON, F_family, G_family)
    assert package.holding_net_payoff == 0
    theta_star = check_cad_statewise(F_family, G_family, Order.CCAD).violation.theta
    assert [b != 0 for b in package.game.beta] == [t == theta_star for t in range(3)]
    assert verify_package(package, F_family, G_family)

def test_separable_witness_keeps_beta_constant(puzzle_families):
    F_family, G_family = puzzle_families
    package = witness_from_verdict(SEPARABLE, F_family, G_family)
    assert package.game.separable
    assert package.direction is None
    transcript = verify_package(package, F_family, G_family)
    assert transcript
    assert len(transcript.claims) == 3

def test_no_witness_when_the_order_holds(contour_shift, puzzle_families):
    F, G = contour_shift
    for family in (PRIVATE_MAX, PRIVATE_MIN, CONGESTION, SCAD):
        assert witness_from_verdict(family, G, G) is None
    _, G_family = puzzle_families
    assert witness_from_verdict(COMMON, G_family, G_family) is None

def test_routing_rejects_bad_inputs(contour_shift, puzzle_families, binary_space):
    F, G = contour_shift
    with pytest.raises(ParameterError):
        witness_from_verdict('lottery', F, G)
    with pytest.raises(ParameterError):
        witness_from_verdict(COMMON, F, G)
    F_family, _ = puzzle_families
    with pytest.raises(ParameterError):
        witness_from_verdict(PRIVATE_MAX, F_family, F_family)

    low = product(["1/2", "1/2"], 2, binary_space)
    high = product(["1/4", "3/4"], 2, binary_space)
    with pytest.raises(ParameterError):
        witness_from_verdict(PRIVATE_MAX, low, high)

def test_forged_violation_is_refused(contour_shift):
    F, G = contour_shift
    set_form = check_cad(F, G).set_form
    forged = SetViolation(lhs = set_form.lhs, rhs = Fraction(4, 5), s = set_form.s, K = set_form.K)
    with pytest.raises(UnverifiableViolationError):
        witness_private_max(G, forged, F)
    outside = SetViolation(lhs = set_form.lhs, rhs = set_form.rhs, s = set_form.s, K = frozenset({0}))
    with pytest.raises(UnverifiableViolationError):
        witness_private_max(G, outside)

def test_common_witness_needs_a_state_violation(puzzle_families, contour_shift):
    F_family, G_family = puzzle_families
    with pytest.raises(UnverifiableViolationError):
        witness_common(G_family, check_cad(*contour_shift).violation, F_family)

def test_tampered_package_fails_verification(contour_shift):
    F, G = contour_shift
    package = witness_from_verdict(PRIVATE_MAX, F, G)
    # F and G swapped
    assert not verify_package(package, G, F)

def test_three_way_separation():
    below = [(Fraction(1), Fraction(0), Fraction(0))]
    x = (Fraction(0), Fraction(1), Fraction(0))
    above = [(Fraction(0), Fraction(0), Fraction(1))]
    separation = separating_functional(below, x, above)
    assert separation.separates
    assert separation.value(below[0]) == separation.at_x - 1
    assert separation.value(above[0]) == separation.at_x + 1
    assert separation.lower_gap == separation.upper_gap == 1

    one_sided = separating_functional([], x, above)
    assert one_sided.max_a is None and one_sided.separates
