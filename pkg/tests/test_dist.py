"""
Exchangeable and non-exchangeable joints, state families, and the
marginal-preserving transformations.
"""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from simil.applications.bankrun import bank_run_family
from simil.dist import (
    JointDist, NonExchJointDist, SignalSpace, StateFamily, affinely_independent,
    apply_eti, cond_prob, count_cdf, count_pmf, diagonal_mixture, expected_count,
    from_ordered, marginal, pair_prob, pair_transfer, product, profile_prob,
    third_order_shuffle, validate,
)
from simil.dist.family import StateSpace, require_affinely_independent
from simil.dist.random import random_family, random_joint, random_transfers
from simil.errors import (
    AffineDependenceError, InfeasibleTransformError, InvalidDistributionError, ParameterError,
    ZeroProbabilityError,
)
from simil import instances

from strategies import joints, weights

def test_signal_space_labels_and_lookup():
    space = SignalSpace.from_values(['-1/2', '1/2', '3/2'])
    assert space.labels == ('-1/2', '1/2', '3/2')
    assert space.index('1/2') == 1
    assert space.index(Fraction(3, 2)) == 2
    assert space.upper_contour(1) == frozenset({1, 2})
    assert space.lower_contour(1) == frozenset({0, 1})
    with pytest.raises(KeyError):
        space.index('5')
    with pytest.raises(InvalidDistributionError):
        SignalSpace.from_values([1, 1])

def test_float_ingestion_warns():
    with pytest.warns(UserWarning):
        dist = JointDist(SignalSpace.from_values([0, 1]), 2, {(0, 0) : 0.5, (1, 1) : "1/2"})
    assert dist.multiset_mass((0, 0)) == Fraction(1, 2)

def test_multiset_mass_is_total_over_orderings():
    space = SignalSpace.from_values([0, 1])
    dist = JointDist(space, 2, {('0', '0') : "1/4", ('1', '0') : "1/2", ('1', '1') : "1/4"})
    assert dist.multiset_mass((0, 1)) == Fraction(1, 2)
    assert profile_prob(dist, ('0', '1')) == Fraction(1, 4)
    assert profile_prob(dist, ('1', '0')) == Fraction(1, 4)
    assert pair_prob(dist, '0', '1') == Fraction(1, 4)
    assert marginal(dist)['0'] == Fraction(1, 2)

def test_construction_rejects_invalid_masses(binary_space):
    with pytest.raises(InvalidDistributionError):
        JointDist(binary_space, 2, {(0, 0) : "3/4", (1, 1) : "1/2"})
    with pytest.raises(InvalidDistributionError):
        JointDist(binary_space, 2, {(0, 0) : "3/2", (1, 1) : "-1/2"})
    with pytest.raises(InvalidDistributionError):
        JointDist(binary_space, 9, {(0,) * 9 : 1})

    broken = JointDist(binary_space, 2, {(0, 0) : "3/2", (1, 1) : "-1/2"}, strict = False)
    report = validate(broken)
    assert not report
    assert report.total_mass == 1
    assert report.negative_masses == [(('1', '1'), Fraction(-1, 2))]

def test_supermodular_gap_conditionals(supermodular_gap):
    F, G = supermodular_gap
    assert cond_prob(F, '0', ['0']) == Fraction(2, 3)
    assert cond_prob(G, '0', ['0']) == Fraction(1, 2)
    assert F.marginal_vector == G.marginal_vector == (Fraction(1, 2), Fraction(1, 2))

def test_conditioning_on_null_signal_raises():
    space = SignalSpace.from_values([0, 1, 2])
    dist = JointDist(space, 2, {(0, 0) : "1/2", (1, 1) : "1/2"})
    assert cond_prob(dist, 0, [0]) == 1
    with pytest.raises(ZeroProbabilityError):
        cond_prob(dist, 2, [0])

def test_derived_tables_are_computed_once(supermodular_gap):
    F, _ = supermodular_gap
    assert not hasattr(F, '_pair_matrix')
    first = F.pair_matrix
    assert F._pair_matrix is first
    assert F.pair_matrix is first

def test_product_is_conditionally_uniform(uniform_pair_dist):
    for s in uniform_pair_dist.space:
        for s_prime in uniform_pair_dist.space:
            assert cond_prob(uniform_pair_dist, s, [s_prime]) == Fraction(1, 4)

def test_count_distribution(binary_space):
    dist = product(["1/2", "1/2"], 3, binary_space)
    assert count_pmf(dist, 0, [0]) == (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4))
    assert expected_count(dist, 0, [0]) == 1
    cdf = count_cdf(dist, 0, [0])
    assert cdf[0] == Fraction(1, 4)
    assert cdf[2] == 1
    assert cdf.at_least(2) == Fraction(1, 4)

def test_from_ordered_rejects_asymmetric_masses(binary_space):
    symmetric = from_ordered(binary_space, 2, {('0', '1') : "1/2", ('1', '0') : "1/2"})
    assert symmetric.multiset_mass((0, 1)) == 1
    with pytest.raises(InvalidDistributionError):
        from_ordered(binary_space, 2, {('0', '1') : 1})

def test_nonexchangeable_conditionals(binary_space):
    dist = NonExchJointDist(binary_space, 2, {('0', '1') : "1/2", ('1', '1') : "1/2"})
    assert not dist.exchangeable
    assert dist.marginal_vectors[0] == (Fraction(1, 2), Fraction(1, 2))
    assert dist.marginal_vectors[1] == (Fraction(0), Fraction(1))
    assert dist.conditional(0, 1, 0, frozenset({1})) == 1
    assert dist.conditional(1, 0, 1, frozenset({0})) == Fraction(1, 2)
    with pytest.raises(IndexError):
        dist.conditional(2, 0, 0, frozenset({0}))
    with pytest.raises(ZeroProbabilityError):
        dist.conditional(1, 0, 0, frozenset({0}))
    with pytest.raises(InvalidDistributionError):
        dist.to_exchangeable()

@settings(derandomize = True, max_examples = 40)
@given(joints(max_players = 4))
def test_ordered_expansion_round_trips(dist):
    assert dist.to_nonexch().exchangeable
    assert dist.to_nonexch().to_exchangeable() == dist

@settings(derandomize = True, max_examples = 100)
@given(joints(max_players = 4), st.data())
def test_expected_count_is_scaled_conditional(dist, data):
    s = data.draw(st.sampled_from(dist.space.labels))
    K = data.draw(st.sets(st.sampled_from(dist.space.labels), min_size = 1))
    assert expected_count(dist, s, K) == (dist.players - 1) * cond_prob(dist, s, K)

@settings(derandomize = True, max_examples = 40)
@given(joints(), weights)
def test_diagonal_mixture_keeps_marginals(dist, t):
    mixed = diagonal_mixture(dist, t)
    assert mixed.marginal_vector == dist.marginal_vector
    for s in range(dist.n):
        for s_prime in range(dist.n):
            K = frozenset({s_prime})
            expected = (1 - t) * dist.conditional(s, K) + (t if s == s_prime else 0)
            assert mixed.conditional(s, K) == expected

def test_eti_moves_mass_onto_the_diagonal(uniform_pair_dist):
    moved = apply_eti(uniform_pair_dist, '1', '3', "1/40")
    assert moved.multiset_mass((0, 0)) == Fraction(1, 16) + Fraction(1, 40)
    assert moved.multiset_mass((0, 2)) == Fraction(1, 8) - Fraction(1, 20)
    assert moved.marginal_vector == uniform_pair_dist.marginal_vector
    with pytest.raises(InfeasibleTransformError):
        apply_eti(uniform_pair_dist, '1', '2', 1)

def test_pair_transfer_either_sign(binary_space):
    dist = product(["1/2", "1/2"], 3, binary_space)
    for a in ("1/16", "-1/16"):
        moved = pair_transfer(dist, ['1'], '0', '1', a)
        assert moved.marginal_vector == dist.marginal_vector
    with pytest.raises(InfeasibleTransformError):
        pair_transfer(dist, ['0'], '0', '1', "-1")

def test_third_order_shuffle_keeps_pairs(binary_space):
    dist = product(["1/2", "1/2"], 3, binary_space)
    shuffled = third_order_shuffle(dist, '0', '1', "1/16")
    assert shuffled.pair_matrix == dist.pair_matrix
    assert shuffled.count_pmf(0, frozenset({0})) != dist.count_pmf(0, frozenset({0}))

def test_family_posteriors_and_mixture(puzzle_families):
    F_family, _ = puzzle_families
    for post in F_family.posteriors:
        assert sum(post.probs) == 1
    assert F_family.mixture.marginal_vector == F_family.mixture_marginal
    assert affinely_independent(F_family.posteriors)
    assert F_family.joint('1/2') == F_family.per_state[1]

def test_affine_dependence_witness():
    certificate = affinely_independent([(1, 0), (0, 1), ("1/2", "1/2")])
    assert not certificate
    witness = certificate.witness
    assert sum(witness) == 0
    points = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)), (Fraction(1, 2), Fraction(1, 2))]
    for coord in range(2):
        assert sum(lam * p[coord] for lam, p in zip(witness, points)) == 0

def test_require_affinely_independent_raises_with_witness():
    states = StateSpace.from_values([0, 1])
    space = SignalSpace.from_values([0, 1, 2])
    joint = product(["1/3", "1/3", "1/3"], 2, space)
    family = StateFamily(states, ["1/2", "1/2"], [joint, joint])
    with pytest.raises(AffineDependenceError) as info:
        require_affinely_independent(family.posteriors)
    assert sum(info.value.witness) == 0

def test_family_rejects_null_signals():
    states = StateSpace.from_values([0, 1])
    space = SignalSpace.from_values([0, 1])
    only_low = JointDist(space, 2, {(0, 0) : 1})
    with pytest.raises(ZeroProbabilityError):
        StateFamily(states, ["1/2", "1/2"], [only_low, only_low])
    with pytest.raises(InvalidDistributionError):
        StateFamily(states, ["1/2", "1/3"], [only_low, only_low])

def test_bank_run_middle_state_masses():
    params = instances.puzzle_params()
    family = bank_run_family(params)
    middle = family.per_state[1]
    assert middle.multiset_mass((1, 1)) == Fraction(9407, 10000)
    assert middle.multiset_mass((0, 1)) == Fraction(293, 10000)
    assert middle.multiset_mass((0, 2)) == Fraction(1, 4000)
    assert family.prior == (Fraction(1, 20), Fraction(9, 10), Fraction(1, 20))

def test_generators_are_seeded():
    space = SignalSpace.from_values(range(3))
    a = random_joint(np.random.default_rng(7), space, 3)
    b = random_joint(np.random.default_rng(7), space, 3)
    assert a == b
    assert all(m > 0 for m in a.marginal_vector)
    moved = random_transfers(np.random.default_rng(7), a, 5)
    assert moved.marginal_vector == a.marginal_vector

def test_random_family_is_affinely_independent(rng):
    family = random_family(rng, 3, SignalSpace.from_values(range(3)), 2)
    assert affinely_independent(family.posteriors)
    with pytest.raises(ParameterError):
        random_family(rng, 2, SignalSpace.from_values(range(3)), 2)
