"""
Seeded property suites. Each draws `count` random instances from
`numpy.random.default_rng(seed)` through the generators in
`simil.dist.random` and `simil.games.random`, and counts the
instances on which a property fails. A suite passes when every
count is zero. Without a count each suite runs `SUITE_COUNTS[name]`
instances.
"""
from collections import Counter
from fractions import Fraction
from typing import Callable, Dict, Optional
import logging

import numpy as np

from .demos import DemoResult
from ..applications.auction import EtiStep, auction_revenue, eti_apply_sequence, eti_decompose
from ..applications.beliefs import rationalizable_sets
from ..dist.family import StateFamily, affinely_independent
from ..dist.joint import cond_prob, expected_count
from ..dist.random import (
    random_cad_equal_pair, random_eti_steps, random_family, random_joint,
    random_rational, random_space, random_transfers,
)
from ..dist.transforms import diagonal_mixture
from ..errors import DegenerateViolationError
from ..games.compare import compare_equilibrium_sets
from ..games.random import random_common_game, random_congestion_game, random_coordination_game
from ..orders.cad import check_cad
from ..orders.contour import check_ccad, check_icad
from ..orders.strong import check_scad
from ..witnesses.package import CONGESTION, PRIVATE_MAX, PRIVATE_MIN, SCAD, verify_package
from ..witnesses.routing import witness_from_verdict

# CAD-equal pairs the strong suite must separate by a verified witness
MIN_SEPARATED = 5

class Tally():
    """ Failure counts per property, and the first failing instance of each """

    def __init__(self, name : str):
        self.name = name
        self.failures : Counter = Counter()
        self.examples : Dict[str, str] = {}
        self.instances = 0
        self.skipped = 0

    def record(self, prop : str, ok : bool, instance : Optional[str] = None):
        self.failures[prop] += 0 if ok else 1
        if not ok and prop not in self.examples:
            self.examples[prop] = instance or ''
            logging.error(f"Suite {self.name}: {prop} fails on {instance}")

    def result(self)->DemoResult:
        result = DemoResult(self.name)
        for prop in self.failures:
            result.expect(f"{prop}: failing instances", self.failures[prop], 0)
        result.report = {
            'instances' : self.instances,
            'skipped' : self.skipped,
            'first_failures' : dict(self.examples),
        }
        return result

def _shape(rng : np.random.Generator, max_players : int, max_signals : int):
    players = int(rng.integers(2, max_players + 1))
    space = random_space(rng, int(rng.integers(2, max_signals + 1)))
    return space, players

def _mixture_weight(rng : np.random.Generator)->Fraction:
    return random_rational(rng, Fraction(1, 12), Fraction(11, 12))

def expected_count_suite(rng : np.random.Generator, count : int)->DemoResult:
    """ E[C(K) | s] = (N−1)·F_s(K) on random (dist, s, K) """
    tally = Tally('expected-count')
    for _ in range(count):
        space, players = _shape(rng, 5, 5)
        dist = random_joint(rng, space, players)
        s = space.labels[int(rng.integers(space.n))]
        size = int(rng.integers(1, space.n + 1))
        K = [space.labels[k] for k in rng.choice(space.n, size = size, replace = False)]
        tally.instances += 1
        tally.record(
            'expected count is (N−1) times the conditional',
            expected_count(dist, s, K) == (players - 1) * cond_prob(dist, s, K),
            f"{dist!r} s={s} K={K}",
        )
    return tally.result()

def orders_suite(rng : np.random.Generator, count : int)->DemoResult:
    """ CAD ⇒ contour-CAD, and contour-CAD ⇔ interval-CAD """
    tally = Tally('orders')
    for _ in range(count):
        space, players = _shape(rng, 4, 5)
        G = random_joint(rng, space, players)
        F = random_transfers(rng, G, int(rng.integers(1, 4)))
        cad, ccad, icad = check_cad(F, G), check_ccad(F, G), check_icad(F, G)
        tally.instances += 1
        tally.record('CAD implies contour-CAD', ccad.holds or not cad.holds, repr(F))
        tally.record('contour-CAD agrees with interval-CAD', ccad.holds == icad.holds, repr(F))
    return tally.result()

def inclusion_suite(rng : np.random.Generator, count : int)->DemoResult:
    """ Diagonal mixtures keep every equilibrium and widen participation """
    tally = Tally('inclusion')
    for _ in range(count):
        space, players = _shape(rng, 3, 4)
        G = random_joint(rng, space, players)
        F = diagonal_mixture(G, _mixture_weight(rng))
        game = random_coordination_game(rng, space, players)
        report = compare_equilibrium_sets(game, F, G)
        tally.instances += 1
        tally.record('E(G) inside E(F)', report.f_contains_g, repr(game))
        tally.record('maxP rises', report.max_p_higher, repr(game))
        tally.record('minP falls', report.min_p_lower, repr(game))
    return tally.result()

def _replay(tally : Tally, family : str, F, G, skip_degenerate : bool = True)->bool:
    """ True when a witness was built and re-verified """
    try:
        package = witness_from_verdict(family, F, G)
    except DegenerateViolationError as e:
        if not skip_degenerate:
            tally.record(f"{family} violation is not degenerate", False, repr(F))
            return False
        logging.info(f"Skipping a degenerate {family} instance: {e}")
        tally.skipped += 1
        return False
    if not skip_degenerate:
        tally.record(f"{family} violation is not degenerate", True)
    tally.record(f"{family} witness exists", package is not None, repr(F))
    if package is None:
        return False
    verified = bool(verify_package(package, F, G))
    tally.record(f"{family} witness re-verifies", verified, repr(F))
    return verified

def converse_suite(rng : np.random.Generator, count : int)->DemoResult:
    """ Pairs that are not CAD-ranked get verified private-value witnesses """
    tally = Tally('converse')
    while tally.instances < count:
        space, players = _shape(rng, 3, 4)
        G = random_joint(rng, space, players)
        F = random_transfers(rng, G, int(rng.integers(1, 4)))
        if check_cad(F, G).holds:
            continue
        tally.instances += 1
        for family in (PRIVATE_MAX, PRIVATE_MIN):
            _replay(tally, family, F, G)
    return tally.result()

def congestion_suite(rng : np.random.Generator, count : int)->DemoResult:
    """ With β ≤ 0 diagonal mixtures only remove equilibria """
    tally = Tally('congestion')
    for _ in range(count):
        space, players = _shape(rng, 3, 4)
        G = random_joint(rng, space, players)
        F = diagonal_mixture(G, _mixture_weight(rng))
        game = random_congestion_game(rng, space, players)
        tally.instances += 1
        tally.record('E(F) inside E(G)', compare_equilibrium_sets(game, F, G).g_contains_f, repr(game))
        # G is not CAD-higher than its own diagonal mixture
        _replay(tally, CONGESTION, G, F)
    return tally.result()

def strong_suite(rng : np.random.Generator, count : int)->DemoResult:
    """
    Table aggregators under strong-CAD-ranked pairs, and strong-CAD
    witnesses on CAD-equal pairs that differ in their count
    distributions.
    """
    tally = Tally('strong')
    separated = 0
    for _ in range(count):
        space = random_space(rng, int(rng.integers(2, 4)))
        G = random_joint(rng, space, 3)
        F = diagonal_mixture(G, _mixture_weight(rng))
        scad = check_scad(F, G)
        tally.instances += 1
        tally.record('diagonal mixture is strong-CAD-higher', scad.holds, repr(F))
        tally.record('strong-CAD implies CAD', check_cad(F, G).holds or not scad.holds, repr(F))
        game = random_coordination_game(rng, space, 3, table = True)
        tally.record('E(G) inside E(F)', compare_equilibrium_sets(game, F, G).f_contains_g, repr(game))

        F_shuffled, G_base = random_cad_equal_pair(rng, space)
        tally.record('shuffle keeps CAD both ways', check_cad(F_shuffled, G_base).holds and check_cad(G_base, F_shuffled).holds, repr(F_shuffled))
        separated += _replay(tally, SCAD, F_shuffled, G_base, skip_degenerate = False)
    tally.record(
        f"at least {min(count, MIN_SEPARATED)} CAD-equal pairs separated by a verified witness",
        separated >= min(count, MIN_SEPARATED),
        f"{separated} of {count}",
    )
    return tally.result()

def common_suite(rng : np.random.Generator, count : int)->DemoResult:
    """ Per-state diagonal mixtures keep every cutoff equilibrium """
    tally = Tally('common')
    for _ in range(count):
        space = random_space(rng, int(rng.integers(2, 4)))
        players = int(rng.integers(2, 4))
        # n posteriors over the states can only be affinely independent with at least n states
        G = random_family(rng, int(rng.integers(space.n, 4)), space, players)
        t = _mixture_weight(rng)
        F = StateFamily(G.states, G.prior, [diagonal_mixture(joint, t) for joint in G.per_state])
        game = random_common_game(rng, G.states)
        tally.instances += 1
        tally.record('posteriors affinely independent', bool(affinely_independent(G.posteriors)), repr(G))
        tally.record('mixing keeps the posteriors', [m.probs for m in F.posteriors] == [m.probs for m in G.posteriors], repr(G))
        tally.record('cutoff equilibria of G inside those of F', compare_equilibrium_sets(game, F, G).f_contains_g, repr(game))
    return tally.result()

def auction_suite(rng : np.random.Generator, count : int)->DemoResult:
    """ ETIs raise revenue by a·(s′ − s) each and decompose back exactly """
    tally = Tally('auction')
    for _ in range(count):
        space = random_space(rng, int(rng.integers(2, 6)), spread_values = True)
        G = random_joint(rng, space, 2)
        steps = [EtiStep(i, j, a) for i, j, a in random_eti_steps(rng, G, int(rng.integers(1, 5)))]
        F = eti_apply_sequence(G, steps, check_prefixes = True)
        gain = auction_revenue(F) - auction_revenue(G)
        predicted = sum((step.revenue_increment(space) for step in steps), Fraction(0))
        decomposition = eti_decompose(F, G)
        tally.instances += 1
        tally.record('revenue does not fall', gain >= 0, repr(F))
        tally.record('revenue gain is Σ a·(s′ − s)', gain == predicted, repr(F))
        tally.record('decomposition replays to F', bool(decomposition) and eti_apply_sequence(G, decomposition.steps) == F, repr(F))
    return tally.result()

def rationalize_suite(rng : np.random.Generator, count : int)->DemoResult:
    """ Invest sets grow under diagonal mixtures; fixpoints within n steps """
    tally = Tally('rationalize')
    for _ in range(count):
        space = random_space(rng, int(rng.integers(2, 6)))
        G = random_joint(rng, space, 2)
        F = diagonal_mixture(G, _mixture_weight(rng))
        x = tuple(random_rational(rng, Fraction(0), Fraction(1)) for _ in range(space.n))
        f_sets, g_sets = rationalizable_sets(F, x.__getitem__), rationalizable_sets(G, x.__getitem__)
        tally.instances += 1
        tally.record(
            'invest sets grow',
            all(g <= f for g, f in zip(g_sets.invest, f_sets.invest)),
            repr(G),
        )
        tally.record(
            'fixpoint within n steps',
            all(k <= space.n for k in f_sets.iterations + g_sets.iterations),
            repr(G),
        )
    return tally.result()

SUITES : Dict[str, Callable[[np.random.Generator, int], DemoResult]] = {
    'orders' : orders_suite,
    'inclusion' : inclusion_suite,
    'converse' : converse_suite,
    'congestion' : congestion_suite,
    'strong' : strong_suite,
    'common' : common_suite,
    'auction' : auction_suite,
    'rationalize' : rationalize_suite,
    'expected-count' : expected_count_suite,
}

# instances per suite when no count is given
SUITE_COUNTS : Dict[str, int] = {
    'orders' : 500,
    'inclusion' : 200,
    'converse' : 100,
    'congestion' : 200,
    'strong' : 100,
    'common' : 100,
    'auction' : 100,
    'rationalize' : 100,
    'expected-count' : 1000,
}

def run_suite(name : str, seed : int, count : Optional[int] = None)->DemoResult:
    """ The same seed gives the same instance stream and the same report """
    if count is None:
        count = SUITE_COUNTS[name]
    result = SUITES[name](np.random.default_rng(seed), count)
    result.report = {'seed' : seed, 'count' : count, **result.report}
    return result
