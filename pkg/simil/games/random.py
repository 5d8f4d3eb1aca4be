"""
Seeded generators of random games, drawn on exact rational grids.
"""
from fractions import Fraction

import numpy as np

from .aggregator import Affine, Table
from .common import CommonValueGame
from .private import PrivateValueGame
from ..dist.family import StateSpace
from ..dist.random import random_rational
from ..dist.space import SignalSpace

def random_affine(rng : np.random.Generator)->Affine:
    """ k ∈ (0, 2], l ∈ [−1, 1] """
    return Affine(
        random_rational(rng, Fraction(1, 12), Fraction(2)),
        random_rational(rng, Fraction(-1), Fraction(1)),
    )

def random_table(rng : np.random.Generator, players : int)->Table:
    """ Nondecreasing integer steps from 0, with a final step of at least 1 """
    steps = rng.integers(0, 3, size = players - 1)
    steps[-1] = max(int(steps[-1]), 1)
    values = np.concatenate([[0], np.cumsum(steps)])
    return Table(tuple(Fraction(int(v)) for v in values))

def random_coordination_game(
        rng : np.random.Generator,
        space : SignalSpace,
        players : int,
        table : bool = False,
    )->PrivateValueGame:
    """ α uniform on [−2, 2], β on [0, 2], affine h unless `table` """
    alpha = tuple(random_rational(rng, Fraction(-2), Fraction(2)) for _ in range(space.n))
    beta = tuple(random_rational(rng, Fraction(0), Fraction(2)) for _ in range(space.n))
    h = random_table(rng, players) if table else random_affine(rng)
    return PrivateValueGame(space, players, alpha, beta, h)

def random_congestion_game(
        rng : np.random.Generator,
        space : SignalSpace,
        players : int,
    )->PrivateValueGame:
    """ As `random_coordination_game` with β on [−2, 0] """
    game = random_coordination_game(rng, space, players)
    return PrivateValueGame(space, players, game.alpha, tuple(-b for b in game.beta), game.h)

def random_common_game(
        rng : np.random.Generator,
        states : StateSpace,
        separable : bool = False,
    )->CommonValueGame:
    """ α on [−2, 2] and β on [0, 2] per state; one β for all states if `separable` """
    alpha = tuple(random_rational(rng, Fraction(-2), Fraction(2)) for _ in range(states.n))
    if separable:
        beta = (random_rational(rng, Fraction(1, 12), Fraction(2)),) * states.n
    else:
        beta = tuple(random_rational(rng, Fraction(0), Fraction(2)) for _ in range(states.n))
    return CommonValueGame(states, alpha, beta, random_affine(rng))
