"""
Witnesses for strong CAD: a count violation (s*, K, m) becomes a
threshold game h(A) = 1{A ≥ m} in which K is the largest equilibrium
under G and s* drops out under F.
"""
from fractions import Fraction
from typing import Optional

from .package import WitnessPackage, WitnessDirection, SCAD
from ..dist.joint import JointDist
from ..errors import DegenerateViolationError, UnverifiableViolationError
from ..games.aggregator import Table
from ..games.private import PrivateValueGame
from ..games.strategy import Strategy
from ..orders.strong import tail_probabilities
from ..orders.verdict import CountViolation
from ..utils.rationals import format_rational

def _require_verified(G : JointDist, violation : CountViolation, F : Optional[JointDist]):
    if not isinstance(violation, CountViolation):
        raise UnverifiableViolationError(
            f"Expected a Count violation (s*, K, m), got {type(violation).__name__}"
        )
    s, K, m = violation.s, violation.K, violation.m
    if s not in K:
        raise UnverifiableViolationError(f"Signal {G.space.labels[s]} is not in K = {G.space.labels_of(K)}")
    if not 1 <= m <= G.players - 1:
        raise UnverifiableViolationError(f"Threshold m = {m} outside 1..{G.players - 1}")
    if not violation.lhs < violation.rhs:
        raise UnverifiableViolationError(
            f"Not a strict violation: {format_rational(violation.lhs)} ≥ {format_rational(violation.rhs)}"
        )
    sides = [('G', G, violation.rhs)] + ([('F', F, violation.lhs)] if F is not None else [])
    for name, dist, cited in sides:
        actual = tail_probabilities(dist.count_pmf(s, K))[m]
        if actual != cited:
            raise UnverifiableViolationError(
                f"Prob_{name}(C(K) ≥ {m} | s*) is {format_rational(actual)}, "
                f"the violation cites {format_rational(cited)}"
            )

def witness_scad(
        G : JointDist,
        violation : CountViolation,
        F : Optional[JointDist] = None,
    )->WitnessPackage:
    """
    α ≡ −1, β(s) = 1 / Prob_G(C(K) ≥ m | s) on K and 0 off K. Every
    observed signal in K is indifferent under G; under F the pivot's
    net payoff is −1 + lhs/rhs < 0.

    Raises `DegenerateViolationError` when some observed s ∈ K has
    Prob_G(C(K) ≥ m | s) = 0.
    """
    _require_verified(G, violation, F)
    s_star, K, m = violation.s, violation.K, violation.m
    beta = []
    for i in range(G.n):
        if i not in K or G.marginal_vector[i] == 0:
            beta.append(Fraction(0))
            continue
        tail = tail_probabilities(G.count_pmf(i, K))[m]
        if tail == 0:
            raise DegenerateViolationError(
                f"Prob_G(C(K) ≥ {m} | {G.space.labels[i]}) = 0, no threshold weight makes it indifferent"
            )
        beta.append(1 / tail)
    game = PrivateValueGame(
        G.space, G.players,
        alpha = (Fraction(-1),) * G.n,
        beta = tuple(beta),
        h = Table.threshold(m, G.players),
    )
    return WitnessPackage(
        family = SCAD,
        game = game,
        strategy = Strategy(G.space, K),
        pivot = s_star,
        holding_net_payoff = Fraction(0),
        failing_net_payoff = Fraction(-1) + violation.lhs / violation.rhs,
        direction = WitnessDirection.MAX_PARTICIPATION_DROPS,
    )
