"""
Private-value games with a weighted aggregate Σ_{j≠i} λ_j·1{j participates}
on distributions that need not be exchangeable. Every player uses
the same participation set; incentives are checked player by player.
"""
from fractions import Fraction
from typing import Sequence, TYPE_CHECKING

from .aggregator import Affine
from .private import PrivateValueGame
from .stats import ICEntry, ICReport, EquilibriumSet, ParticipationStats, PARTICIPATE, ABSTAIN
from .strategy import Strategy
from ..dist.joint import JointDistBase, NonExchJointDist
from ..dist.space import same_space
from ..errors import ParameterError, SpaceMismatchError, ZeroProbabilityError
from ..utils.rationals import to_rational, format_rational

if TYPE_CHECKING:
    from ..utils.types import RationalLike

def _weighted_expectation(game, weights, dist : NonExchJointDist, i : int, s : int, P)->Fraction:
    """ E[h(Σ_{j≠i} λ_j 1{s_j ∈ P}) | s_i = s] """
    h = game.h
    if isinstance(h, Affine):
        total = Fraction(0)
        for j in range(dist.players):
            if j != i and weights[j] != 0:
                total += weights[j] * dist.conditional(i, j, s, P)
        return h.k * total + h.l
    expectation = Fraction(0)
    for profile, p in dist.ordered_items():
        if profile[i] != s:
            continue
        aggregate = sum(
            (weights[j] for j in range(dist.players) if j != i and profile[j] in P),
            Fraction(0),
        )
        expectation += p * h(aggregate)
    return expectation / dist.marginal_vectors[i][s]

def nonexch_is_equilibrium(
        game : PrivateValueGame,
        weights : Sequence['RationalLike'],
        dist : JointDistBase,
        sigma : Strategy,
    )->ICReport:
    """
    IC at every (player, signal). With all weights 1 on an
    exchangeable distribution this is `is_equilibrium_private`.
    """
    if not same_space(game.space, dist.space) or game.players != dist.players:
        raise SpaceMismatchError("Game and distribution have different spaces or player counts")
    weights = tuple(to_rational(w) for w in weights)
    if len(weights) != dist.players:
        raise ParameterError(f"Need {dist.players} weights, got {len(weights)}")
    if any(w < 0 for w in weights):
        raise ParameterError(f"Weights must be nonnegative, got {[format_rational(w) for w in weights]}")
    if not isinstance(dist, NonExchJointDist):
        dist = dist.to_nonexch()

    report = ICReport(sigma)
    for i in range(dist.players):
        for s, label in enumerate(dist.space.labels):
            if dist.marginal_vectors[i][s] == 0:
                raise ZeroProbabilityError(
                    f"Signal {label} has zero probability for player {i}"
                )
            net = game.alpha[s]
            if game.beta[s] != 0:
                net += game.beta[s] * _weighted_expectation(game, weights, dist, i, s, sigma.participation)
            action = PARTICIPATE if sigma.participates(s) else ABSTAIN
            report.entries.append(ICEntry(label, action, net, player = i))
    return report

def enumerate_equilibria_weighted(
        game : PrivateValueGame,
        weights : Sequence['RationalLike'],
        dist : JointDistBase,
    )->EquilibriumSet:
    """
    Every participation set that is an equilibrium for all players.
    Statistics use the participation mass averaged over players.
    """
    strategies, reports = [], []
    for sigma in Strategy.all_strategies(dist.space):
        report = nonexch_is_equilibrium(game, weights, dist, sigma)
        if report:
            strategies.append(sigma)
            reports.append(report)
    nonexch = dist if isinstance(dist, NonExchJointDist) else dist.to_nonexch()

    def mass(sigma : Strategy)->Fraction:
        per_player = (
            sum((marginal[s] for s in sigma.participation), Fraction(0))
            for marginal in nonexch.marginal_vectors
        )
        return sum(per_player, Fraction(0)) / nonexch.players

    return EquilibriumSet(strategies, ParticipationStats.over(strategies, mass), reports)
