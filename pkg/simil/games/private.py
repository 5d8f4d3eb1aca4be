"""
Private-value games: the net payoff of participating at signal s is
α(s) + β(s)·h(A), A the number of other participants. β ≥ 0 at every
signal makes a coordination game, β ≤ 0 a congestion game; both go
through the same code.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Tuple, TYPE_CHECKING
import logging

from .aggregator import Aggregator, Affine
from .stats import ICEntry, ICReport, EquilibriumSet, ParticipationStats, PARTICIPATE, ABSTAIN, UNOBSERVED
from .strategy import Strategy
from ..dist.joint import JointDist
from ..dist.space import SignalSpace, same_space
from ..errors import ParameterError, SpaceMismatchError
from ..utils.rationals import to_rational, format_rational

if TYPE_CHECKING:
    from ..utils.types import RationalLike, SignalLike

COORDINATION = 'coordination'
CONGESTION = 'congestion'

@dataclass(frozen=True)
class PrivateValueGame():
    space : SignalSpace
    players : int
    alpha : Tuple[Fraction, ...]
    beta : Tuple[Fraction, ...]
    h : Aggregator = Affine()

    def __post_init__(self):
        object.__setattr__(self, 'alpha', tuple(to_rational(a) for a in self.alpha))
        object.__setattr__(self, 'beta', tuple(to_rational(b) for b in self.beta))
        if len(self.alpha) != self.space.n or len(self.beta) != self.space.n:
            raise ParameterError(
                f"α and β need one entry per signal ({self.space.n}), "
                f"got {len(self.alpha)} and {len(self.beta)}"
            )
        if any(b < 0 for b in self.beta) and any(b > 0 for b in self.beta):
            raise ParameterError(
                f"β must be single-signed, got {[format_rational(b) for b in self.beta]}"
            )
        self.h.check_players(self.players)

    @classmethod
    def from_mappings(
            cls,
            space : SignalSpace,
            players : int,
            alpha : Mapping['SignalLike', 'RationalLike'],
            beta : Mapping['SignalLike', 'RationalLike'],
            h : Aggregator = Affine(),
        )->'PrivateValueGame':
        a = [Fraction(0)] * space.n
        b = [Fraction(0)] * space.n
        for s, v in alpha.items():
            a[space.index(s)] = to_rational(v)
        for s, v in beta.items():
            b[space.index(s)] = to_rational(v)
        return cls(space, players, tuple(a), tuple(b), h)

    @property
    def kind(self)->str:
        """ Coordination when β ≥ 0 everywhere, congestion otherwise """
        return CONGESTION if any(b < 0 for b in self.beta) else COORDINATION

    def payoff(self, A : 'RationalLike', i : int)->Fraction:
        """ d(A, s_i) """
        return self.alpha[i] + self.beta[i] * self.h(A)

    def to_dict(self)->dict:
        return {
            'kind' : 'private',
            'signals' : self.space.to_dict(),
            'players' : self.players,
            'alpha' : [format_rational(a) for a in self.alpha],
            'beta' : [format_rational(b) for b in self.beta],
            'h' : self.h.to_dict(),
        }

def _require_compatible(game : PrivateValueGame, dist : JointDist):
    if not same_space(game.space, dist.space) or game.players != dist.players:
        raise SpaceMismatchError(
            f"Game over {game.space.labels} with {game.players} players cannot be played "
            f"on a distribution over {dist.space.labels} with {dist.players} players"
        )

def expected_aggregate(h : Aggregator, dist : JointDist, i : int, P)->Fraction:
    """ E[h(C(P)) | s_i] """
    if isinstance(h, Affine):
        return h.k * (dist.players - 1) * dist.conditional(i, P) + h.l
    return h.expectation(dist.count_pmf(i, P))

def _net_payoff(game : PrivateValueGame, dist : JointDist, sigma : Strategy, i : int)->Fraction:
    if game.beta[i] == 0:
        dist._require_positive(i)
        return game.alpha[i]
    return game.alpha[i] + game.beta[i] * expected_aggregate(game.h, dist, i, sigma.participation)

def net_payoff_private(
        game : PrivateValueGame,
        dist : JointDist,
        sigma : Strategy,
        s : 'SignalLike',
    )->Fraction:
    """
    E[d(A, s) | s, σ] = α(s) + β(s)·E[h(C(P)) | s]. For affine h this
    is α(s) + β(s)·(k·(N−1)·F_s(P) + l).
    """
    _require_compatible(game, dist)
    return _net_payoff(game, dist, sigma, dist.space.index(s))

def ic_report_private(game : PrivateValueGame, dist : JointDist, sigma : Strategy)->ICReport:
    _require_compatible(game, dist)
    report = ICReport(sigma)
    for i, label in enumerate(dist.space.labels):
        if dist.marginal_vector[i] == 0:
            report.entries.append(ICEntry(label, UNOBSERVED, None))
            continue
        action = PARTICIPATE if sigma.participates(i) else ABSTAIN
        report.entries.append(ICEntry(label, action, _net_payoff(game, dist, sigma, i)))
    return report

def is_equilibrium_private(game : PrivateValueGame, dist : JointDist, sigma : Strategy)->ICReport:
    """
    IC:P at every s ∈ P and IC:NP at every s ∉ P, weakly. The report
    is truthy exactly when σ is an equilibrium.
    """
    return ic_report_private(game, dist, sigma)

def participation_mass(dist : JointDist, sigma : Strategy)->Fraction:
    return sum((dist.marginal_vector[i] for i in sigma.participation), Fraction(0))

def enumerate_equilibria_private(game : PrivateValueGame, dist : JointDist)->EquilibriumSet:
    """
    Checks all 2^n participation sets, smallest first. Statistics are
    the marginal mass of P, so distributions with a shared marginal
    can be compared directly.
    """
    _require_compatible(game, dist)
    strategies, reports = [], []
    for sigma in Strategy.all_strategies(dist.space):
        report = ic_report_private(game, dist, sigma)
        if report:
            strategies.append(sigma)
            reports.append(report)
    logging.info(
        f"{len(strategies)} equilibria of the {game.kind} game among {2 ** dist.n} strategies"
    )
    return EquilibriumSet(
        strategies,
        ParticipationStats.over(strategies, lambda sigma: participation_mass(dist, sigma)),
        reports,
    )
