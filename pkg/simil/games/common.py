"""
Common-value games: the net payoff of participating is
α(θ) + β(θ)·h(A) for a state θ that no player observes. A player
with signal s weighs states by the posterior μ(s) and, within each
state, counts other participants under F^θ.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, TYPE_CHECKING
import logging

from .aggregator import Aggregator, Affine
from .private import expected_aggregate
from .stats import ICEntry, ICReport, EquilibriumSet, ParticipationStats, PARTICIPATE, ABSTAIN
from .strategy import CutoffStrategy, Strategy
from ..dist.family import StateFamily, StateSpace
from ..dist.space import same_space
from ..errors import ParameterError, SpaceMismatchError
from ..utils.rationals import to_rational, format_rational

if TYPE_CHECKING:
    from ..utils.types import SignalLike

@dataclass(frozen=True)
class CommonValueGame():
    """ α and β indexed by state, β ≥ 0 """
    states : StateSpace
    alpha : Tuple[Fraction, ...]
    beta : Tuple[Fraction, ...]
    h : Aggregator = Affine()

    def __post_init__(self):
        object.__setattr__(self, 'alpha', tuple(to_rational(a) for a in self.alpha))
        object.__setattr__(self, 'beta', tuple(to_rational(b) for b in self.beta))
        if len(self.alpha) != self.states.n or len(self.beta) != self.states.n:
            raise ParameterError(
                f"α and β need one entry per state ({self.states.n}), "
                f"got {len(self.alpha)} and {len(self.beta)}"
            )
        if any(b < 0 for b in self.beta):
            raise ParameterError(
                f"β must be nonnegative in a common-value game, got {[format_rational(b) for b in self.beta]}"
            )

    @property
    def separable(self)->bool:
        """ β does not depend on the state """
        return len(set(self.beta)) == 1

    def payoff(self, A, theta : int)->Fraction:
        """ d(A, θ) """
        return self.alpha[theta] + self.beta[theta] * self.h(A)

    def to_dict(self)->dict:
        return {
            'kind' : 'common',
            'states' : self.states.to_dict(),
            'alpha' : [format_rational(a) for a in self.alpha],
            'beta' : [format_rational(b) for b in self.beta],
            'h' : self.h.to_dict(),
        }

def _require_compatible(game : CommonValueGame, family : StateFamily):
    if not same_space(game.states, family.states):
        raise SpaceMismatchError(
            f"Game over states {game.states.labels} cannot be played on a family "
            f"over states {family.states.labels}"
        )
    game.h.check_players(family.players)

def _net_payoff(game : CommonValueGame, family : StateFamily, sigma : Strategy, i : int)->Fraction:
    mu = family.posteriors[i]
    total = Fraction(0)
    for theta, weight in enumerate(mu.probs):
        if weight == 0:
            continue
        payoff = game.alpha[theta]
        if game.beta[theta] != 0:
            joint = family.per_state[theta]
            payoff += game.beta[theta] * expected_aggregate(game.h, joint, i, sigma.participation)
        total += weight * payoff
    return total

def net_payoff_common(
        game : CommonValueGame,
        family : StateFamily,
        sigma : Strategy,
        s : 'SignalLike',
    )->Fraction:
    """
    Σ_θ μ(s)(θ)·[α(θ) + β(θ)·E_θ[h(C(P)) | s]]. States the posterior
    rules out are skipped, so F^θ is only conditioned where its
    marginal at s is positive.
    """
    _require_compatible(game, family)
    return _net_payoff(game, family, sigma, family.space.index(s))

def is_equilibrium_common(game : CommonValueGame, family : StateFamily, sigma : Strategy)->ICReport:
    _require_compatible(game, family)
    report = ICReport(sigma)
    for i, label in enumerate(family.space.labels):
        action = PARTICIPATE if sigma.participates(i) else ABSTAIN
        report.entries.append(ICEntry(label, action, _net_payoff(game, family, sigma, i)))
    return report

def is_cutoff_equilibrium(game : CommonValueGame, family : StateFamily, cutoff : int)->ICReport:
    """ IC report of the strategy participating exactly at s_c, ..., s_n """
    return is_equilibrium_common(game, family, CutoffStrategy.at(family.space, cutoff))

def participation_mass(family : StateFamily, sigma : Strategy)->Fraction:
    """ Prior-weighted marginal mass of P """
    return sum((family.mixture_marginal[i] for i in sigma.participation), Fraction(0))

def enumerate_cutoff_equilibria(game : CommonValueGame, family : StateFamily)->EquilibriumSet:
    """
    Checks the n+1 cutoffs, c = 1 (everyone participates) first.
    The empty cutoff c = n+1 enters like the others and is flagged
    by `is_empty`; an empty result has eqmaxp = 0 and eqminp = 1.
    """
    _require_compatible(game, family)
    strategies, reports = [], []
    for sigma in CutoffStrategy.all_cutoffs(family.space):
        report = is_equilibrium_common(game, family, sigma)
        if report:
            strategies.append(sigma)
            reports.append(report)
    logging.info(f"{len(strategies)} cutoff equilibria among {family.space.n + 1} cutoffs")
    return EquilibriumSet(
        strategies,
        ParticipationStats.over(
            strategies,
            lambda sigma: participation_mass(family, sigma),
            empty_conventions = True,
        ),
        reports,
    )

def enumerate_equilibria_common(game : CommonValueGame, family : StateFamily)->EquilibriumSet:
    """ All 2^n participation sets """
    _require_compatible(game, family)
    strategies, reports = [], []
    for sigma in Strategy.all_strategies(family.space):
        report = is_equilibrium_common(game, family, sigma)
        if report:
            strategies.append(sigma)
            reports.append(report)
    return EquilibriumSet(
        strategies,
        ParticipationStats.over(strategies, lambda sigma: participation_mass(family, sigma)),
        reports,
    )
