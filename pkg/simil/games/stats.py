"""
Interim incentive reports and participation statistics across an
equilibrium set.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

import pandas as pd

from .strategy import Strategy
from ..utils.rationals import format_rational

PARTICIPATE = 'participate'
ABSTAIN = 'abstain'
UNOBSERVED = 'unobserved'

@dataclass(frozen=True)
class ICEntry():
    """
    Net payoff of participating at one signal (for one player when
    `player` is set) and whether the prescribed action is a best
    response. Signals with zero probability are `UNOBSERVED` and
    always satisfied.
    """
    signal : str
    action : str
    net_payoff : Optional[Fraction]
    player : Optional[int] = None

    @property
    def satisfied(self)->bool:
        if self.action == UNOBSERVED:
            return True
        if self.action == PARTICIPATE:
            return self.net_payoff >= 0
        return self.net_payoff <= 0

    @property
    def strict(self)->bool:
        """ The prescribed action is the unique best response """
        if self.action == PARTICIPATE:
            return self.net_payoff > 0
        if self.action == ABSTAIN:
            return self.net_payoff < 0
        return False

    def to_dict(self)->dict:
        out = {
            'signal' : self.signal,
            'action' : self.action,
            'net_payoff' : None if self.net_payoff is None else format_rational(self.net_payoff),
            'satisfied' : self.satisfied,
        }
        if self.player is not None:
            out['player'] = self.player
        return out

@dataclass
class ICReport():
    """ Per-signal IC entries of one strategy; truthy iff all hold """
    strategy : Strategy
    entries : List[ICEntry] = field(default_factory=list)

    @property
    def holds(self)->bool:
        return all(entry.satisfied for entry in self.entries)

    def __bool__(self)->bool:
        return self.holds

    @property
    def failures(self)->List[ICEntry]:
        return [entry for entry in self.entries if not entry.satisfied]

    def entry(self, signal : str, player : Optional[int] = None)->ICEntry:
        return next(
            e for e in self.entries
            if e.signal == signal and (player is None or e.player == player)
        )

    @property
    def df(self)->pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    'player' : e.player,
                    'signal' : e.signal,
                    'action' : e.action,
                    'net_payoff' : None if e.net_payoff is None else format_rational(e.net_payoff),
                    'net_payoff_float' : None if e.net_payoff is None else float(e.net_payoff),
                    'satisfied' : e.satisfied,
                }
                for e in self.entries
            ],
            columns = ['player', 'signal', 'action', 'net_payoff', 'net_payoff_float', 'satisfied'],
        )

    def to_dict(self)->dict:
        return {
            'strategy' : self.strategy.labels(),
            'holds' : self.holds,
            'entries' : [e.to_dict() for e in self.entries],
        }

@dataclass(frozen=True)
class ParticipationStats():
    """
    Largest and smallest participation mass over an equilibrium set,
    with the strategies attaining them. For cutoff equilibria an empty
    set gives max_p = 0 and min_p = 1; otherwise both are None.
    """
    max_p : Optional[Fraction]
    min_p : Optional[Fraction]
    argmax : Optional[Strategy] = None
    argmin : Optional[Strategy] = None

    @classmethod
    def over(
            cls,
            equilibria : Sequence[Strategy],
            mass : Callable[[Strategy], Fraction],
            empty_conventions : bool = False,
        )->'ParticipationStats':
        if len(equilibria) == 0:
            if empty_conventions:
                return cls(Fraction(0), Fraction(1))
            return cls(None, None)
        masses = [(mass(sigma), sigma) for sigma in equilibria]
        top = max(masses, key = lambda pair: pair[0])
        bottom = min(masses, key = lambda pair: pair[0])
        return cls(top[0], bottom[0], top[1], bottom[1])

    @property
    def eqmaxp(self)->Optional[Fraction]:
        return self.max_p

    @property
    def eqminp(self)->Optional[Fraction]:
        return self.min_p

    def to_dict(self)->dict:
        return {
            'max_p' : None if self.max_p is None else format_rational(self.max_p),
            'min_p' : None if self.min_p is None else format_rational(self.min_p),
            'argmax' : None if self.argmax is None else self.argmax.labels(),
            'argmin' : None if self.argmin is None else self.argmin.labels(),
        }

@dataclass
class EquilibriumSet():
    """ Every equilibrium found, in enumeration order, with statistics """
    strategies : List[Strategy]
    stats : ParticipationStats
    reports : List[ICReport] = field(default_factory=list)

    def __len__(self)->int:
        return len(self.strategies)

    def __iter__(self):
        return iter(self.strategies)

    def __contains__(self, sigma : Strategy)->bool:
        return sigma.participation in self.participation_sets

    @property
    def participation_sets(self)->frozenset:
        return frozenset(sigma.participation for sigma in self.strategies)

    @property
    def df(self)->pd.DataFrame:
        rows = []
        for sigma in self.strategies:
            rows.append({
                'participation' : sigma.labels(),
                'cutoff' : getattr(sigma, 'cutoff', None),
                'is_empty' : sigma.is_empty,
            })
        return pd.DataFrame(rows, columns = ['participation', 'cutoff', 'is_empty'])

    def to_dict(self)->dict:
        return {
            'equilibria' : [
                {
                    'participation' : sigma.labels(),
                    **({'cutoff' : sigma.cutoff} if hasattr(sigma, 'cutoff') else {}),
                    'is_empty' : sigma.is_empty,
                }
                for sigma in self.strategies
            ],
            'stats' : self.stats.to_dict(),
        }
