"""
Witness packages: a game and a strategy that separate two
information structures, plus the net payoffs at the pivotal signal.
`verify_package` replays the claims with the games module only,
never trusting the constructor.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Union
import logging

import pandas as pd

from ..dist.family import StateFamily
from ..dist.joint import JointDist
from ..games.common import (
    CommonValueGame, enumerate_cutoff_equilibria, is_equilibrium_common, net_payoff_common,
)
from ..games.private import (
    PrivateValueGame, enumerate_equilibria_private, is_equilibrium_private, net_payoff_private,
)
from ..games.strategy import Strategy
from ..utils.rationals import format_rational

class WitnessDirection(Enum):
    MAX_PARTICIPATION_DROPS = 'MaxParticipationDrops'
    MIN_PARTICIPATION_RISES = 'MinParticipationRises'

PRIVATE_MAX = 'private-max'
PRIVATE_MIN = 'private-min'
COMMON = 'common'
SEPARABLE = 'separable'
SCAD = 'scad'
CONGESTION = 'congestion'

FAMILIES = (PRIVATE_MAX, PRIVATE_MIN, COMMON, SEPARABLE, SCAD, CONGESTION)

@dataclass(frozen=True)
class WitnessPackage():
    """
    `strategy` is an equilibrium of `game` under `equilibrium_under`
    ('G' for coordination witnesses, 'F' for congestion ones) and not
    under the other distribution. The pivotal signal is exactly
    indifferent on the equilibrium side; `failing_net_payoff` is its
    net payoff on the other side. When `direction` is set, the
    corresponding participation bound changes strictly.
    """
    family : str
    game : Union[PrivateValueGame, CommonValueGame]
    strategy : Strategy
    pivot : int
    holding_net_payoff : Fraction
    failing_net_payoff : Fraction
    direction : Optional[WitnessDirection] = None
    equilibrium_under : str = 'G'

    @property
    def failing_side(self)->str:
        return 'F' if self.equilibrium_under == 'G' else 'G'

    def to_dict(self)->dict:
        space = self.strategy.space
        return {
            'family' : self.family,
            'game' : self.game.to_dict(),
            'strategy' : self.strategy.labels(),
            'cutoff' : getattr(self.strategy, 'cutoff', None),
            'direction' : None if self.direction is None else self.direction.value,
            'equilibrium_under' : self.equilibrium_under,
            'certification' : {
                'pivot' : space.labels[self.pivot],
                'holding_net_payoff' : format_rational(self.holding_net_payoff),
                'failing_net_payoff' : format_rational(self.failing_net_payoff),
            },
        }

@dataclass(frozen=True)
class Claim():
    name : str
    passed : bool
    detail : str = ''

@dataclass
class VerificationTranscript():
    """ Each replayed claim, in order; passes when all do """
    family : str
    claims : List[Claim] = field(default_factory=list)

    @property
    def passed(self)->bool:
        return len(self.claims) > 0 and all(c.passed for c in self.claims)

    def __bool__(self)->bool:
        return self.passed

    def add(self, name : str, passed : bool, detail : str = ''):
        self.claims.append(Claim(name, bool(passed), detail))
        if not passed:
            logging.warning(f"Witness claim failed: {name} ({detail})")

    @property
    def df(self)->pd.DataFrame:
        return pd.DataFrame(
            [{'claim' : c.name, 'passed' : c.passed, 'detail' : c.detail} for c in self.claims],
            columns = ['claim', 'passed', 'detail'],
        )

    def to_dict(self)->dict:
        return {
            'family' : self.family,
            'passed' : self.passed,
            'claims' : [{'claim' : c.name, 'passed' : c.passed, 'detail' : c.detail} for c in self.claims],
        }

def _fmt(x : Optional[Fraction])->str:
    return 'none' if x is None else format_rational(x)

def verify_package(
        package : WitnessPackage,
        F : Union[JointDist, StateFamily],
        G : Union[JointDist, StateFamily],
    )->VerificationTranscript:
    """
    Replays: equilibrium on the holding side, indifference of the
    pivot there, failure of the pivot's IC on the other side, and the
    strict change of maxP / minP (or eqmaxp / eqminp) when claimed.
    """
    game, sigma, pivot = package.game, package.strategy, package.pivot
    sides = {'F' : F, 'G' : G}
    holding, failing = sides[package.equilibrium_under], sides[package.failing_side]
    if isinstance(game, CommonValueGame):
        is_eq, net, enumerate_ = is_equilibrium_common, net_payoff_common, enumerate_cutoff_equilibria
    else:
        is_eq, net, enumerate_ = is_equilibrium_private, net_payoff_private, enumerate_equilibria_private
    label = sigma.space.labels[pivot]

    transcript = VerificationTranscript(package.family)
    holds = is_eq(game, holding, sigma)
    transcript.add(
        f"equilibrium under {package.equilibrium_under}",
        holds,
        "" if holds else f"IC fails at {[e.signal for e in holds.failures]}",
    )
    pivot_holding = net(game, holding, sigma, label)
    transcript.add(
        f"pivot {label} indifferent under {package.equilibrium_under}",
        pivot_holding == 0,
        f"net payoff {format_rational(pivot_holding)}",
    )
    fails = is_eq(game, failing, sigma)
    pivot_entry = fails.entry(label)
    transcript.add(
        f"not an equilibrium under {package.failing_side}",
        not fails and not pivot_entry.satisfied,
        f"pivot net payoff {_fmt(pivot_entry.net_payoff)} while {pivot_entry.action}",
    )
    if package.direction is not None:
        holding_stats = enumerate_(game, holding).stats
        failing_stats = enumerate_(game, failing).stats
        if package.direction is WitnessDirection.MAX_PARTICIPATION_DROPS:
            h, f = holding_stats.max_p, failing_stats.max_p
            ok = h is not None and (f is None or f < h)
            name = "maximal participation drops"
        else:
            h, f = holding_stats.min_p, failing_stats.min_p
            ok = h is not None and (f is None or f > h)
            name = "minimal participation rises"
        transcript.add(
            name,
            ok,
            f"{package.failing_side}: {_fmt(f)}, {package.equilibrium_under}: {_fmt(h)}",
        )
    return transcript
