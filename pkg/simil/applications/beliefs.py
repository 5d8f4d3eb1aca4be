"""
Belief operators for two players and the rationalizable sets of the
invest game: investing pays x(s) if the other invests and x(s) − 1 if
not, abstaining pays 0.

Investing is rationalizable exactly on the common (1 − x, 1 − x)-belief
of S², not investing on the common (x, x)-belief of S².
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, FrozenSet, Mapping, Optional, Tuple, Union
import logging

from ..dist.joint import JointDist
from ..errors import ParameterError
from ..utils.rationals import to_rational, format_rational

EventPair = Tuple[FrozenSet[int], FrozenSet[int]]
Threshold = Union[Mapping, Callable[[int], Fraction]]

def _require_two_players(dist : JointDist):
    if dist.players != 2:
        raise ParameterError(f"Belief operators are defined for 2 players, got {dist.players}")

def _threshold_vector(dist : JointDist, phi : Threshold)->Tuple[Fraction, ...]:
    """ φ given as a mapping from signals (labels or values) or a function of the index """
    if callable(phi):
        return tuple(to_rational(phi(i)) for i in range(dist.n))
    out = [None] * dist.n
    for s, v in phi.items():
        out[dist.space.index(s)] = to_rational(v)
    if any(v is None for v in out):
        missing = [dist.space.labels[i] for i, v in enumerate(out) if v is None]
        raise ParameterError(f"Threshold map has no value for signals {missing}")
    return tuple(out)

def believed(dist : JointDist, E_own : FrozenSet[int], E_other : FrozenSet[int], phi)->FrozenSet[int]:
    """ B_i^φ(E): the s ∈ E_i with G_s(E_j) ≥ φ(s) """
    return frozenset(s for s in E_own if dist.conditional(s, E_other) >= phi[s])

def belief_step(
        dist : JointDist,
        E : EventPair,
        phi : Tuple[Threshold, Threshold],
    )->EventPair:
    """
    One application of the (φ1, φ2)-belief operator to E = E_1 × E_2,
    returned as its two projections. Conditioning on a zero-marginal
    signal in E raises `ZeroProbabilityError`.
    """
    _require_two_players(dist)
    E1, E2 = frozenset(E[0]), frozenset(E[1])
    phi1, phi2 = (_threshold_vector(dist, f) for f in phi)
    return believed(dist, E1, E2, phi1), believed(dist, E2, E1, phi2)

@dataclass(frozen=True)
class CommonBelief():
    """ The fixpoint of iterated belief and how many steps it took to stop shrinking """
    sets : EventPair
    iterations : int

def common_belief(
        dist : JointDist,
        phi : Tuple[Threshold, Threshold],
        E : Optional[EventPair] = None,
    )->CommonBelief:
    """
    Iterates `belief_step` from E (the observed part of S² by default)
    until the sets stop shrinking. `iterations` counts the steps that
    removed a signal.
    """
    _require_two_players(dist)
    if E is None:
        support = frozenset(s for s, m in enumerate(dist.marginal_vector) if m > 0)
        E = (support, support)
    current = (frozenset(E[0]), frozenset(E[1]))
    iterations = 0
    while True:
        following = belief_step(dist, current, phi)
        if following == current:
            return CommonBelief(current, iterations)
        current = following
        iterations += 1

@dataclass(frozen=True)
class RationalizableSets():
    """ Per-player signals at which investing (resp. not investing) is rationalizable """
    space : object
    invest : EventPair
    not_invest : EventPair
    iterations : Tuple[int, int]

    def to_dict(self)->dict:
        def labels(pair):
            return [self.space.labels_of(sorted(E)) for E in pair]
        return {
            'invest' : labels(self.invest),
            'not_invest' : labels(self.not_invest),
            'iterations' : list(self.iterations),
        }

def rationalizable_sets(dist : JointDist, x : Threshold)->RationalizableSets:
    """
    Invest set: common (1 − x, 1 − x)-belief of S². Not-invest set:
    common (x, x)-belief of S². Signals with zero marginal never occur
    and are left out of both.
    """
    _require_two_players(dist)
    xs = _threshold_vector(dist, x)
    invest_phi = tuple(1 - v for v in xs)
    invest = common_belief(dist, (invest_phi.__getitem__, invest_phi.__getitem__))
    not_invest = common_belief(dist, (xs.__getitem__, xs.__getitem__))
    logging.debug(
        f"Rationalizable sets for x = {[format_rational(v) for v in xs]} after "
        f"{invest.iterations} and {not_invest.iterations} shrinking steps"
    )
    return RationalizableSets(
        space = dist.space,
        invest = invest.sets,
        not_invest = not_invest.sets,
        iterations = (invest.iterations, not_invest.iterations),
    )
