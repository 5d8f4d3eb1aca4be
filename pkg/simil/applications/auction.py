"""
Second-price auctions with two bidders whose valuations are the
signals. Truthful bidding is weakly dominant, so revenue is the
expected second-highest value, E[min(s_1, s_2)].

Between two equal-marginal distributions with F CAD-higher than G,
F is reached from G by elementary transformations on identical
intervals (ETIs), each raising revenue by a·(s' − s).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import pandas as pd

from ..dist.joint import JointDist, require_same_shape
from ..dist.transforms import apply_eti
from ..errors import InfeasibleTransformError, ParameterError
from ..orders.mixins import first_marginal_mismatch
from ..utils.rationals import format_rational

def _require_two_bidders(dist : JointDist):
    if dist.players != 2:
        raise ParameterError(f"Auction revenue is defined for 2 bidders, got {dist.players}")

def auction_revenue(dist : JointDist)->Fraction:
    """ E[min(s_1, s_2)] over the signal values """
    _require_two_bidders(dist)
    values = dist.space.values
    # multisets are sorted, so the first index is the lower valuation
    return sum((p * values[multiset[0]] for multiset, p in dist.multiset_items()), Fraction(0))

@dataclass(frozen=True)
class EtiStep():
    """ +a at (s,s) and (s',s'), −a at (s,s') and (s',s); indices with s < s' """
    s : int
    s_prime : int
    a : Fraction

    def __post_init__(self):
        if not self.s < self.s_prime:
            raise ParameterError(f"An ETI needs s < s', got {self.s} and {self.s_prime}")
        if self.a < 0:
            raise ParameterError(f"ETI magnitude must be nonnegative, got {format_rational(self.a)}")

    def revenue_increment(self, space)->Fraction:
        """ a·(s' − s) """
        return self.a * (space.values[self.s_prime] - space.values[self.s])

    def to_dict(self, space)->dict:
        return {
            's' : space.labels[self.s],
            's_prime' : space.labels[self.s_prime],
            'a' : format_rational(self.a),
        }

@dataclass(frozen=True)
class EtiFailure():
    """ An off-diagonal cell where F has more mass than G """
    s : int
    s_prime : int
    f_mass : Fraction
    g_mass : Fraction

    def to_dict(self, space)->dict:
        return {
            's' : space.labels[self.s],
            's_prime' : space.labels[self.s_prime],
            'F' : format_rational(self.f_mass),
            'G' : format_rational(self.g_mass),
        }

@dataclass
class EtiDecomposition():
    """
    Steps taking G to F, or the first off-diagonal cell that rules a
    decomposition out. Truthy when the decomposition exists.
    """
    space : object
    steps : List[EtiStep] = field(default_factory=list)
    failure : Optional[EtiFailure] = None

    def __bool__(self)->bool:
        return self.failure is None

    @property
    def df(self)->pd.DataFrame:
        rows = [
            {
                's' : self.space.labels[step.s],
                's_prime' : self.space.labels[step.s_prime],
                'a' : format_rational(step.a),
                'revenue_increment' : format_rational(step.revenue_increment(self.space)),
            }
            for step in self.steps
        ]
        return pd.DataFrame(rows, columns = ['s', 's_prime', 'a', 'revenue_increment'])

    def to_dict(self)->dict:
        return {
            'decomposes' : bool(self),
            'steps' : [step.to_dict(self.space) for step in self.steps],
            'failure' : None if self.failure is None else self.failure.to_dict(self.space),
        }

def _ordered_cell(dist : JointDist, s : int, s_prime : int)->Fraction:
    """ Prob(s_1 = s, s_2 = s') for s ≠ s' """
    return dist.multiset_mass((s, s_prime)) / 2

def eti_decompose(F : JointDist, G : JointDist)->EtiDecomposition:
    """
    a_{ss'} = G(s,s') − F(s,s') for every s < s'. All must be
    nonnegative; the first negative one, in (s, s') order, is
    returned as the failure. Zero steps are left out.
    """
    _require_two_bidders(F)
    require_same_shape(F, G)
    mismatch = first_marginal_mismatch(F, G)
    if mismatch is not None:
        raise ParameterError(f"ETIs preserve marginals, but {mismatch.describe(F.space)}")
    decomposition = EtiDecomposition(F.space)
    for s in range(F.n):
        for s_prime in range(s + 1, F.n):
            f, g = _ordered_cell(F, s, s_prime), _ordered_cell(G, s, s_prime)
            if f > g:
                decomposition.failure = EtiFailure(s, s_prime, f, g)
                decomposition.steps = []
                return decomposition
            if g > f:
                decomposition.steps.append(EtiStep(s, s_prime, g - f))
    return decomposition

def eti_apply_sequence(
        G : JointDist,
        steps : Sequence[EtiStep],
        check_prefixes : bool = False,
    )->JointDist:
    """
    Applies the steps to G. With `check_prefixes`, each intermediate
    distribution must be valid and the first one that is not raises
    `InfeasibleTransformError`; otherwise only the result is checked.
    """
    _require_two_bidders(G)
    if check_prefixes:
        dist = G
        for k, step in enumerate(steps):
            try:
                dist = apply_eti(dist, dist.space.labels[step.s], dist.space.labels[step.s_prime], step.a)
            except InfeasibleTransformError as e:
                raise InfeasibleTransformError(f"Prefix of {k + 1} steps is invalid: {e}") from e
        return dist
    masses : Dict[tuple, Fraction] = dict(G.multiset_items())
    for step in steps:
        i, j = step.s, step.s_prime
        for cell, delta in (((i, i), step.a), ((j, j), step.a), ((i, j), -2 * step.a)):
            masses[cell] = masses.get(cell, Fraction(0)) + delta
    return JointDist(G.space, G.players, masses, by_index = True)

def revenue_table(G : JointDist, steps : Sequence[EtiStep])->pd.DataFrame:
    """ Revenue after each step next to its predicted increment a·(s' − s) """
    rows = []
    dist = G
    revenue = auction_revenue(G)
    for step in steps:
        dist = eti_apply_sequence(dist, [step])
        new_revenue = auction_revenue(dist)
        rows.append({
            's' : G.space.labels[step.s],
            's_prime' : G.space.labels[step.s_prime],
            'a' : format_rational(step.a),
            'increment' : format_rational(new_revenue - revenue),
            'predicted' : format_rational(step.revenue_increment(G.space)),
            'revenue' : format_rational(new_revenue),
            'revenue_float' : float(new_revenue),
        })
        revenue = new_revenue
    return pd.DataFrame(
        rows,
        columns = ['s', 's_prime', 'a', 'increment', 'predicted', 'revenue', 'revenue_float'],
    )
