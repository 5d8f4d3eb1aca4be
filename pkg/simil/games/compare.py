"""
Comparing the equilibrium sets one game has under two information
structures.
"""
from dataclasses import dataclass
from typing import Union

from .common import CommonValueGame, enumerate_cutoff_equilibria
from .private import PrivateValueGame, enumerate_equilibria_private
from .stats import EquilibriumSet
from ..dist.family import StateFamily
from ..dist.joint import JointDist
from ..utils.rationals import format_rational

EQUAL = 'equal'
SUPERSET = 'superset'
SUBSET = 'subset'
INCOMPARABLE = 'incomparable'

@dataclass
class InclusionReport():
    """
    `relation` is how E(Γ, F) relates to E(Γ, G): `superset` means
    every equilibrium under G is one under F.
    """
    relation : str
    f_equilibria : EquilibriumSet
    g_equilibria : EquilibriumSet

    @property
    def f_contains_g(self)->bool:
        return self.relation in (EQUAL, SUPERSET)

    @property
    def g_contains_f(self)->bool:
        return self.relation in (EQUAL, SUBSET)

    @property
    def max_p_higher(self)->bool:
        """ maxP under F ≥ maxP under G (vacuous when either set is empty) """
        f, g = self.f_equilibria.stats.max_p, self.g_equilibria.stats.max_p
        return f is None or g is None or f >= g

    @property
    def min_p_lower(self)->bool:
        f, g = self.f_equilibria.stats.min_p, self.g_equilibria.stats.min_p
        return f is None or g is None or f <= g

    def to_dict(self)->dict:
        def strategies(eq):
            return [sigma.labels() for sigma in eq.strategies]
        def fmt(x):
            return None if x is None else format_rational(x)
        return {
            'relation' : self.relation,
            'F' : {
                'equilibria' : strategies(self.f_equilibria),
                'max_p' : fmt(self.f_equilibria.stats.max_p),
                'min_p' : fmt(self.f_equilibria.stats.min_p),
            },
            'G' : {
                'equilibria' : strategies(self.g_equilibria),
                'max_p' : fmt(self.g_equilibria.stats.max_p),
                'min_p' : fmt(self.g_equilibria.stats.min_p),
            },
            'max_p_higher' : self.max_p_higher,
            'min_p_lower' : self.min_p_lower,
        }

def inclusion(f_sets : frozenset, g_sets : frozenset)->str:
    if f_sets == g_sets:
        return EQUAL
    if f_sets >= g_sets:
        return SUPERSET
    if f_sets <= g_sets:
        return SUBSET
    return INCOMPARABLE

def compare_equilibrium_sets(
        game : Union[PrivateValueGame, CommonValueGame],
        F : Union[JointDist, StateFamily],
        G : Union[JointDist, StateFamily],
    )->InclusionReport:
    """
    All symmetric equilibria for a private-value game, cutoff
    equilibria for a common-value game played on two families.
    """
    if isinstance(game, CommonValueGame):
        f_eq = enumerate_cutoff_equilibria(game, F)
        g_eq = enumerate_cutoff_equilibria(game, G)
    else:
        f_eq = enumerate_equilibria_private(game, F)
        g_eq = enumerate_equilibria_private(game, G)
    return InclusionReport(
        inclusion(f_eq.participation_sets, g_eq.participation_sets),
        f_eq,
        g_eq,
    )
