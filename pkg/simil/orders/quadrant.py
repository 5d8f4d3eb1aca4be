"""
Positive quadrant dependence for two players, which for bivariate
distributions coincides with the supermodular order, and the
indicator functionals used to show that two distributions are not
supermodular-ranked for three players.
"""
from fractions import Fraction
from typing import Iterator, Sequence, TYPE_CHECKING

import numpy as np

from .checker import OrderChecker
from .mixins import EqualMarginalsMixin, TwoPlayersMixin
from .verdict import Order, OrderVerdict, QuadrantViolation, Violation
from ..dist.joint import JointDist

if TYPE_CHECKING:
    from ..utils.types import SignalLike

def orthant_table(dist : JointDist)->np.ndarray:
    """ [x, y] -> Prob(s_1 ≤ x, s_2 ≤ y), as an exact object array """
    pairs = np.array(dist.pair_matrix, dtype = object)
    return pairs.cumsum(axis = 0).cumsum(axis = 1)

def lower_orthant(dist : JointDist, x : int, y : int)->Fraction:
    return Fraction(orthant_table(dist)[x, y])

class QuadrantChecker(TwoPlayersMixin, EqualMarginalsMixin, OrderChecker):
    ORDER = Order.PQD2

    def conditions(self)->Iterator[Violation]:
        f_table, g_table = orthant_table(self.F), orthant_table(self.G)
        for x in range(self.F.n):
            for y in range(self.F.n):
                if f_table[x, y] < g_table[x, y]:
                    yield QuadrantViolation(
                        lhs = Fraction(f_table[x, y]),
                        rhs = Fraction(g_table[x, y]),
                        x = x,
                        y = y,
                    )

def check_pqd_2d(F : JointDist, G : JointDist)->OrderVerdict:
    return QuadrantChecker(F, G).verdict

def supermodular_functional(dist : JointDist, profile : Sequence['SignalLike'])->Fraction:
    """
    E[1{s⃗ = profile}]. For an all-equal profile at the top or bottom
    of the order the indicator is supermodular, so two distributions
    ranking oppositely on the top and bottom profiles are not
    supermodular-ranked.
    """
    return dist.profile_prob(dist.profile_indices(profile))
