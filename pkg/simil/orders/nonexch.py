"""
CAD without exchangeability: the diagonal and off-diagonal
conditions hold for every ordered pair of players (i, j).
"""
from itertools import permutations
from typing import Iterator

from .checker import OrderChecker
from .mixins import EqualPlayerMarginalsMixin
from .verdict import Order, OrderVerdict, PairViolation, PointViolation, SetViolation, Violation
from ..dist.joint import JointDistBase, NonExchJointDist

def as_nonexch(dist : JointDistBase)->NonExchJointDist:
    if isinstance(dist, NonExchJointDist):
        return dist
    return dist.to_nonexch()

class NonExchCADChecker(EqualPlayerMarginalsMixin, OrderChecker):
    """
    Player pairs (i, j) in lexicographic order; within a pair,
    diagonals for every signal, then off-diagonals. The violation is
    a `PairViolation` around a `PointViolation`; its Set form is a
    `PairViolation` around a `SetViolation`.
    """
    ORDER = Order.CAD_NONEXCH

    def __init__(self, F : JointDistBase, G : JointDistBase):
        super().__init__(as_nonexch(F), as_nonexch(G))

    def conditions(self)->Iterator[Violation]:
        F, G = self.F, self.G
        for i, j in permutations(range(F.players), 2):
            # conditions at a null signal of player i are vacuous
            positive = [s for s, m in enumerate(F.marginal_vectors[i]) if m > 0]
            for s in positive:
                K = frozenset((s,))
                f, g = F.conditional(i, j, s, K), G.conditional(i, j, s, K)
                if f < g:
                    yield PairViolation(
                        lhs = f, rhs = g, i = i, j = j,
                        inner = PointViolation(lhs = f, rhs = g, s = s, s_prime = s),
                    )
            for s in positive:
                for s_prime in range(F.n):
                    if s_prime == s:
                        continue
                    K = frozenset((s_prime,))
                    f, g = F.conditional(i, j, s, K), G.conditional(i, j, s, K)
                    if f > g:
                        yield PairViolation(
                            lhs = f, rhs = g, i = i, j = j,
                            inner = PointViolation(lhs = f, rhs = g, s = s, s_prime = s_prime),
                        )

    def set_form(self, violation):
        if not isinstance(violation, PairViolation):
            return None
        point = violation.inner
        if point.diagonal:
            K = frozenset((point.s,))
        else:
            K = frozenset(range(self.F.n)) - {point.s_prime}
        f = self.F.conditional(violation.i, violation.j, point.s, K)
        g = self.G.conditional(violation.i, violation.j, point.s, K)
        return PairViolation(
            lhs = f, rhs = g, i = violation.i, j = violation.j,
            inner = SetViolation(lhs = f, rhs = g, s = point.s, K = K),
        )

def check_cad_nonexch(F : JointDistBase, G : JointDistBase)->OrderVerdict:
    """ Exchangeable inputs are expanded; the verdict then matches `check_cad` """
    return NonExchCADChecker(F, G).verdict
