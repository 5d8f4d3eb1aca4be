"""
Concentration on contour sets (cCAD) and on intervals (iCAD). The
two orders coincide since contour sets containing s are intervals
and every interval containing s is an intersection of an upper and
a lower contour set.
"""
from typing import Iterator

from .cad import positive_signals
from .checker import OrderChecker
from .mixins import EqualMarginalsMixin
from .verdict import ContourViolation, Direction, Order, OrderVerdict, SetViolation, Violation
from ..dist.joint import JointDist

class ContourCADChecker(EqualMarginalsMixin, OrderChecker):
    """
    For each s: upper contours ŝ↑ for ŝ ≤ s, then lower contours ŝ↓
    for ŝ ≥ s, each in signal order.
    """
    ORDER = Order.CCAD

    def conditions(self)->Iterator[Violation]:
        F, G = self.F, self.G
        space = F.space
        for s in positive_signals(F):
            for s_hat in range(0, s + 1):
                K = space.upper_contour(s_hat)
                f, g = F.conditional(s, K), G.conditional(s, K)
                if f < g:
                    yield ContourViolation(lhs = f, rhs = g, s = s, s_hat = s_hat, direction = Direction.UP)
            for s_hat in range(s, F.n):
                K = space.lower_contour(s_hat)
                f, g = F.conditional(s, K), G.conditional(s, K)
                if f < g:
                    yield ContourViolation(lhs = f, rhs = g, s = s, s_hat = s_hat, direction = Direction.DOWN)

class IntervalCADChecker(EqualMarginalsMixin, OrderChecker):
    """ Every interval [lo, hi] ∋ s, lo ascending then hi """
    ORDER = Order.ICAD

    def conditions(self)->Iterator[Violation]:
        F, G = self.F, self.G
        for s in positive_signals(F):
            for lo, hi in F.space.intervals_containing(s):
                K = frozenset(range(lo, hi + 1))
                f, g = F.conditional(s, K), G.conditional(s, K)
                if f < g:
                    yield SetViolation(lhs = f, rhs = g, s = s, K = K)

def check_ccad(F : JointDist, G : JointDist)->OrderVerdict:
    return ContourCADChecker(F, G).verdict

def check_icad(F : JointDist, G : JointDist)->OrderVerdict:
    return IntervalCADChecker(F, G).verdict
