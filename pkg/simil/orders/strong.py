"""
Strong CAD: for every s and every K ∋ s the count C(K) of other
players with signals in K is first-order stochastically higher
under F than under G.

The check runs over n·2^(n-1) sets and N-1 thresholds per set, each
count distribution costing one pass over the multisets.
"""
from fractions import Fraction
from typing import Iterator

from .cad import positive_signals
from .checker import OrderChecker
from .mixins import EqualMarginalsMixin
from .verdict import CountViolation, Order, OrderVerdict, Violation
from ..dist.joint import JointDist

def tail_probabilities(pmf)->list:
    """ [Prob(C ≥ m) for m = 0, ..., N-1] """
    tails, running = [], Fraction(0)
    for q in reversed(pmf):
        running += q
        tails.append(running)
    return tails[::-1]

class StrongCADChecker(EqualMarginalsMixin, OrderChecker):
    """ s ascending, then K by size and lexicographically, then m = 1..N-1 """
    ORDER = Order.SCAD

    def conditions(self)->Iterator[Violation]:
        F, G = self.F, self.G
        for s in positive_signals(F):
            for K in F.space.subsets_containing(s):
                f_tail = tail_probabilities(F.count_pmf(s, K))
                g_tail = tail_probabilities(G.count_pmf(s, K))
                for m in range(1, F.players):
                    if f_tail[m] < g_tail[m]:
                        yield CountViolation(lhs = f_tail[m], rhs = g_tail[m], s = s, K = K, m = m)

def check_scad(F : JointDist, G : JointDist)->OrderVerdict:
    return StrongCADChecker(F, G).verdict
