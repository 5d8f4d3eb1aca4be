"""
Concentration along the diagonal (CAD).

F is CAD-higher than G when the marginals agree, every diagonal
conditional F_s(s) is at least G_s(s) and every off-diagonal
conditional F_s(s') is at most G_s(s'). Only the n x n pair matrices
enter, so a check costs O(n²) once those are built.
"""
from typing import Iterator, Optional

from .checker import OrderChecker
from .mixins import EqualMarginalsMixin
from .verdict import Order, OrderVerdict, PointViolation, SetViolation, Violation
from ..dist.joint import JointDist

def positive_signals(dist : JointDist)->Iterator[int]:
    """ Signals with positive marginal; conditions at null signals are vacuous """
    return (s for s, m in enumerate(dist.marginal_vector) if m > 0)

class CADChecker(EqualMarginalsMixin, OrderChecker):
    """
    Diagonals are checked first for every signal, then off-diagonals
    by (s, s') in signal order.
    """
    ORDER = Order.CAD

    def conditions(self)->Iterator[Violation]:
        F, G = self.F, self.G
        for s in positive_signals(F):
            K = frozenset((s,))
            f, g = F.conditional(s, K), G.conditional(s, K)
            if f < g:
                yield PointViolation(lhs = f, rhs = g, s = s, s_prime = s)
        for s in positive_signals(F):
            for s_prime in range(F.n):
                if s_prime == s:
                    continue
                K = frozenset((s_prime,))
                f, g = F.conditional(s, K), G.conditional(s, K)
                if f > g:
                    yield PointViolation(lhs = f, rhs = g, s = s, s_prime = s_prime)

    def set_form(self, violation : Optional[Violation])->Optional[SetViolation]:
        if not isinstance(violation, PointViolation):
            return None
        return set_form_of(self.F, self.G, violation)

def set_form_of(F : JointDist, G : JointDist, violation : PointViolation)->SetViolation:
    """
    (s*, K ∋ s*) with F_{s*}(K) < G_{s*}(K): K = {s} for a diagonal
    failure, K = S∖{s'} for an off-diagonal one.
    """
    s = violation.s
    if violation.diagonal:
        K = frozenset((s,))
    else:
        K = frozenset(range(F.n)) - {violation.s_prime}
    return SetViolation(
        lhs = F.conditional(s, K),
        rhs = G.conditional(s, K),
        s = s,
        K = K,
    )

def check_cad(F : JointDist, G : JointDist)->OrderVerdict:
    """
    Whether F is CAD-higher than G. A failure by conditionals also
    carries the Set form of its violation.

    ## Example

    ```python
        verdict = check_cad(mixed, base)
        if not verdict:
            print(verdict.violation.describe(base.space))
    ```
    """
    return CADChecker(F, G).verdict
