"""
Witness for the congestion direction: when F_{s*}(K) < G_{s*}(K),
the participation set K is an equilibrium of a congestion game under
F and not under G, so E(Γ, F) ⊄ E(Γ, G).
"""
from fractions import Fraction
from typing import Optional

from .package import WitnessPackage, CONGESTION
from .private import require_verified
from ..dist.joint import JointDist
from ..errors import DegenerateViolationError
from ..games.aggregator import Affine
from ..games.private import PrivateValueGame
from ..games.strategy import Strategy
from ..orders.verdict import SetViolation

def witness_congestion(
        F : JointDist,
        violation : SetViolation,
        G : JointDist,
    )->WitnessPackage:
    """
    α = 1 on K and −1 off K, h(A) = A, β(s) = −1/E_F[A | s] on K and
    0 off K, with E_F[A | s] = (N−1)·F_s(K). Observed signals in K
    are indifferent under F; under G the pivot's net payoff is
    1 − G_{s*}(K)/F_{s*}(K) < 0.
    """
    require_verified(G, violation, F)
    s_star, K = violation.s, violation.K
    if violation.lhs == 0:
        raise DegenerateViolationError(
            f"E_F[A | {F.space.labels[s_star]}] = 0, the congestion weight at the pivot is undefined"
        )
    N = F.players
    beta = []
    for i in range(F.n):
        if i not in K or F.marginal_vector[i] == 0:
            beta.append(Fraction(0))
            continue
        expected = (N - 1) * F.conditional(i, K)
        beta.append(Fraction(0) if expected == 0 else -1 / expected)
    alpha = tuple(Fraction(1) if i in K else Fraction(-1) for i in range(F.n))
    game = PrivateValueGame(F.space, N, alpha, tuple(beta), Affine(1, 0))
    return WitnessPackage(
        family = CONGESTION,
        game = game,
        strategy = Strategy(F.space, K),
        pivot = s_star,
        holding_net_payoff = Fraction(0),
        failing_net_payoff = 1 - violation.rhs / violation.lhs,
        equilibrium_under = 'F',
    )
