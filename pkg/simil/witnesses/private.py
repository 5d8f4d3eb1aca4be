"""
Witnesses for the CAD characterization: from a set K ∋ s* with
F_{s*}(K) < G_{s*}(K), a private-value affine coordination game in
which the participation set K (or its complement) is an equilibrium
under G but not under F.
"""
from fractions import Fraction
from typing import Optional
import logging

from .package import WitnessPackage, WitnessDirection, PRIVATE_MAX, PRIVATE_MIN
from ..dist.joint import JointDist
from ..errors import UnverifiableViolationError
from ..games.aggregator import Affine
from ..games.private import PrivateValueGame
from ..games.strategy import Strategy
from ..orders.verdict import SetViolation
from ..utils.rationals import format_rational

def require_verified(G : JointDist, violation : SetViolation, F : Optional[JointDist] = None):
    """
    The violation must be strict, cite G's value at (s*, K) and, when
    F is given, F's value too.
    """
    if not isinstance(violation, SetViolation):
        raise UnverifiableViolationError(
            f"Expected a Set violation (s*, K), got {type(violation).__name__}"
        )
    s, K = violation.s, violation.K
    if s not in K:
        raise UnverifiableViolationError(f"Signal {G.space.labels[s]} is not in K = {G.space.labels_of(K)}")
    if not violation.lhs < violation.rhs:
        raise UnverifiableViolationError(
            f"Not a strict violation: {format_rational(violation.lhs)} ≥ {format_rational(violation.rhs)}"
        )
    g = G.conditional(s, K)
    if g != violation.rhs:
        raise UnverifiableViolationError(
            f"G_s(K) is {format_rational(g)}, the violation cites {format_rational(violation.rhs)}"
        )
    if F is not None:
        f = F.conditional(s, K)
        if f != violation.lhs:
            raise UnverifiableViolationError(
                f"F_s(K) is {format_rational(f)}, the violation cites {format_rational(violation.lhs)}"
            )

def witness_private_max(
        G : JointDist,
        violation : SetViolation,
        F : Optional[JointDist] = None,
    )->WitnessPackage:
    """
    α = −G_{s*}(K) at s*, 1 elsewhere in K, −2 off K; β = 1/(N−1);
    h(A) = A. Then 1_K is an equilibrium under G with s* indifferent,
    signals off K never participate, and under F s* strictly prefers
    to stay out, so maxP falls.
    """
    require_verified(G, violation, F)
    s_star, K = violation.s, violation.K
    N = G.players
    alpha = tuple(
        -violation.rhs if i == s_star else (Fraction(1) if i in K else Fraction(-2))
        for i in range(G.n)
    )
    beta = (Fraction(1, N - 1),) * G.n
    game = PrivateValueGame(G.space, N, alpha, beta, Affine(1, 0))
    logging.info(f"Max-participation witness pivoting at {G.space.labels[s_star]}")
    return WitnessPackage(
        family = PRIVATE_MAX,
        game = game,
        strategy = Strategy(G.space, K),
        pivot = s_star,
        holding_net_payoff = Fraction(0),
        failing_net_payoff = violation.lhs - violation.rhs,
        direction = WitnessDirection.MAX_PARTICIPATION_DROPS,
    )

def witness_private_min(
        G : JointDist,
        violation : SetViolation,
        F : Optional[JointDist] = None,
    )->WitnessPackage:
    """
    Participation set K^c = S∖K. α = 1 on K^c, −G_{s*}(K^c) at s*,
    −2 on the rest of K; β = 1/(N−1); h(A) = A. Under F the pivot s*
    strictly prefers to join since F_{s*}(K^c) > G_{s*}(K^c), so
    minP rises.
    """
    require_verified(G, violation, F)
    s_star, K = violation.s, violation.K
    N = G.players
    complement = frozenset(range(G.n)) - K
    g_complement = 1 - violation.rhs
    alpha = tuple(
        Fraction(1) if i in complement else (-g_complement if i == s_star else Fraction(-2))
        for i in range(G.n)
    )
    beta = (Fraction(1, N - 1),) * G.n
    game = PrivateValueGame(G.space, N, alpha, beta, Affine(1, 0))
    return WitnessPackage(
        family = PRIVATE_MIN,
        game = game,
        strategy = Strategy(G.space, complement),
        pivot = s_star,
        holding_net_payoff = Fraction(0),
        failing_net_payoff = violation.rhs - violation.lhs,
        direction = WitnessDirection.MIN_PARTICIPATION_RISES,
    )
