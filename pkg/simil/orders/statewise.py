"""
State-by-state comparison of two families with the same prior and
the same per-state marginals, so that both induce the same
posteriors and only the correlation within each state differs.
"""
from typing import Dict, Type
import logging

from .cad import CADChecker
from .checker import OrderChecker
from .contour import ContourCADChecker, IntervalCADChecker
from .strong import StrongCADChecker
from .verdict import Order, OrderVerdict, StateViolation, StatewiseVerdict
from ..dist.family import StateFamily
from ..dist.space import same_space
from ..errors import ParameterError, SpaceMismatchError
from ..utils.rationals import format_rational

CHECKERS : Dict[Order, Type[OrderChecker]] = {
    Order.CAD : CADChecker,
    Order.CCAD : ContourCADChecker,
    Order.ICAD : IntervalCADChecker,
    Order.SCAD : StrongCADChecker,
}

def require_comparable_families(Ffam : StateFamily, Gfam : StateFamily):
    """ Same states, prior, space, player count and per-state marginals """
    if not same_space(Ffam.states, Gfam.states):
        raise SpaceMismatchError(
            f"State sets differ: {Ffam.states.labels} vs {Gfam.states.labels}"
        )
    if Ffam.prior != Gfam.prior:
        raise ParameterError(
            f"Priors differ: {[format_rational(p) for p in Ffam.prior]} vs "
            f"{[format_rational(p) for p in Gfam.prior]}"
        )
    for theta, F, G in zip(Ffam.states.labels, Ffam.per_state, Gfam.per_state):
        if not same_space(F.space, G.space) or F.players != G.players:
            raise SpaceMismatchError(f"Joints at state {theta} live on different spaces")
        if F.marginal_vector != G.marginal_vector:
            raise ParameterError(
                f"Marginals at state {theta} differ: "
                f"{[format_rational(p) for p in F.marginal_vector]} vs "
                f"{[format_rational(p) for p in G.marginal_vector]}"
            )

def check_cad_statewise(
        Ffam : StateFamily,
        Gfam : StateFamily,
        order : Order = Order.CCAD,
    )->StatewiseVerdict:
    """
    Verdict of `order` at every state, the set T of states where the
    joints differ, and the aggregate: F is higher than G when it is
    higher at every state in T. The first failing state in T gives
    the aggregate's `StateViolation`.
    """
    if order not in CHECKERS:
        raise ParameterError(
            f"Statewise comparison supports {[o.value for o in CHECKERS]}, got {order.value}"
        )
    require_comparable_families(Ffam, Gfam)
    checker = CHECKERS[order]

    per_state : Dict[str, OrderVerdict] = {}
    differing = []
    violation = None
    for idx, (theta, F, G) in enumerate(zip(Ffam.states.labels, Ffam.per_state, Gfam.per_state)):
        verdict = checker(F, G).verdict
        per_state[theta] = verdict
        if F == G:
            continue
        differing.append(theta)
        if violation is None and not verdict.holds:
            inner = verdict.violation
            violation = StateViolation(
                lhs = inner.lhs,
                rhs = inner.rhs,
                theta = idx,
                inner = inner,
                states = Ffam.states,
            )
    if violation is not None:
        logging.debug(f"Statewise {order.value} fails at state {Ffam.states.labels[violation.theta]}")
    return StatewiseVerdict(
        order = order,
        per_state = per_state,
        differing = tuple(differing),
        states = Ffam.states,
        violation = violation,
    )
