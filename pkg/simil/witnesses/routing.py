"""
Runs the order a witness family refutes and hands its certificate to
the matching constructor.
"""
from typing import Optional, Union
import logging

from .common import witness_common, witness_separable
from .congestion import witness_congestion
from .package import (
    WitnessPackage, FAMILIES, PRIVATE_MAX, PRIVATE_MIN, COMMON, SEPARABLE, SCAD, CONGESTION,
)
from .private import witness_private_max, witness_private_min
from .strong import witness_scad
from ..dist.family import StateFamily
from ..dist.joint import JointDist
from ..errors import ParameterError
from ..orders.cad import check_cad
from ..orders.contour import check_ccad
from ..orders.statewise import check_cad_statewise
from ..orders.strong import check_scad
from ..orders.verdict import MarginalMismatch, Order

FAMILY_ORDERS = {
    PRIVATE_MAX : Order.CAD,
    PRIVATE_MIN : Order.CAD,
    CONGESTION : Order.CAD,
    SCAD : Order.SCAD,
    COMMON : Order.CCAD,
    SEPARABLE : Order.CCAD,
}

def _require_joint(family : str, F, G):
    if not isinstance(F, JointDist) or not isinstance(G, JointDist):
        raise ParameterError(f"The {family} witness needs two exchangeable joint distributions")

def _require_families(family : str, F, G):
    if not isinstance(F, StateFamily) or not isinstance(G, StateFamily):
        raise ParameterError(f"The {family} witness needs two state families")

def witness_from_verdict(
        family : str,
        F : Union[JointDist, StateFamily],
        G : Union[JointDist, StateFamily],
    )->Optional[WitnessPackage]:
    """
    Checks whether F is higher than G in the order `family` refutes
    and, if not, builds the witness from the first violation. Returns
    `None` when the order holds.

    Private and congestion witnesses start from the Set form of a CAD
    failure, the common-value witness from a statewise contour
    failure, the separable one from a contour failure between the
    mixtures.
    """
    if family not in FAMILIES:
        raise ParameterError(f"Unknown witness family {family!r}, expected one of {list(FAMILIES)}")

    if family in (COMMON, SEPARABLE):
        _require_families(family, F, G)
        if family == COMMON:
            verdict = check_cad_statewise(F, G, Order.CCAD)
            violation = verdict.violation
        else:
            verdict = check_ccad(F.mixture, G.mixture)
            violation = verdict.violation
    else:
        _require_joint(family, F, G)
        verdict = check_scad(F, G) if family == SCAD else check_cad(F, G)
        violation = verdict.violation
    if violation is None:
        logging.info(f"F is {FAMILY_ORDERS[family].value}-higher than G; no {family} witness exists")
        return None
    if isinstance(violation, MarginalMismatch):
        raise ParameterError(
            f"Marginals differ at {violation.describe(F.space)}; the orders compare equal-marginal pairs only"
        )

    if family == PRIVATE_MAX:
        return witness_private_max(G, verdict.set_form, F)
    if family == PRIVATE_MIN:
        return witness_private_min(G, verdict.set_form, F)
    if family == CONGESTION:
        return witness_congestion(F, verdict.set_form, G)
    if family == SCAD:
        return witness_scad(G, violation, F)
    if family == COMMON:
        return witness_common(G, violation, F)
    return witness_separable(G, violation, F)
