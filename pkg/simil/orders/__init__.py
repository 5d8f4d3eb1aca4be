from .verdict import ( # noqa: F401
    Order, Direction, OrderVerdict, StatewiseVerdict,
    Violation, PointViolation, SetViolation, ContourViolation, CountViolation,
    QuadrantViolation, MarginalMismatch, PairViolation, StateViolation, verdicts_frame,
)
from .checker import OrderChecker # noqa: F401
from .cad import check_cad, set_form_of # noqa: F401
from .contour import check_ccad, check_icad # noqa: F401
from .strong import check_scad # noqa: F401
from .quadrant import check_pqd_2d, lower_orthant, supermodular_functional # noqa: F401
from .nonexch import check_cad_nonexch # noqa: F401
from .statewise import check_cad_statewise # noqa: F401

CHECKS = {
    Order.CAD : check_cad,
    Order.CCAD : check_ccad,
    Order.ICAD : check_icad,
    Order.SCAD : check_scad,
    Order.PQD2 : check_pqd_2d,
    Order.CAD_NONEXCH : check_cad_nonexch,
}

def check(order : Order, F, G)->OrderVerdict:
    """ Dispatches to the checker of `order` """
    return CHECKS[Order(order)](F, G)
