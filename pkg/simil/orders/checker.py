"""
The OrderChecker object decides one similarity order between a
pair of joint distributions. The idea is:

Each order is a list of conditions enumerated in a fixed order. A
checker walks that list and stops at the first failure, which
becomes the violation certificate of its verdict. Requirements
shared between orders (equal marginals, two players) are mixins that
run before the walk.
"""
from abc import ABC, abstractmethod
from typing import Iterator, Optional, TYPE_CHECKING
import logging

from .verdict import Order, OrderVerdict, Violation, SetViolation
from ..dist.joint import require_same_shape

if TYPE_CHECKING:
    from ..dist.joint import JointDistBase

class OrderChecker(ABC):
    """
    Decides whether F is higher than G in `ORDER`. The verdict is
    computed on construction and stored as `self.verdict`.

    Subclasses implement `conditions`, yielding each failed condition
    as a `Violation` in enumeration order; only the first is used.
    """
    ORDER : Order

    marginal_mismatch : Optional[Violation] = None

    def __init__(self, F : 'JointDistBase', G : 'JointDistBase'):
        require_same_shape(F, G)
        self.F = F
        self.G = G
        self.verdict = self.check()

    def check(self)->OrderVerdict:
        violation = self.marginal_mismatch
        if violation is None:
            violation = next(self.conditions(), None)
        if violation is not None:
            logging.debug(
                f"{self.__class__.__name__}: {violation.describe(self.F.space)}"
            )
        return OrderVerdict(
            order = self.__class__.ORDER,
            holds = violation is None,
            space = self.F.space,
            violation = violation,
            set_form = self.set_form(violation),
        )

    @abstractmethod
    def conditions(self)->Iterator[Violation]:
        """ Every failed condition, in the fixed enumeration order """

    def set_form(self, violation : Optional[Violation])->Optional[SetViolation]:
        """ Orders with a Set-form certificate override this """
        return None

    def __bool__(self)->bool:
        return self.verdict.holds
