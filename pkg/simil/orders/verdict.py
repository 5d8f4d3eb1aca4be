"""
Verdicts of order checks and the violation certificates they carry.

Every violation stores the F-side value (`lhs`) and the G-side value
(`rhs`) of the condition that failed, and knows how to recompute both
from the inputs so that a verdict can be audited without trusting
the checker.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import ClassVar, Dict, FrozenSet, Mapping, Optional, Tuple, TYPE_CHECKING

import pandas as pd

from ..utils.rationals import format_rational

if TYPE_CHECKING:
    from ..dist.space import SignalSpace
    from ..dist.joint import JointDist, NonExchJointDist
    from ..dist.family import StateFamily

class Order(Enum):
    CAD = 'cad'
    CCAD = 'ccad'
    ICAD = 'icad'
    SCAD = 'scad'
    CAD_STATEWISE = 'cad-statewise'
    PQD2 = 'pqd2'
    CAD_NONEXCH = 'cad-nonexch'

class Direction(Enum):
    UP = 'up'
    DOWN = 'down'

@dataclass(frozen=True)
class Violation(ABC):
    """ A failed order condition: F-side value `lhs`, G-side value `rhs` """
    lhs : Fraction
    rhs : Fraction

    VARIANT : ClassVar[str] = ''

    @abstractmethod
    def recompute(self, F, G)->Tuple[Fraction, Fraction]:
        """ The two cited values, recomputed from the inputs """

    def is_strict(self, lhs : Fraction, rhs : Fraction)->bool:
        """ Most conditions fail when F's value is strictly smaller """
        return lhs < rhs

    def reverify(self, F, G)->bool:
        lhs, rhs = self.recompute(F, G)
        return lhs == self.lhs and rhs == self.rhs and self.is_strict(lhs, rhs)

    @abstractmethod
    def indices(self, space : 'SignalSpace')->dict:
        pass

    def to_dict(self, space : 'SignalSpace')->dict:
        return {
            'variant' : self.VARIANT,
            'indices' : self.indices(space),
            'lhs' : format_rational(self.lhs),
            'rhs' : format_rational(self.rhs),
        }

    def describe(self, space : 'SignalSpace')->str:
        details = ", ".join(f"{k}={v}" for k, v in self.indices(space).items())
        return (
            f"{self.VARIANT}({details}): F-side {format_rational(self.lhs)} "
            f"vs G-side {format_rational(self.rhs)}"
        )

@dataclass(frozen=True)
class PointViolation(Violation):
    """
    s == s_prime: F_s(s) < G_s(s). Otherwise F_s(s') > G_s(s').
    """
    s : int = 0
    s_prime : int = 0

    VARIANT : ClassVar[str] = 'Point'

    @property
    def diagonal(self)->bool:
        return self.s == self.s_prime

    def is_strict(self, lhs, rhs)->bool:
        return lhs < rhs if self.diagonal else lhs > rhs

    def recompute(self, F : 'JointDist', G : 'JointDist'):
        K = frozenset((self.s_prime,))
        return F.conditional(self.s, K), G.conditional(self.s, K)

    def indices(self, space):
        return {'s' : space.labels[self.s], 's_prime' : space.labels[self.s_prime]}

@dataclass(frozen=True)
class SetViolation(Violation):
    """ F_{s*}(K) < G_{s*}(K) with s* ∈ K """
    s : int = 0
    K : FrozenSet[int] = frozenset()

    VARIANT : ClassVar[str] = 'Set'

    def recompute(self, F : 'JointDist', G : 'JointDist'):
        return F.conditional(self.s, self.K), G.conditional(self.s, self.K)

    def indices(self, space):
        return {'s' : space.labels[self.s], 'K' : space.labels_of(self.K)}

@dataclass(frozen=True)
class ContourViolation(Violation):
    """
    up: F_s(ŝ↑) < G_s(ŝ↑) with ŝ ≤ s.
    down: F_s(ŝ↓) < G_s(ŝ↓) with ŝ ≥ s.
    """
    s : int = 0
    s_hat : int = 0
    direction : Direction = Direction.UP

    VARIANT : ClassVar[str] = 'Contour'

    def contour(self, space : 'SignalSpace')->FrozenSet[int]:
        if self.direction is Direction.UP:
            return space.upper_contour(self.s_hat)
        return space.lower_contour(self.s_hat)

    def recompute(self, F : 'JointDist', G : 'JointDist'):
        K = self.contour(F.space)
        return F.conditional(self.s, K), G.conditional(self.s, K)

    def indices(self, space):
        return {
            's' : space.labels[self.s],
            's_hat' : space.labels[self.s_hat],
            'direction' : self.direction.value,
        }

@dataclass(frozen=True)
class CountViolation(Violation):
    """ Prob_F(C(K) ≥ m | s*) < Prob_G(C(K) ≥ m | s*) """
    s : int = 0
    K : FrozenSet[int] = frozenset()
    m : int = 1

    VARIANT : ClassVar[str] = 'Count'

    def recompute(self, F : 'JointDist', G : 'JointDist'):
        return (
            sum(F.count_pmf(self.s, self.K)[self.m:], Fraction(0)),
            sum(G.count_pmf(self.s, self.K)[self.m:], Fraction(0)),
        )

    def indices(self, space):
        return {'s' : space.labels[self.s], 'K' : space.labels_of(self.K), 'm' : self.m}

@dataclass(frozen=True)
class QuadrantViolation(Violation):
    """ F(s_1 ≤ x, s_2 ≤ y) < G(s_1 ≤ x, s_2 ≤ y) """
    x : int = 0
    y : int = 0

    VARIANT : ClassVar[str] = 'Quadrant'

    def recompute(self, F : 'JointDist', G : 'JointDist'):
        from .quadrant import lower_orthant
        return lower_orthant(F, self.x, self.y), lower_orthant(G, self.x, self.y)

    def indices(self, space):
        return {'x' : space.labels[self.x], 'y' : space.labels[self.y]}

@dataclass(frozen=True)
class MarginalMismatch(Violation):
    """ The marginals differ at signal s (for player `player` if given) """
    s : int = 0
    player : Optional[int] = None

    VARIANT : ClassVar[str] = 'MarginalMismatch'

    def is_strict(self, lhs, rhs)->bool:
        return lhs != rhs

    def recompute(self, F, G):
        if self.player is None:
            return F.marginal_vector[self.s], G.marginal_vector[self.s]
        return (
            F.marginal_vectors[self.player][self.s],
            G.marginal_vectors[self.player][self.s],
        )

    def indices(self, space):
        out = {'s' : space.labels[self.s]}
        if self.player is not None:
            out['player'] = self.player
        return out

@dataclass(frozen=True)
class PairViolation(Violation):
    """ A violation of the pairwise condition for players (i, j) """
    i : int = 0
    j : int = 1
    inner : Optional[Violation] = None

    VARIANT : ClassVar[str] = 'Pair'

    def is_strict(self, lhs, rhs)->bool:
        return self.inner.is_strict(lhs, rhs)

    def recompute(self, F : 'NonExchJointDist', G : 'NonExchJointDist'):
        inner = self.inner
        if isinstance(inner, PointViolation):
            K = frozenset((inner.s_prime,))
        else:
            K = inner.K
        return (
            F.conditional(self.i, self.j, inner.s, K),
            G.conditional(self.i, self.j, inner.s, K),
        )

    def indices(self, space):
        return {'i' : self.i, 'j' : self.j, **self.inner.indices(space)}

    def to_dict(self, space):
        out = super().to_dict(space)
        out['inner'] = self.inner.to_dict(space)
        return out

@dataclass(frozen=True)
class StateViolation(Violation):
    """ A violation of the per-state order at state θ* """
    theta : int = 0
    inner : Optional[Violation] = None
    states : Optional['SignalSpace'] = field(default=None, compare=False)

    VARIANT : ClassVar[str] = 'State'

    def is_strict(self, lhs, rhs)->bool:
        return self.inner.is_strict(lhs, rhs)

    def recompute(self, F : 'StateFamily', G : 'StateFamily'):
        return self.inner.recompute(F.per_state[self.theta], G.per_state[self.theta])

    def indices(self, space):
        theta = self.states.labels[self.theta] if self.states is not None else self.theta
        return {'theta' : theta, **self.inner.indices(space)}

    def to_dict(self, space):
        out = super().to_dict(space)
        out['inner'] = self.inner.to_dict(space)
        return out

@dataclass(frozen=True)
class OrderVerdict():
    """
    Result of checking whether F is higher than G in `order`.
    `holds` is true exactly when there is no violation. CAD verdicts
    also carry the Set form of their violation for the witness
    constructors.
    """
    order : Order
    holds : bool
    space : 'SignalSpace'
    violation : Optional[Violation] = None
    set_form : Optional[SetViolation] = None

    def __post_init__(self):
        if self.holds != (self.violation is None):
            raise ValueError("A verdict holds exactly when it has no violation")

    def __bool__(self)->bool:
        return self.holds

    def reverify(self, F, G)->bool:
        """ True if the verdict holds or its violation recomputes strictly """
        if self.holds:
            return True
        ok = self.violation.reverify(F, G)
        if self.set_form is not None:
            ok = ok and self.set_form.reverify(F, G)
        return ok

    def to_dict(self)->dict:
        out = {'order' : self.order.value, 'holds' : self.holds}
        if self.violation is not None:
            out['violation'] = self.violation.to_dict(self.space)
        if self.set_form is not None:
            out['set_form'] = self.set_form.to_dict(self.space)
        return out

@dataclass(frozen=True)
class StatewiseVerdict():
    """
    Per-state verdicts of one order. `differing` is T, the states at
    which the two families' joints differ; the aggregate holds when
    every state in T passes.
    """
    order : Order
    per_state : Mapping[str, OrderVerdict]
    differing : Tuple[str, ...]
    states : 'SignalSpace'
    violation : Optional[StateViolation] = None

    @property
    def holds(self)->bool:
        return self.violation is None

    def __bool__(self)->bool:
        return self.holds

    def __getitem__(self, theta : str)->OrderVerdict:
        return self.per_state[theta]

    def to_dict(self)->dict:
        space = next(iter(self.per_state.values())).space
        out : Dict[str, object] = {
            'order' : Order.CAD_STATEWISE.value,
            'inner_order' : self.order.value,
            'holds' : self.holds,
            'differing_states' : list(self.differing),
            'per_state' : {theta : v.to_dict() for theta, v in self.per_state.items()},
        }
        if self.violation is not None:
            out['violation'] = self.violation.to_dict(space)
        return out

def verdicts_frame(verdicts : Mapping[str, OrderVerdict])->pd.DataFrame:
    """ One row per named verdict: order, holds, and the violation if any """
    rows = []
    for name, verdict in verdicts.items():
        row = {'name' : name, 'order' : verdict.order.value, 'holds' : verdict.holds}
        if verdict.violation is not None:
            v = verdict.violation
            row.update({
                'variant' : v.VARIANT,
                'indices' : v.indices(verdict.space),
                'lhs' : format_rational(v.lhs),
                'rhs' : format_rational(v.rhs),
            })
        rows.append(row)
    return pd.DataFrame(rows, columns = ['name', 'order', 'holds', 'variant', 'indices', 'lhs', 'rhs'])
