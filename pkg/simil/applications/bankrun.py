"""
Two-player bank run with three states and three signals, all valued
−1/2, 1/2 and 3/2.

Staying pays θ if the other player stays and θ − 1 if they run;
running pays 0. Staying is the participation action, so the game is
the common-value coordination game d(A, θ) = θ − 1 + A, and the run
region of a strategy is the complement of its participation set.

Signals are right with probability p and otherwise split evenly,
conditionally independent in the extreme states. In the middle state
the perturbation a' moves mass from the two far off-diagonal cells
and the center onto the adjacent off-diagonal cells, which raises
quadrant dependence while lowering the chance that a player seeing
1/2 meets another 1/2.

Two symmetric equilibria can exist. e_G stays on {1/2, 3/2}, e_B only
on {3/2}. e_B survives exactly for a' ≤ α* and e_G for a' ≤ α**.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple
import logging

import pandas as pd

from ..dist.family import StateFamily
from ..dist.joint import JointDist, product
from ..dist.space import SignalSpace
from ..errors import ParameterError
from ..games.aggregator import Affine
from ..games.common import (
    CommonValueGame, enumerate_cutoff_equilibria, net_payoff_common, participation_mass,
)
from ..games.stats import EquilibriumSet
from ..games.strategy import CutoffStrategy
from ..orders.contour import check_ccad
from ..orders.cad import check_cad
from ..orders.quadrant import check_pqd_2d
from ..orders.statewise import check_cad_statewise
from ..orders.verdict import Order, OrderVerdict, StateViolation
from ..utils.rationals import to_rational, format_rational

APPENDIX = 'appendix'
INTRO = 'intro'

LOW, MID, HIGH = 0, 1, 2

# cutoffs (1-based) of the two candidate equilibria
GOOD_CUTOFF = 2
BAD_CUTOFF = 3

def bank_run_space()->SignalSpace:
    return SignalSpace.from_values(['-1/2', '1/2', '3/2'])

def feasibility_bound(p)->Fraction:
    """ Largest a' keeping the middle-state table nonnegative: min(((1−p)/2)², p²/2) """
    p = to_rational(p)
    q = (1 - p) / 2
    return min(q * q, p * p / 2)

def dominance_bound(epsilon)->Fraction:
    """ (3 − 3ε)/(3 − ε); p must exceed it """
    epsilon = to_rational(epsilon)
    return (3 - 3 * epsilon) / (3 - epsilon)

@dataclass(frozen=True)
class BankRunParams():
    """
    ε, the accuracy p and the middle-state perturbation a'. The
    appendix preset has prior (ε, 1−3ε, 2ε) over (−1/2, 1/2, 3/2); the
    intro preset (ε, 1−2ε, ε).
    """
    epsilon : Fraction
    p : Fraction
    a : Fraction = Fraction(0)
    preset : str = APPENDIX

    def __post_init__(self):
        for name in ('epsilon', 'p', 'a'):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.preset not in (APPENDIX, INTRO):
            raise ParameterError(f"Unknown bank-run preset {self.preset!r}")
        upper = Fraction(1, 3) if self.preset == APPENDIX else Fraction(1, 2)
        if not 0 < self.epsilon < upper:
            raise ParameterError(
                f"epsilon must lie in (0, {format_rational(upper)}), got {format_rational(self.epsilon)}"
            )
        if not 0 < self.p < 1:
            raise ParameterError(f"Accuracy p must lie in (0, 1), got {format_rational(self.p)}")
        if not self.p > dominance_bound(self.epsilon):
            raise ParameterError(
                f"Dominance condition fails: p = {format_rational(self.p)} must exceed "
                f"(3−3ε)/(3−ε) = {format_rational(dominance_bound(self.epsilon))}"
            )
        if self.a < 0:
            raise ParameterError(f"Perturbation a' must be nonnegative, got {format_rational(self.a)}")
        bound = feasibility_bound(self.p)
        if self.a > bound:
            q = self.q
            cell = '(-1/2, 3/2)' if q * q <= self.p * self.p / 2 else '(1/2, 1/2)'
            raise ParameterError(
                f"Perturbation a' = {format_rational(self.a)} exceeds the feasibility bound "
                f"{format_rational(bound)}: negative mass at cell {cell}"
            )

    @classmethod
    def appendix(cls, epsilon, p, a = 0)->'BankRunParams':
        return cls(epsilon, p, a, APPENDIX)

    @classmethod
    def intro(cls, epsilon, p, a = 0)->'BankRunParams':
        return cls(epsilon, p, a, INTRO)

    @property
    def q(self)->Fraction:
        return (1 - self.p) / 2

    @property
    def prior(self)->Tuple[Fraction, Fraction, Fraction]:
        e = self.epsilon
        if self.preset == APPENDIX:
            return (e, 1 - 3 * e, 2 * e)
        return (e, 1 - 2 * e, e)

    def with_a(self, a)->'BankRunParams':
        return BankRunParams(self.epsilon, self.p, a, self.preset)

    def to_dict(self)->dict:
        return {
            'epsilon' : format_rational(self.epsilon),
            'p' : format_rational(self.p),
            'a' : format_rational(self.a),
            'preset' : self.preset,
        }

def state_marginal(params : BankRunParams, theta : int)->Tuple[Fraction, ...]:
    """ P(s_i = θ | θ) = p, the other two signals (1−p)/2 each """
    return tuple(params.p if s == theta else params.q for s in range(3))

def middle_state_joint(params : BankRunParams)->JointDist:
    p, q, a = params.p, params.q, params.a
    masses = {
        (LOW, LOW) : q * q,
        (HIGH, HIGH) : q * q,
        (MID, MID) : p * p - 2 * a,
        (LOW, MID) : 2 * (p * q + a),
        (MID, HIGH) : 2 * (p * q + a),
        (LOW, HIGH) : 2 * (q * q - a),
    }
    return JointDist(bank_run_space(), 2, masses, by_index = True)

def bank_run_family(params : BankRunParams)->StateFamily:
    """ Product joints in the extreme states, the perturbed table at θ = 1/2 """
    space = bank_run_space()
    joints = [
        product(state_marginal(params, LOW), 2, space),
        middle_state_joint(params),
        product(state_marginal(params, HIGH), 2, space),
    ]
    return StateFamily(space, params.prior, joints)

def bank_run_game(states : Optional[SignalSpace] = None)->CommonValueGame:
    """ d(A, θ) = θ − 1 + A: α(θ) = θ − 1, β ≡ 1, h(A) = A """
    states = bank_run_space() if states is None else states
    return CommonValueGame(
        states,
        alpha = tuple(v - 1 for v in states.values),
        beta = (Fraction(1),) * states.n,
        h = Affine(1, 0),
    )

def _require_appendix(params : BankRunParams):
    if params.preset != APPENDIX:
        raise ParameterError(
            "Threshold formulas hold for the appendix prior (ε, 1−3ε, 2ε) only, "
            f"not for the {params.preset} preset"
        )

def bank_run_thresholds(epsilon, p, preset : str = APPENDIX)->Tuple[Fraction, Fraction]:
    """
    (α*, α**) from the conditionally independent model:

        α*  = −(E[θ | 1/2] + P(s_j = 3/2 | 1/2) − 1)·p / P(θ = 1/2 | 1/2)
        α** = (E[θ | 1/2] − P(s_j = −1/2 | 1/2))·p / P(θ = 1/2 | 1/2)
    """
    params = BankRunParams(epsilon, p, 0, preset)
    _require_appendix(params)
    family = bank_run_family(params)
    mu = family.posteriors[MID]
    expected_theta = mu.expectation(family.states.values)
    mixture = family.mixture
    to_high = mixture.conditional(MID, frozenset((HIGH,)))
    to_low = mixture.conditional(MID, frozenset((LOW,)))
    weight = params.p / mu.probs[MID]
    alpha_star = -(expected_theta + to_high - 1) * weight
    alpha_star_star = (expected_theta - to_low) * weight
    if not alpha_star < alpha_star_star:
        logging.warning(
            f"Bank-run thresholds out of order at ε = {format_rational(params.epsilon)}, "
            f"p = {format_rational(params.p)}: α* = {format_rational(alpha_star)}, "
            f"α** = {format_rational(alpha_star_star)}"
        )
    return alpha_star, alpha_star_star

def incentive_at_middle(params : BankRunParams, cutoff : int)->Fraction:
    """ Net payoff of staying at s = 1/2 when the other player stays on the cutoff's set """
    family = bank_run_family(params)
    game = bank_run_game(family.states)
    return net_payoff_common(game, family, CutoffStrategy.at(family.space, cutoff), '1/2')

def _root(a0 : Fraction, v0 : Fraction, a1 : Fraction, v1 : Fraction)->Fraction:
    return a0 - v0 * (a1 - a0) / (v1 - v0)

def bank_run_crossings(epsilon, p)->Tuple[Fraction, Fraction]:
    """
    The a' at which the s = 1/2 incentives of e_B and e_G change sign,
    from exact evaluations at a' = 0 and at the feasibility bound. Both
    incentives are affine in a', so the roots may lie outside the
    feasible range.
    """
    params = BankRunParams.appendix(epsilon, p, 0)
    top = params.with_a(feasibility_bound(params.p))
    zero, bound = Fraction(0), top.a
    roots = []
    for cutoff in (BAD_CUTOFF, GOOD_CUTOFF):
        v0 = incentive_at_middle(params, cutoff)
        v1 = incentive_at_middle(top, cutoff)
        roots.append(_root(zero, v0, bound, v1))
    return roots[0], roots[1]

@dataclass(frozen=True)
class BankRunAnalysis():
    """
    Which of e_G and e_B are cutoff equilibria, with the expected
    number of runners over the equilibrium set. Runs are None when no
    cutoff equilibrium exists.
    """
    params : BankRunParams
    equilibria : EquilibriumSet
    good_exists : bool
    bad_exists : bool
    maximal_expected_run : Optional[Fraction]
    minimal_expected_run : Optional[Fraction]

    @property
    def region(self)->str:
        names = [name for name, exists in (('e_G', self.good_exists), ('e_B', self.bad_exists)) if exists]
        return ', '.join(names) if names else 'none'

    def to_dict(self)->dict:
        def fmt(x):
            return None if x is None else format_rational(x)
        return {
            'params' : self.params.to_dict(),
            'eG_exists' : self.good_exists,
            'eB_exists' : self.bad_exists,
            'maximal_expected_run' : fmt(self.maximal_expected_run),
            'minimal_expected_run' : fmt(self.minimal_expected_run),
            'equilibria' : self.equilibria.to_dict(),
        }

def expected_run(family : StateFamily, strategy : CutoffStrategy)->Fraction:
    """ 2·P(s ∉ P); only the marginal enters """
    return 2 * (1 - participation_mass(family, strategy))

def equilibrium_runs(params : BankRunParams)->Tuple[Fraction, Fraction]:
    """
    Expected runs (R(e_G), R(e_B)) whether or not the strategies are
    equilibria. Neither depends on a', so the maximal expected run
    falls by R(e_B) − R(e_G) = 2·P(s = 1/2) once a' passes α*.
    """
    family = bank_run_family(params)
    return tuple(
        expected_run(family, CutoffStrategy.at(family.space, cutoff))
        for cutoff in (GOOD_CUTOFF, BAD_CUTOFF)
    )

def bank_run_analysis(params : BankRunParams)->BankRunAnalysis:
    family = bank_run_family(params)
    equilibria = enumerate_cutoff_equilibria(bank_run_game(family.states), family)
    cutoffs = {sigma.cutoff for sigma in equilibria}
    runs = [expected_run(family, sigma) for sigma in equilibria]
    return BankRunAnalysis(
        params = params,
        equilibria = equilibria,
        good_exists = GOOD_CUTOFF in cutoffs,
        bad_exists = BAD_CUTOFF in cutoffs,
        maximal_expected_run = max(runs) if runs else None,
        minimal_expected_run = min(runs) if runs else None,
    )

def sweep_grid(p, points : int)->list:
    """ `points` equally spaced exact values of a' over [0, feasibility bound] """
    if points < 2:
        raise ParameterError(f"A sweep needs at least 2 points, got {points}")
    bound = feasibility_bound(p)
    return [bound * k / (points - 1) for k in range(points)]

def bank_run_sweep(epsilon, p, points : int = 20, preset : str = APPENDIX)->pd.DataFrame:
    """
    One row per grid value of a'. Exact columns are "num/den"
    strings; `a_float` is for plotting. The thresholds, when defined,
    are in `df.attrs`.
    """
    base = BankRunParams(epsilon, p, 0, preset)
    rows = []
    for a in sweep_grid(base.p, points):
        analysis = bank_run_analysis(base.with_a(a))
        rows.append({
            'a' : format_rational(a),
            'a_float' : float(a),
            'eG' : analysis.good_exists,
            'eB' : analysis.bad_exists,
            'region' : analysis.region,
            'maximal_expected_run' : format_rational(analysis.maximal_expected_run)
                if analysis.maximal_expected_run is not None else None,
            'minimal_expected_run' : format_rational(analysis.minimal_expected_run)
                if analysis.minimal_expected_run is not None else None,
        })
    df = pd.DataFrame(rows, columns = [
        'a', 'a_float', 'eG', 'eB', 'region', 'maximal_expected_run', 'minimal_expected_run',
    ])
    df.attrs['params'] = base.to_dict()
    if preset == APPENDIX:
        alpha_star, alpha_star_star = bank_run_thresholds(epsilon, p)
        df.attrs['alpha_star'] = format_rational(alpha_star)
        df.attrs['alpha_star_star'] = format_rational(alpha_star_star)
    df.attrs['feasibility_bound'] = format_rational(feasibility_bound(base.p))
    return df

@dataclass(frozen=True)
class PuzzleReport():
    """
    The middle-state pair (perturbed F against conditionally independent
    G): quadrant dependence rises while CAD and contour-CAD fail, and
    the equilibrium analyses on both sides.
    """
    params : BankRunParams
    pqd : OrderVerdict
    cad : OrderVerdict
    ccad : OrderVerdict
    statewise_violation : Optional[StateViolation]
    perturbed : BankRunAnalysis
    independent : BankRunAnalysis

    @property
    def degenerate(self)->bool:
        """ a' = 0: the two distributions coincide """
        return self.params.a == 0

    @property
    def bad_eliminated(self)->bool:
        return self.independent.bad_exists and not self.perturbed.bad_exists

    @property
    def correlation_puzzle(self)->bool:
        """ PQD-higher, not CAD- or cCAD-higher """
        return self.pqd.holds and not self.cad.holds and not self.ccad.holds

    def to_dict(self)->dict:
        space = bank_run_space()
        return {
            'params' : self.params.to_dict(),
            'degenerate' : self.degenerate,
            'pqd_holds' : self.pqd.holds,
            'cad_holds' : self.cad.holds,
            'ccad_holds' : self.ccad.holds,
            'correlation_puzzle' : self.correlation_puzzle,
            'statewise_violation' : None if self.statewise_violation is None
                else self.statewise_violation.to_dict(space),
            'bad_equilibrium_eliminated' : self.bad_eliminated,
            'perturbed' : self.perturbed.to_dict(),
            'independent' : self.independent.to_dict(),
        }

def intro_example_suite(params : BankRunParams)->PuzzleReport:
    F_family = bank_run_family(params)
    G_family = bank_run_family(params.with_a(0))
    F, G = F_family.per_state[MID], G_family.per_state[MID]
    statewise = check_cad_statewise(F_family, G_family, Order.CCAD)
    report = PuzzleReport(
        params = params,
        pqd = check_pqd_2d(F, G),
        cad = check_cad(F, G),
        ccad = check_ccad(F, G),
        statewise_violation = statewise.violation,
        perturbed = bank_run_analysis(params),
        independent = bank_run_analysis(params.with_a(0)),
    )
    if report.degenerate:
        logging.info("a' = 0: the perturbed and independent families coincide")
    return report
