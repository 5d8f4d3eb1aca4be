"""
Witnesses for common-value games.

`witness_common` turns a state-θ* contour violation into an affine
coordination game whose complementarity lives only at θ*; the
participation incentives of every other signal come from a functional
separating the posteriors. `witness_separable` does the same with a
state-independent β from a contour violation between the mixtures.

Both need the posteriors of all signals to be affinely independent.
"""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple
import logging

from .package import WitnessPackage, WitnessDirection, COMMON, SEPARABLE
from .separation import SeparatingFunctional, separating_functional
from ..dist.family import StateFamily
from ..errors import DegenerateViolationError, UnverifiableViolationError
from ..games.aggregator import Affine
from ..games.common import CommonValueGame, is_equilibrium_common, net_payoff_common
from ..games.strategy import CutoffStrategy
from ..orders.statewise import require_comparable_families
from ..orders.verdict import ContourViolation, Direction, StateViolation
from ..utils.rationals import format_rational

def contour_partition(n : int, pivot : int, s_hat : int, direction : Direction)->Tuple[List[int], List[int], int]:
    """
    Signals below the participation set, signals in it (the pivot
    excluded) and the 1-based cutoff. Upward the participation set is
    ŝ↑ and holds the pivot; downward it is the signals above ŝ.
    """
    if direction is Direction.UP:
        below = list(range(s_hat))
        above = [s for s in range(s_hat, n) if s != pivot]
        return below, above, s_hat + 1
    below = [s for s in range(s_hat + 1) if s != pivot]
    above = list(range(s_hat + 1, n))
    return below, above, s_hat + 2

def _require_contour(violation, name : str)->ContourViolation:
    if not isinstance(violation, ContourViolation):
        raise UnverifiableViolationError(
            f"Expected a Contour violation{name}, got {type(violation).__name__}"
        )
    if violation.direction is Direction.UP and violation.s_hat > violation.s:
        raise UnverifiableViolationError("An upper-contour violation needs ŝ ≤ s")
    if violation.direction is Direction.DOWN and violation.s_hat < violation.s:
        raise UnverifiableViolationError("A lower-contour violation needs ŝ ≥ s")
    return violation

def _require_strict(violation, lhs : Fraction, rhs : Fraction):
    if not violation.lhs < violation.rhs:
        raise UnverifiableViolationError(
            f"Not a strict violation: {format_rational(violation.lhs)} ≥ {format_rational(violation.rhs)}"
        )
    if (lhs, rhs) != (violation.lhs, violation.rhs):
        raise UnverifiableViolationError(
            f"Recomputed values {format_rational(lhs)} < {format_rational(rhs)} differ from the "
            f"cited {format_rational(violation.lhs)} < {format_rational(violation.rhs)}"
        )

def _shift(coefficients : Sequence[Fraction], a : Fraction)->Tuple[Fraction, ...]:
    return tuple(c + a for c in coefficients)

def _separate(family : StateFamily, below : Sequence[int], pivot : int, above : Sequence[int])->SeparatingFunctional:
    mu = family.posteriors
    return separating_functional([mu[s] for s in below], mu[pivot], [mu[s] for s in above])

def largest_feasible_weight(constraints : Sequence[Tuple[Fraction, Fraction]])->Optional[Fraction]:
    """
    Supremum of k > 0 keeping every c0 + c1·k positive, for c0 > 0;
    `None` when no constraint binds.
    """
    bounds = [c0 / -c1 for c0, c1 in constraints if c1 < 0]
    return min(bounds) if bounds else None

def witness_common(
        Gfam : StateFamily,
        violation : StateViolation,
        Ffam : StateFamily,
    )->WitnessPackage:
    """
    α = λ + a with λ separating the posteriors below the participation
    set, the pivot's and those in it; β(θ) = k/(N−1) at θ* only and
    h(A) = A. k is half the largest weight keeping the separation
    gaps positive (1 when unbounded) and a makes the pivot exactly
    indifferent under G.

    Upward violations give P = ŝ↑, from which the pivot drops out
    under F; downward ones give P = {s > ŝ}, which the pivot joins
    under F.
    """
    require_comparable_families(Ffam, Gfam)
    if not isinstance(violation, StateViolation):
        raise UnverifiableViolationError(
            f"Expected a State violation (θ*, Contour), got {type(violation).__name__}"
        )
    inner = _require_contour(violation.inner, " inside the State violation")
    _require_strict(violation, *violation.recompute(Ffam, Gfam))

    theta_star, pivot, s_hat = violation.theta, inner.s, inner.s_hat
    space, n = Gfam.space, Gfam.space.n
    mu = Gfam.posteriors
    if mu[pivot].probs[theta_star] == 0:
        raise DegenerateViolationError(
            f"Signal {space.labels[pivot]} rules out state {Gfam.states.labels[theta_star]}"
        )
    below, above, cutoff = contour_partition(n, pivot, s_hat, inner.direction)
    strategy = CutoffStrategy.at(space, cutoff)
    joint = Gfam.per_state[theta_star]

    def weight(s : int)->Fraction:
        """ μ(s)(θ*)·G^θ*_s(P) """
        m = mu[s].probs[theta_star]
        return Fraction(0) if m == 0 else m * joint.conditional(s, strategy.participation)

    separation = _separate(Gfam, below, pivot, above)
    value = separation.value
    x = mu[pivot]
    l_x = weight(pivot)
    if inner.direction is Direction.UP:
        # below never joins: its weight is at most μ(a)(θ*) whatever P
        constraints = (
            [(value(x) - value(mu[a]), l_x - mu[a].probs[theta_star]) for a in below]
            + [(value(mu[b]) - value(x), weight(b) - l_x) for b in above]
        )
        direction = WitnessDirection.MAX_PARTICIPATION_DROPS
    else:
        # above always joins: its weight is at least 0 whatever P
        constraints = (
            [(value(x) - value(mu[a]), l_x - weight(a)) for a in below]
            + [(value(mu[b]) - value(x), -l_x) for b in above]
        )
        direction = WitnessDirection.MIN_PARTICIPATION_RISES
    bound = largest_feasible_weight(constraints)
    k = Fraction(1) if bound is None else bound / 2

    N = Gfam.players
    a = -(value(x) + k * l_x)
    alpha = _shift(separation.coefficients, a)
    beta = tuple(
        k / (N - 1) if theta == theta_star else Fraction(0)
        for theta in range(Gfam.states.n)
    )
    game = CommonValueGame(Gfam.states, alpha, beta, Affine(1, 0))
    logging.info(
        f"Common-value witness at state {Gfam.states.labels[theta_star]}, "
        f"pivot {space.labels[pivot]}, k = {format_rational(k)}"
    )
    return WitnessPackage(
        family = COMMON,
        game = game,
        strategy = strategy,
        pivot = pivot,
        holding_net_payoff = net_payoff_common(game, Gfam, strategy, space.labels[pivot]),
        failing_net_payoff = net_payoff_common(game, Ffam, strategy, space.labels[pivot]),
        direction = direction,
    )

def _scaled_separable(
        separation : SeparatingFunctional,
        x,
        g : Sequence[Fraction],
        pivot : int,
        players : int,
    )->Tuple[Tuple[Fraction, ...], Fraction]:
    """
    β = 1/(N−1) and α = c·λ + b with c exceeding every |g(s) − g(s̃)|
    over the unit separation gaps, b setting the pivot to zero.
    """
    spread = max((abs(gs - g[pivot]) for gs in g), default = Fraction(0))
    c = spread + 1
    b = -c * separation.value(x) - g[pivot]
    alpha = tuple(c * coefficient + b for coefficient in separation.coefficients)
    return alpha, Fraction(1, players - 1)

def witness_separable(
        Gfam : StateFamily,
        violation : ContourViolation,
        Ffam : StateFamily,
    )->WitnessPackage:
    """
    Constant-β common-value game from a contour violation between the
    mixtures. The participation set follows the violation's direction
    as in `witness_common`; membership is certified, the participation
    bounds are not.

    For upward violations β = −E_{μ(s̃)}[α] / ((N−1)·G_{s̃}(ŝ↑)) with
    α a separating functional shifted so that E_{μ(s̃)}[α] < 0. When
    that fails IC somewhere, or for downward violations, β = 1/(N−1)
    and the functional is scaled until its gaps dominate the spread of
    the mixture conditionals.
    """
    require_comparable_families(Ffam, Gfam)
    inner = _require_contour(violation, "")
    Fmix, Gmix = Ffam.mixture, Gfam.mixture
    _require_strict(inner, *inner.recompute(Fmix, Gmix))

    pivot, s_hat = inner.s, inner.s_hat
    space, n, N = Gfam.space, Gfam.space.n, Gfam.players
    below, above, cutoff = contour_partition(n, pivot, s_hat, inner.direction)
    strategy = CutoffStrategy.at(space, cutoff)
    separation = _separate(Gfam, below, pivot, above)
    x = Gfam.posteriors[pivot]
    g = [Gmix.conditional(s, strategy.participation) for s in range(n)]

    game = None
    if inner.direction is Direction.UP:
        shift = (separation.value(x) + separation.min_b) / 2 if above else separation.value(x) + 1
        alpha = _shift(separation.coefficients, -shift)
        beta = -x.expectation(alpha) / ((N - 1) * g[pivot])
        candidate = CommonValueGame(Gfam.states, alpha, (beta,) * Gfam.states.n, Affine(1, 0))
        if is_equilibrium_common(candidate, Gfam, strategy):
            game = candidate
        else:
            logging.debug("Separable witness: unscaled construction fails IC, scaling the functional")
    if game is None:
        alpha, beta = _scaled_separable(separation, x, g, pivot, N)
        game = CommonValueGame(Gfam.states, alpha, (beta,) * Gfam.states.n, Affine(1, 0))
    return WitnessPackage(
        family = SEPARABLE,
        game = game,
        strategy = strategy,
        pivot = pivot,
        holding_net_payoff = net_payoff_common(game, Gfam, strategy, space.labels[pivot]),
        failing_net_payoff = net_payoff_common(game, Ffam, strategy, space.labels[pivot]),
    )
