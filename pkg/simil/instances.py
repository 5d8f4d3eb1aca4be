"""
Small exact instances that the orders and games are checked against:
pairs that separate the orders from one another, and the bank-run
pair behind the correlation puzzle. The same instances ship as files
under `fixtures/`.
"""
from fractions import Fraction
from typing import Dict, Tuple

from .applications.auction import EtiStep, eti_apply_sequence
from .applications.bankrun import BankRunParams, bank_run_family, bank_run_game, middle_state_joint
from .dist.family import StateFamily
from .dist.joint import JointDist, product
from .dist.space import SignalSpace
from .dist.transforms import diagonal_mixture
from .games.common import CommonValueGame
from .games.private import PrivateValueGame
from .utils.rationals import to_rational

PUZZLE_EPSILON = Fraction(1, 20)
PUZZLE_P = Fraction(97, 100)
PUZZLE_A = Fraction(1, 10000)

CONTOUR_SHIFT_ALPHA = Fraction(1, 100)
SM_NOT_CAD_ALPHA = Fraction(1, 270)

def binary_space()->SignalSpace:
    return SignalSpace.from_values([0, 1])

def supermodular_gap_pair()->Tuple[JointDist, JointDist]:
    """
    Three players, binary signals. F is CAD-higher than G, yet the
    indicator of (1,1,1) has lower mean under F (1/6 < 1/4) while the
    indicator of (0,0,0) has higher mean (1/3 > 0), so F and G are not
    supermodular-ranked.
    """
    space = binary_space()
    F = JointDist(space, 3, {
        (0, 0, 0) : Fraction(1, 3),
        (0, 1, 1) : Fraction(1, 2),
        (1, 1, 1) : Fraction(1, 6),
    })
    G = JointDist(space, 3, {
        (0, 0, 1) : Fraction(3, 4),
        (1, 1, 1) : Fraction(1, 4),
    })
    return F, G

def contour_shift_pair(alpha = CONTOUR_SHIFT_ALPHA)->Tuple[JointDist, JointDist]:
    """
    (F', F) on {1, 2, 3, 4}², F independent uniform. F' adds α on
    (1,1), (2,3), (3,2), (4,4) and removes α from (1,3), (2,4), (3,1),
    (4,2). F' is contour-CAD-higher than F but not CAD-higher: the
    conditional of 3 given 2 rises.
    """
    alpha = to_rational(alpha)
    space = SignalSpace.from_values([1, 2, 3, 4])
    base = product([Fraction(1, 4)] * 4, 2, space)
    changes = {
        (0, 0) : alpha, (3, 3) : alpha, (1, 2) : 2 * alpha,
        (0, 2) : -2 * alpha, (1, 3) : -2 * alpha,
    }
    masses = dict(base.multiset_items())
    for multiset, delta in changes.items():
        masses[multiset] = masses.get(multiset, Fraction(0)) + delta
    return JointDist(space, 2, masses, by_index = True), base

def sm_not_cad_pair(alpha = SM_NOT_CAD_ALPHA)->Tuple[JointDist, JointDist]:
    """
    (F, G) on {1, 2, 3}³ with G independent uniform. F removes 6α
    from (2,2,2) and α from each ordering of (1,2,3), and adds 2α to
    each ordering of (1,2,2) and of (2,2,3). F is built by supermodular
    transfers but is neither CAD- nor contour-CAD-higher: given 2,
    the others' chance of 2, and of {1, 2}, falls.
    """
    alpha = to_rational(alpha)
    space = SignalSpace.from_values([1, 2, 3])
    base = product([Fraction(1, 3)] * 3, 3, space)
    # totals over all orderings of each multiset
    changes = {
        (1, 1, 1) : -6 * alpha,
        (0, 1, 1) : 6 * alpha,
        (1, 1, 2) : 6 * alpha,
        (0, 1, 2) : -6 * alpha,
    }
    masses = dict(base.multiset_items())
    for multiset, delta in changes.items():
        masses[multiset] += delta
    return JointDist(space, 3, masses, by_index = True), base

def puzzle_params(a = PUZZLE_A)->BankRunParams:
    return BankRunParams.intro(PUZZLE_EPSILON, PUZZLE_P, a)

def correlation_puzzle_pair(a = PUZZLE_A)->Tuple[JointDist, JointDist]:
    """
    Middle-state joints of the bank run: the perturbed table against
    the conditionally independent one. Quadrant dependence rises, CAD
    and contour-CAD fail at 1/2.
    """
    params = puzzle_params(a)
    return middle_state_joint(params), middle_state_joint(params.with_a(0))

def correlation_puzzle_families(a = PUZZLE_A)->Tuple[StateFamily, StateFamily]:
    params = puzzle_params(a)
    return bank_run_family(params), bank_run_family(params.with_a(0))

def dominance_game(space : SignalSpace, players : int)->PrivateValueGame:
    """ α ≡ 1, β ≡ 0: participating is dominant at every signal """
    return PrivateValueGame(space, players, (Fraction(1),) * space.n, (Fraction(0),) * space.n)

def puzzle_game()->CommonValueGame:
    return bank_run_game()

AUCTION_STEPS = (
    EtiStep(0, 1, Fraction(1, 50)),
    EtiStep(0, 3, Fraction(1, 40)),
    EtiStep(1, 3, Fraction(1, 100)),
)

def auction_pair()->Tuple[JointDist, JointDist]:
    """
    Two bidders valuing 1, 2, 3 or 4, independent uniform under G; F
    adds `AUCTION_STEPS` to G.
    """
    G = product([Fraction(1, 4)] * 4, 2, SignalSpace.from_values([1, 2, 3, 4]))
    return eti_apply_sequence(G, AUCTION_STEPS, check_prefixes = True), G

RATIONALIZE_X = (Fraction(-1, 10), Fraction(1, 5), Fraction(7, 10), Fraction(11, 10))
RATIONALIZE_T = Fraction(1, 2)

def rationalize_pair()->Tuple[JointDist, JointDist]:
    """ (diagonal mixture with weight 1/2, independent uniform) on {1, 2, 3, 4}² """
    G = product([Fraction(1, 4)] * 4, 2, SignalSpace.from_values([1, 2, 3, 4]))
    return diagonal_mixture(G, RATIONALIZE_T), G

def exchangeable_pairs()->Dict[str, Tuple[JointDist, JointDist]]:
    """ Every named exchangeable (F, G) pair above """
    return {
        'supermodular_gap' : supermodular_gap_pair(),
        'contour_shift' : contour_shift_pair(),
        'sm_not_cad' : sm_not_cad_pair(),
        'correlation_puzzle' : correlation_puzzle_pair(),
        'auction' : auction_pair(),
        'rationalize' : rationalize_pair(),
    }
