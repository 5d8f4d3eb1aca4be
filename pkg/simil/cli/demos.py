"""
Reproductions of the worked examples, each with the exact values it
must show. A demo fails when any of its checks does.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional
import logging

import pandas as pd

from .config import RunConfig
from .. import instances
from ..applications.auction import auction_revenue, eti_decompose, revenue_table
from ..applications.bankrun import (
    APPENDIX, MID, BankRunParams, bank_run_crossings, bank_run_family, bank_run_sweep,
    bank_run_thresholds, equilibrium_runs, intro_example_suite,
)
from ..applications.beliefs import rationalizable_sets
from ..dist.joint import cond_prob
from ..orders.cad import check_cad
from ..orders.contour import check_ccad, check_icad
from ..orders.quadrant import supermodular_functional
from ..orders.verdict import verdicts_frame
from ..utils.rationals import format_rational, to_rational
from ..witnesses.package import COMMON, verify_package
from ..witnesses.routing import witness_from_verdict

def _show(value)->Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_show(v) for v in value]
    return value

@dataclass(frozen=True)
class DemoCheck():
    name : str
    passed : bool
    expected : Any
    actual : Any

    def to_dict(self)->dict:
        return {
            'check' : self.name,
            'passed' : self.passed,
            'expected' : _show(self.expected),
            'actual' : _show(self.actual),
        }

@dataclass
class DemoResult():
    """ A demo's report, its table if it has one, and its checks """
    name : str
    report : Dict[str, Any] = field(default_factory=dict)
    table : Optional[pd.DataFrame] = None
    checks : List[DemoCheck] = field(default_factory=list)

    @property
    def passed(self)->bool:
        return all(c.passed for c in self.checks)

    def expect(self, name : str, actual, expected):
        check = DemoCheck(name, actual == expected, expected, actual)
        self.checks.append(check)
        if not check.passed:
            logging.error(
                f"Demo {self.name}: {name} expected {_show(expected)}, got {_show(actual)}"
            )

    def to_dict(self)->dict:
        out = {
            'demo' : self.name,
            'passed' : self.passed,
            'checks' : [c.to_dict() for c in self.checks],
            **self.report,
        }
        if self.table is not None:
            out['table'] = self.table
        return out

def supermodular_gap(config : RunConfig)->DemoResult:
    F, G = instances.supermodular_gap_pair()
    result = DemoResult('supermodular-gap')
    cad = check_cad(F, G)
    top = (supermodular_functional(F, ('1', '1', '1')), supermodular_functional(G, ('1', '1', '1')))
    bottom = (supermodular_functional(F, ('0', '0', '0')), supermodular_functional(G, ('0', '0', '0')))
    same = (cond_prob(F, '0', ['0']), cond_prob(G, '0', ['0']))
    result.expect('F is CAD-higher than G', cad.holds, True)
    result.expect('E[1{(1,1,1)}] under F, G', top, (Fraction(1, 6), Fraction(1, 4)))
    result.expect('E[1{(0,0,0)}] under F, G', bottom, (Fraction(1, 3), Fraction(0)))
    result.expect('P(s_j = 0 | s_i = 0) under F, G', same, (Fraction(2, 3), Fraction(1, 2)))
    result.report = {'cad' : cad.to_dict()}
    return result

def correlation_puzzle(config : RunConfig)->DemoResult:
    params = instances.puzzle_params(config.params.get('a', instances.PUZZLE_A))
    F_family, G_family = instances.correlation_puzzle_families(params.a)
    suite = intro_example_suite(params)
    result = DemoResult('correlation-puzzle')
    result.expect('quadrant dependence rises', suite.pqd.holds, True)
    result.expect('CAD fails', suite.cad.holds, False)
    result.expect('contour-CAD fails', suite.ccad.holds, False)
    if suite.cad.violation is not None:
        result.expect(
            'CAD fails at signal',
            F_family.space.labels[suite.cad.violation.s],
            '1/2',
        )
    package = witness_from_verdict(COMMON, F_family, G_family)
    transcript = verify_package(package, F_family, G_family) if package is not None else None
    result.expect('common-value witness re-verifies', bool(transcript), True)
    result.report = {
        'suite' : suite.to_dict(),
        'witness' : None if package is None else package.to_dict(),
        'verification' : None if transcript is None else transcript.to_dict(),
    }
    return result

def contour_shift(config : RunConfig)->DemoResult:
    alpha = to_rational(config.params.get('alpha', instances.CONTOUR_SHIFT_ALPHA))
    F, G = instances.contour_shift_pair(alpha)
    result = DemoResult('contour-shift')
    verdicts = {'cad' : check_cad(F, G), 'ccad' : check_ccad(F, G), 'icad' : check_icad(F, G)}
    result.expect('contour-CAD holds', verdicts['ccad'].holds, True)
    result.expect('interval-CAD agrees', verdicts['icad'].holds, verdicts['ccad'].holds)
    result.expect('CAD fails', verdicts['cad'].holds, False)
    violation = verdicts['cad'].violation
    if violation is not None:
        result.expect(
            'CAD violation',
            (violation.VARIANT, violation.indices(F.space)),
            ('Point', {'s' : '2', 's_prime' : '3'}),
        )
    result.report = {name : verdict.to_dict() for name, verdict in verdicts.items()}
    result.table = verdicts_frame(verdicts)
    return result

def _expected_run_at(a, alpha_star, alpha_star_star, good_run, bad_run)->Optional[str]:
    if a <= alpha_star:
        return format_rational(bad_run)
    if a <= alpha_star_star:
        return format_rational(good_run)
    return None

def bankrun(config : RunConfig)->DemoResult:
    epsilon = to_rational(config.params.get('epsilon', instances.PUZZLE_EPSILON))
    p = to_rational(config.params.get('p', instances.PUZZLE_P))
    sweep = bank_run_sweep(epsilon, p, config.points, APPENDIX)
    alpha_star, alpha_star_star = bank_run_thresholds(epsilon, p)
    result = DemoResult('bankrun')
    result.expect(
        'sign changes of the incentives at 1/2 equal the thresholds',
        bank_run_crossings(epsilon, p),
        (alpha_star, alpha_star_star),
    )
    a_values = [to_rational(a) for a in sweep['a']]
    result.expect(
        'e_B exists exactly below α*',
        list(sweep['eB']),
        [a <= alpha_star for a in a_values],
    )
    result.expect(
        'e_G exists exactly below α**',
        list(sweep['eG']),
        [a <= alpha_star_star for a in a_values],
    )
    base = BankRunParams.appendix(epsilon, p)
    good_run, bad_run = equilibrium_runs(base)
    result.expect(
        'maximal expected run drops by 2·P(s = 1/2) at α*',
        bad_run - good_run,
        2 * bank_run_family(base).mixture_marginal[MID],
    )
    result.expect(
        'maximal expected run is R(e_B) up to α*, then R(e_G) up to α**',
        list(sweep['maximal_expected_run']),
        [_expected_run_at(a, alpha_star, alpha_star_star, good_run, bad_run) for a in a_values],
    )
    result.report = {key : value for key, value in sweep.attrs.items()}
    result.report['runs'] = {'e_G' : format_rational(good_run), 'e_B' : format_rational(bad_run)}
    result.table = sweep
    return result

def auction(config : RunConfig)->DemoResult:
    F, G = instances.auction_pair()
    result = DemoResult('auction')
    decomposition = eti_decompose(F, G)
    table = revenue_table(G, decomposition.steps)
    result.expect('F is CAD-higher than G', check_cad(F, G).holds, True)
    result.expect('F decomposes into ETIs from G', bool(decomposition), True)
    result.expect('recovered steps', tuple(decomposition.steps), instances.AUCTION_STEPS)
    result.expect('increments are a·(s′ − s)', list(table['increment']), list(table['predicted']))
    result.expect(
        'revenue gain',
        auction_revenue(F) - auction_revenue(G),
        sum((step.revenue_increment(G.space) for step in decomposition.steps), Fraction(0)),
    )
    result.report = {
        'revenue' : {'F' : format_rational(auction_revenue(F)), 'G' : format_rational(auction_revenue(G))},
        'decomposition' : decomposition.to_dict(),
    }
    result.table = table
    return result

def rationalize(config : RunConfig)->DemoResult:
    F, G = instances.rationalize_pair()
    x = instances.RATIONALIZE_X.__getitem__
    f_sets, g_sets = rationalizable_sets(F, x), rationalizable_sets(G, x)
    result = DemoResult('rationalize')

    def labels(E):
        return F.space.labels_of(sorted(E))

    result.expect('invest under G', labels(g_sets.invest[0]), ['3', '4'])
    result.expect('invest under F', labels(f_sets.invest[0]), ['2', '3', '4'])
    result.expect('not invest under F and G', (labels(f_sets.not_invest[0]), labels(g_sets.not_invest[0])), (['1', '2', '3'], ['1', '2', '3']))
    result.expect(
        'invest sets grow',
        all(g <= f for g, f in zip(g_sets.invest, f_sets.invest)),
        True,
    )
    result.expect(
        'fixpoints within n steps',
        all(k <= F.n for k in f_sets.iterations + g_sets.iterations),
        True,
    )
    result.report = {'x' : _show(list(instances.RATIONALIZE_X)), 'F' : f_sets.to_dict(), 'G' : g_sets.to_dict()}
    return result

DEMOS : Dict[str, Callable[[RunConfig], DemoResult]] = {
    'supermodular-gap' : supermodular_gap,
    'correlation-puzzle' : correlation_puzzle,
    'contour-shift' : contour_shift,
    'bankrun' : bankrun,
    'auction' : auction,
    'rationalize' : rationalize,
}
