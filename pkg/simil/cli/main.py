"""
The `simil` command line.

    simil check ccad F.yaml G.yaml
    simil equilibria game.yaml dist.yaml --cutoffs
    simil witness F.yaml G.yaml --family private-max --bundle out.yaml
    simil verify out.yaml
    simil demo contour-shift --format csv
    simil bankrun-sweep --epsilon 1/20 --p 97/100 --points 20
    simil validate dist.yaml
    simil property orders --seed 7 --count 500

Exit codes: 0 when the order holds, the bundle verifies or every
check passes; 1 when an order is violated, no witness exists or a
check fails; 2 on bad input; 3 when a violation exists but its
witness game would divide by zero.
"""
from pathlib import Path
from typing import Optional, Sequence, Tuple
import argparse
import logging
import sys

from .config import RunConfig
from .demos import DEMOS
from .properties import SUITES, run_suite
from ..applications.bankrun import APPENDIX, INTRO, bank_run_sweep
from ..dist.joint import JointDist
from ..dist.family import StateFamily
from ..dist.validation import validate
from ..errors import DegenerateViolationError, FileFormatError, SimilError
from ..games.common import CommonValueGame, enumerate_cutoff_equilibria, enumerate_equilibria_common
from ..games.private import enumerate_equilibria_private
from ..games.relevance import validate_payoff_relevance
from ..games.weighted import enumerate_equilibria_weighted
from ..io.files import distribution_from_dict, family_from_dict, game_from_dict
from ..io.fixtures import open_file
from ..io.formats import DISTRIBUTION_FORMAT, GAME_FORMAT, WITNESS_FORMAT, load_yaml
from ..io.writers import REPORT_FORMATS, bundle_to_dict, render_report, write_bundle, write_report
from ..orders import CHECKS, check, check_cad_statewise
from ..orders.verdict import Order
from ..witnesses.package import FAMILIES, verify_package
from ..witnesses.routing import witness_from_verdict

OK = 0
FAILED = 1
INPUT_ERROR = 2
DEGENERATE = 3

ORDER_NAMES = [order.value for order in Order]

class Outcome():
    """ A report and the exit code it implies """

    def __init__(self, report, code : int):
        self.report = report
        self.code = code

def _information(path : str):
    reader = open_file(path)
    information = getattr(reader, 'information', None)
    if information is None:
        raise FileFormatError(f"{path} holds neither a distribution nor a state family")
    return information

def _pair(config : RunConfig)->Tuple[object, object]:
    if len(config.inputs) != 2:
        raise FileFormatError(f"Expected two input files, got {len(config.inputs)}")
    return _information(config.inputs[0]), _information(config.inputs[1])

def cmd_check(config : RunConfig)->Outcome:
    F, G = _pair(config)
    order = Order(config.params['order'])
    statewise = config.params.get('statewise', False) or order is Order.CAD_STATEWISE
    if statewise:
        if not isinstance(F, StateFamily) or not isinstance(G, StateFamily):
            raise FileFormatError("Statewise checks need two state-family files")
        inner = Order.CCAD if order is Order.CAD_STATEWISE else order
        verdict = check_cad_statewise(F, G, inner)
        return Outcome(verdict.to_dict(), OK if verdict.holds else FAILED)
    if isinstance(F, StateFamily) or isinstance(G, StateFamily):
        raise FileFormatError(f"{order.value} compares joint distributions; use --statewise for state families")
    if order not in CHECKS:
        raise FileFormatError(f"Order {order.value} has no pairwise checker")
    verdict = check(order, F, G)
    report = verdict.to_dict()
    report['reverified'] = verdict.reverify(F, G)
    if not verdict.holds:
        logging.info(f"F is not {order.value}-higher than G: {verdict.violation.describe(verdict.space)}")
    return Outcome(report, OK if verdict.holds else FAILED)

def cmd_equilibria(config : RunConfig)->Outcome:
    if len(config.inputs) != 2:
        raise FileFormatError("Expected a game file and a distribution file")
    game_reader = open_file(config.inputs[0])
    if not hasattr(game_reader, 'game'):
        raise FileFormatError(f"{config.inputs[0]} is not a game file")
    game, weights = game_reader.game, game_reader.weights
    information = _information(config.inputs[1])
    if isinstance(game, CommonValueGame):
        if not isinstance(information, StateFamily):
            raise FileFormatError("A common-value game is played on a state family")
        if config.params.get('cutoffs', False):
            equilibria = enumerate_cutoff_equilibria(game, information)
        else:
            equilibria = enumerate_equilibria_common(game, information)
    elif weights is not None or not isinstance(information, JointDist):
        if not hasattr(information, 'players'):
            raise FileFormatError("A private-value game is played on a joint distribution")
        weights = weights if weights is not None else (1,) * information.players
        equilibria = enumerate_equilibria_weighted(game, weights, information)
    else:
        equilibria = enumerate_equilibria_private(game, information)
    report = equilibria.to_dict()
    report['game'] = game.to_dict()
    report['table'] = equilibria.df
    return Outcome(report, OK)

def cmd_witness(config : RunConfig)->Outcome:
    F, G = _pair(config)
    family = config.params['family']
    package = witness_from_verdict(family, F, G)
    if package is None:
        logging.error("Orders comparable: no witness exists")
        return Outcome({'family' : family, 'witness' : None, 'reason' : 'orders comparable, no witness exists'}, FAILED)
    transcript = verify_package(package, F, G)
    report = {'witness' : package.to_dict(), 'verification' : transcript.to_dict()}
    bundle_path = config.params.get('bundle')
    if bundle_path is not None:
        write_bundle(package, bundle_path, F, G)
        report['bundle'] = str(bundle_path)
    else:
        report['bundle'] = bundle_to_dict(package, F, G)
    return Outcome(report, OK if transcript else FAILED)

def cmd_verify(config : RunConfig)->Outcome:
    if len(config.inputs) != 1:
        raise FileFormatError("Expected one witness bundle")
    reader = open_file(config.inputs[0])
    if not hasattr(reader, 'bundle'):
        raise FileFormatError(f"{config.inputs[0]} is not a witness bundle")
    bundle = reader.bundle
    transcript = verify_package(bundle.package, bundle.F, bundle.G)
    report = transcript.to_dict()
    report['table'] = transcript.df
    return Outcome(report, OK if transcript else FAILED)

def cmd_demo(config : RunConfig)->Outcome:
    result = DEMOS[config.params['name']](config)
    return Outcome(result.to_dict(), OK if result.passed else FAILED)

def cmd_bankrun_sweep(config : RunConfig)->Outcome:
    sweep = bank_run_sweep(
        config.params.get('epsilon', '1/20'),
        config.params.get('p', '97/100'),
        config.points,
        config.params.get('preset', APPENDIX),
    )
    return Outcome({**sweep.attrs, 'table' : sweep}, OK)

def _validate_data(data : dict, players : Optional[int])->Outcome:
    kind = data.get('format')
    if kind == GAME_FORMAT:
        game, _ = game_from_dict(data)
        if isinstance(game, CommonValueGame) and players is None:
            raise FileFormatError("Payoff relevance of a common-value game needs --players")
        relevance = validate_payoff_relevance(game, players)
        report = {'format' : kind, 'payoff_relevance' : relevance.to_dict()}
        return Outcome(report, OK if relevance else FAILED)
    if kind == DISTRIBUTION_FORMAT and 'stateFamily' in data:
        family = family_from_dict(data)
        reports = {
            theta : validate(joint).to_dict()
            for theta, joint in zip(family.states.labels, family.per_state)
        }
        passed = all(r['passed'] for r in reports.values())
        return Outcome({'format' : kind, 'per_state' : reports}, OK if passed else FAILED)
    if kind == DISTRIBUTION_FORMAT:
        validation = validate(distribution_from_dict(data, strict = False))
        return Outcome({'format' : kind, **validation.to_dict()}, OK if validation else FAILED)
    if kind == WITNESS_FORMAT:
        return Outcome({'format' : kind, 'parsed' : True}, OK)
    raise FileFormatError(f"Unknown format {kind!r}")

def cmd_validate(config : RunConfig)->Outcome:
    reports, code = {}, OK
    for path in config.inputs:
        outcome = _validate_data(load_yaml(path), config.params.get('players'))
        reports[str(path)] = outcome.report
        code = max(code, outcome.code)
    return Outcome({'files' : reports}, code)

def cmd_property(config : RunConfig)->Outcome:
    name = config.params['suite']
    names = list(SUITES) if name == 'all' else [name]
    results = [run_suite(suite, config.seed, config.count) for suite in names]
    passed = all(r.passed for r in results)
    report = {'seed' : config.seed, 'count' : config.count, 'passed' : passed,
        'suites' : [r.to_dict() for r in results]}
    return Outcome(report, OK if passed else FAILED)

COMMANDS = {
    'check' : cmd_check,
    'equilibria' : cmd_equilibria,
    'witness' : cmd_witness,
    'verify' : cmd_verify,
    'demo' : cmd_demo,
    'bankrun-sweep' : cmd_bankrun_sweep,
    'validate' : cmd_validate,
    'property' : cmd_property,
}

def _key_value(text : str)->Tuple[str, str]:
    key, sep, value = text.partition('=')
    if not sep:
        raise argparse.ArgumentTypeError(f"Expected KEY=VALUE, got {text!r}")
    return key.strip(), value.strip()

def build_parser()->argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help = False)
    common.add_argument('--out', help = 'write the report here instead of stdout')
    common.add_argument('--format', choices = REPORT_FORMATS, help = 'report format (default json)')
    common.add_argument('--seed', type = int, help = 'seed of randomized commands')
    common.add_argument('--config', help = 'YAML run configuration supplying defaults')
    common.add_argument('--param', type = _key_value, action = 'append', default = [],
        metavar = 'KEY=VALUE', help = 'command parameter, e.g. a=1/5000')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action = 'store_true')
    verbosity.add_argument('-q', '--quiet', action = 'store_true')

    parser = argparse.ArgumentParser(
        prog = 'simil',
        description = 'Similarity orders on signal distributions and the equilibria they rank.',
    )
    commands = parser.add_subparsers(dest = 'command', required = True)

    p = commands.add_parser('check', parents = [common], help = 'is F higher than G in an order')
    p.add_argument('order', choices = ORDER_NAMES)
    p.add_argument('inputs', nargs = 2, metavar = 'FILE')
    p.add_argument('--statewise', action = 'store_true', help = 'compare state families state by state')

    p = commands.add_parser('equilibria', parents = [common], help = 'enumerate symmetric equilibria')
    p.add_argument('inputs', nargs = 2, metavar = 'FILE', help = 'game file, then distribution or family')
    p.add_argument('--cutoffs', action = 'store_true', help = 'cutoff equilibria of a common-value game')

    p = commands.add_parser('witness', parents = [common], help = 'build and replay a witness game')
    p.add_argument('inputs', nargs = 2, metavar = 'FILE')
    p.add_argument('--family', choices = FAMILIES, required = True)
    p.add_argument('--bundle', help = 'write the witness bundle here')

    p = commands.add_parser('verify', parents = [common], help = 'replay a witness bundle')
    p.add_argument('inputs', nargs = 1, metavar = 'BUNDLE')

    p = commands.add_parser('demo', parents = [common], help = 'reproduce a worked example')
    p.add_argument('name', choices = list(DEMOS))

    p = commands.add_parser('bankrun-sweep', parents = [common], help = 'equilibrium regions over a grid of a′')
    p.add_argument('--epsilon')
    p.add_argument('--p')
    p.add_argument('--points', type = int)
    p.add_argument('--preset', choices = [APPENDIX, INTRO])

    p = commands.add_parser('validate', parents = [common], help = 'check input files')
    p.add_argument('inputs', nargs = '+', metavar = 'FILE')
    p.add_argument('--players', type = int, help = 'player count for common-value games')

    p = commands.add_parser('property', parents = [common], help = 'run seeded property suites')
    p.add_argument('suite', choices = list(SUITES) + ['all'])
    p.add_argument('--count', type = int)
    return parser

def make_config(args : argparse.Namespace)->RunConfig:
    config = RunConfig.from_yaml(args.config) if args.config else RunConfig()
    params = dict(config.params)
    for key in ('order', 'statewise', 'cutoffs', 'family', 'bundle', 'name',
            'epsilon', 'p', 'preset', 'players', 'suite'):
        value = getattr(args, key, None)
        if value is not None and value is not False:
            params[key] = value
    params.update(dict(args.param))
    return config.updated(
        command = args.command,
        inputs = getattr(args, 'inputs', None),
        out = args.out,
        format = args.format,
        seed = args.seed,
        points = getattr(args, 'points', None),
        count = getattr(args, 'count', None),
        params = params,
    )

def _configure_logging(args : argparse.Namespace):
    level = logging.WARNING
    if args.verbose:
        level = logging.INFO
    elif args.quiet:
        level = logging.ERROR
    logging.basicConfig(level = level, format = '%(levelname)s: %(message)s')
    logging.getLogger().setLevel(level)

def emit(outcome : Outcome, config : RunConfig):
    if config.out is not None:
        write_report(outcome.report, Path(config.out), config.format)
    else:
        sys.stdout.write(render_report(outcome.report, config.format))
        sys.stdout.write('\n')

def main(argv : Optional[Sequence[str]] = None)->int:
    args = build_parser().parse_args(argv)
    _configure_logging(args)
    try:
        config = make_config(args)
        outcome = COMMANDS[config.command](config)
        emit(outcome, config)
    except DegenerateViolationError as e:
        logging.error(f"Violation found, but its witness is degenerate: {e}")
        return DEGENERATE
    except (SimilError, KeyError, ValueError, OSError) as e:
        logging.error(f"simil {args.command}: {e}")
        return INPUT_ERROR
    return outcome.code

