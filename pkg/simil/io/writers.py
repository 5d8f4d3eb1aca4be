"""
Writers for the formats in `simil.io.files`, plus report output.

Files are written to a temporary sibling and moved into place, so a
reader never sees half a file. Output is deterministic: the same
objects always give the same bytes.
"""
from pathlib import Path
from typing import Optional, Sequence, TYPE_CHECKING, Union
import io
import json
import os
import tempfile

import pandas as pd
from ruamel.yaml import YAML

from .files import Game, Information, WitnessBundle
from .formats import DISTRIBUTION_FORMAT, GAME_FORMAT, WITNESS_FORMAT, FORMAT_VERSION
from ..dist.family import StateFamily
from ..dist.joint import JointDistBase, NonExchJointDist
from ..errors import FileFormatError
from ..utils.rationals import format_rational
from ..witnesses.package import WitnessPackage

if TYPE_CHECKING:
    from ..utils.types import PathLike, RationalLike

REPORT_FORMATS = ('json', 'csv', 'yaml')

def _header(name : str)->dict:
    return {'format' : name, 'version' : FORMAT_VERSION}

def _mass_list(dist : JointDistBase)->list:
    return [
        {'profile' : list(dist.labels_of(profile)), 'p' : format_rational(p)}
        for profile, p in dist.stored_items()
    ]

def distribution_to_dict(dist : JointDistBase, header : bool = True)->dict:
    data = _header(DISTRIBUTION_FORMAT) if header else {}
    data['signals'] = dist.space.to_dict()
    data['players'] = dist.players
    if isinstance(dist, NonExchJointDist):
        data['exchangeable'] = False
    data['mass'] = _mass_list(dist)
    return data

def family_to_dict(family : StateFamily, header : bool = True)->dict:
    data = _header(DISTRIBUTION_FORMAT) if header else {}
    data['signals'] = family.space.to_dict()
    data['players'] = family.players
    data['stateFamily'] = {
        'states' : family.states.to_dict(),
        'prior' : [format_rational(p) for p in family.prior],
        'perState' : [
            {'state' : label, 'mass' : _mass_list(joint)}
            for label, joint in zip(family.states.labels, family.per_state)
        ],
    }
    return data

def information_to_dict(information : Information, header : bool = True)->dict:
    if isinstance(information, StateFamily):
        return family_to_dict(information, header)
    return distribution_to_dict(information, header)

def game_to_dict(
        game : Game,
        weights : Optional[Sequence['RationalLike']] = None,
        header : bool = True,
    )->dict:
    data = _header(GAME_FORMAT) if header else {}
    data.update(game.to_dict())
    if weights is not None:
        data['weights'] = [format_rational(w) for w in weights]
    return data

def bundle_to_dict(package : WitnessPackage, F : Information, G : Information)->dict:
    """ The package's own report, with the game and both sides inline """
    data = _header(WITNESS_FORMAT)
    data.update(package.to_dict())
    data['game'] = game_to_dict(package.game, header = False)
    data['F'] = information_to_dict(F, header = False)
    data['G'] = information_to_dict(G, header = False)
    return data

def _yaml()->YAML:
    yaml = YAML()
    yaml.default_flow_style = False
    return yaml

def dump_yaml(data : dict)->str:
    stream = io.StringIO()
    _yaml().dump(data, stream)
    return stream.getvalue()

def dump_json(data : dict)->str:
    return json.dumps(data, indent = 2, ensure_ascii = False, default = str) + "\n"

def write_text(text : str, path : 'PathLike'):
    """ Writes through a temporary file in the same directory """
    path = Path(path)
    path.parent.mkdir(parents = True, exist_ok = True)
    with tempfile.NamedTemporaryFile(
        'w', dir = path.parent, prefix = f".{path.name}.", suffix = '.tmp',
        delete = False, encoding = 'utf-8',
    ) as handle:
        handle.write(text)
        temp_name = handle.name
    os.replace(temp_name, path)

def write_yaml(data : dict, path : 'PathLike'):
    write_text(dump_yaml(data), path)

def write_distribution(information : Information, path : 'PathLike'):
    write_yaml(information_to_dict(information), path)

def write_game(game : Game, path : 'PathLike', weights : Optional[Sequence['RationalLike']] = None):
    write_yaml(game_to_dict(game, weights), path)

def write_bundle(bundle : Union[WitnessBundle, WitnessPackage], path : 'PathLike', F = None, G = None):
    """ Accepts a `WitnessBundle`, or a package with its F and G """
    if isinstance(bundle, WitnessBundle):
        package, F, G = bundle.package, bundle.F, bundle.G
    else:
        package = bundle
    if F is None or G is None:
        raise FileFormatError("A witness bundle needs both F and G")
    write_yaml(bundle_to_dict(package, F, G), path)

def render_report(report : Union[dict, pd.DataFrame], fmt : str = 'json')->str:
    """
    A report as text. Tables go to CSV directly; mappings with a
    `table` entry write that table when CSV is asked for.
    """
    if fmt not in REPORT_FORMATS:
        raise FileFormatError(f"Unknown report format {fmt!r}, expected one of {list(REPORT_FORMATS)}")
    if fmt == 'csv':
        table = report if isinstance(report, pd.DataFrame) else report.get('table')
        if not isinstance(table, pd.DataFrame):
            table = pd.json_normalize(_plain(report))
        return table.to_csv(index = False)
    data = _plain(report)
    if fmt == 'yaml':
        return dump_yaml(data)
    return dump_json(data)

def _plain(report):
    """ Tables become lists of records so they serialize anywhere """
    if isinstance(report, pd.DataFrame):
        return report.to_dict(orient = 'records')
    if isinstance(report, dict):
        return {key : _plain(value) for key, value in report.items()}
    if isinstance(report, (list, tuple)):
        return [_plain(value) for value in report]
    return report

def write_report(report : Union[dict, pd.DataFrame], path : 'PathLike', fmt : str = 'json'):
    write_text(render_report(report, fmt), path)
