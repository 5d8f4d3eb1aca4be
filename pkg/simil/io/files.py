"""
Readers for simil's input files. The idea is:

Every file type (distribution, state family, game, witness bundle)
is a YAML (or JSON) mapping with a `format` / `version` header. A
`SimilFile` knows how to tell quickly whether a path holds its type
and how to parse it; a `SimilReader` wraps one, checks the suffix,
and runs whatever mixins (provenance notes, header validation) the
file type uses.

Every rational is written "num/den". Exchangeable distributions
list each multiset once, as a sorted profile, with the TOTAL mass
of the multiset.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, TYPE_CHECKING, Type, Union
import logging

from .formats import (
    DISTRIBUTION_FORMAT, GAME_FORMAT, WITNESS_FORMAT, FORMAT_VERSION, FILE_TAGS, load_yaml,
)
from .mixins import FormatConfig, FormatValidatedMixin, ProvenanceMixin
from ..dist.family import StateFamily
from ..dist.joint import JointDist, JointDistBase, NonExchJointDist
from ..dist.space import SignalSpace
from ..errors import FileFormatError, SimilError
from ..games.aggregator import aggregator_from_dict
from ..games.common import CommonValueGame
from ..games.private import PrivateValueGame
from ..games.strategy import CutoffStrategy, Strategy
from ..utils.rationals import to_rational
from ..witnesses.package import FAMILIES, WitnessDirection, WitnessPackage

if TYPE_CHECKING:
    from ..utils.types import PathLike

Game = Union[PrivateValueGame, CommonValueGame]
Information = Union[JointDistBase, StateFamily]

def _require(data : dict, key : str, where : str):
    if key not in data:
        raise FileFormatError(f"{where} has no {key!r} field")
    return data[key]

def _rationals(entries, where : str)->Tuple[Fraction, ...]:
    if not isinstance(entries, (list, tuple)):
        raise FileFormatError(f"{where} must be a list of rationals, got {entries!r}")
    try:
        return tuple(to_rational(v) for v in entries)
    except (TypeError, ValueError) as e:
        raise FileFormatError(f"{where}: {e}") from e

def space_from_list(entries, where : str = 'signals')->SignalSpace:
    """
    [{label, value}, ...] in increasing order. A missing value
    defaults to the entry's position.
    """
    if not isinstance(entries, (list, tuple)) or len(entries) == 0:
        raise FileFormatError(f"{where} must be a nonempty list, got {entries!r}")
    labels, values = [], []
    for position, entry in enumerate(entries):
        if isinstance(entry, dict):
            labels.append(str(_require(entry, 'label', where)))
            values.append(entry.get('value', position))
        else:
            labels.append(str(entry))
            values.append(position)
    return SignalSpace(tuple(labels), _rationals(values, f"{where} values"))

def _masses(entries, where : str)->Dict[Tuple[str, ...], Fraction]:
    if not isinstance(entries, (list, tuple)):
        raise FileFormatError(f"{where} must be a list of {{profile, p}} entries")
    masses : Dict[Tuple[str, ...], Fraction] = {}
    for entry in entries:
        if not isinstance(entry, dict):
            raise FileFormatError(f"{where}: expected a {{profile, p}} mapping, got {entry!r}")
        # labels are always strings, even when YAML reads them as numbers
        profile = tuple(str(s) for s in _require(entry, 'profile', where))
        if profile in masses:
            raise FileFormatError(f"{where}: profile {list(profile)} listed twice")
        masses[profile] = _rationals([_require(entry, 'p', where)], where)[0]
    return masses

def _joint(
        space : SignalSpace,
        players : int,
        entries,
        exchangeable : bool,
        where : str,
        strict : bool = True,
    )->JointDistBase:
    masses = _masses(entries, where)
    try:
        if exchangeable:
            return JointDist(space, players, masses, strict = strict)
        return NonExchJointDist(space, players, masses, strict = strict)
    except KeyError as e:
        raise FileFormatError(f"{where}: unknown signal {e}") from e

def distribution_from_dict(data : dict, strict : bool = True)->JointDistBase:
    """
    `signals`, `players`, `mass`, optionally `exchangeable: false`.
    With `strict = False` invalid masses are kept for `validate`.
    """
    space = space_from_list(_require(data, 'signals', 'Distribution'))
    players = int(_require(data, 'players', 'Distribution'))
    return _joint(
        space,
        players,
        _require(data, 'mass', 'Distribution'),
        bool(data.get('exchangeable', True)),
        'mass',
        strict,
    )

def family_from_dict(data : dict)->StateFamily:
    """
    `signals`, `players`, and a `stateFamily` with `states`,
    `prior` and `perState`: one {state, mass} entry per state.
    """
    space = space_from_list(_require(data, 'signals', 'Family'))
    players = int(_require(data, 'players', 'Family'))
    family = _require(data, 'stateFamily', 'Family')
    states = space_from_list(_require(family, 'states', 'stateFamily'), 'states')
    prior = _rationals(_require(family, 'prior', 'stateFamily'), 'prior')
    joints : List[Optional[JointDist]] = [None] * states.n
    for entry in _require(family, 'perState', 'stateFamily'):
        label = str(_require(entry, 'state', 'perState'))
        try:
            theta = states.index(label)
        except KeyError as e:
            raise FileFormatError(f"perState: unknown state {label!r}") from e
        if joints[theta] is not None:
            raise FileFormatError(f"perState: state {label!r} listed twice")
        joints[theta] = _joint(space, players, _require(entry, 'mass', 'perState'), True, f"perState {label}")
    missing = [states.labels[i] for i, joint in enumerate(joints) if joint is None]
    if missing:
        raise FileFormatError(f"perState has no joint for states {missing}")
    return StateFamily(states, prior, joints)

def information_from_dict(data : dict)->Information:
    """ A family when the mapping has a `stateFamily`, else a distribution """
    if 'stateFamily' in data:
        return family_from_dict(data)
    return distribution_from_dict(data)

def game_from_dict(data : dict)->Tuple[Game, Optional[Tuple[Fraction, ...]]]:
    """
    The game and its player weights, if any. `kind` is `private`
    (with `signals` and `players`) or `common` (with `states`);
    without it, a `states` field means a common-value game.
    """
    kind = data.get('kind', 'common' if 'states' in data else 'private')
    h = aggregator_from_dict(data.get('h', {'affine' : {}}))
    alpha = _rationals(_require(data, 'alpha', 'Game'), 'alpha')
    beta = _rationals(_require(data, 'beta', 'Game'), 'beta')
    weights = data.get('weights')
    if weights is not None:
        weights = _rationals(weights, 'weights')
    if kind == 'private':
        space = space_from_list(_require(data, 'signals', 'Private-value game'))
        players = int(_require(data, 'players', 'Private-value game'))
        return PrivateValueGame(space, players, alpha, beta, h), weights
    if kind == 'common':
        states = space_from_list(_require(data, 'states', 'Common-value game'), 'states')
        if weights is not None:
            raise FileFormatError("Player weights apply to private-value games only")
        return CommonValueGame(states, alpha, beta, h), None
    raise FileFormatError(f"Unknown game kind {kind!r}, expected 'private' or 'common'")

@dataclass(frozen=True)
class WitnessBundle():
    """ A witness package with the two information structures it separates """
    package : WitnessPackage
    F : Information
    G : Information

def bundle_from_dict(data : dict)->WitnessBundle:
    family = _require(data, 'family', 'Witness bundle')
    if family not in FAMILIES:
        raise FileFormatError(f"Unknown witness family {family!r}, expected one of {list(FAMILIES)}")
    F = information_from_dict(_require(data, 'F', 'Witness bundle'))
    G = information_from_dict(_require(data, 'G', 'Witness bundle'))
    game, _ = game_from_dict(_require(data, 'game', 'Witness bundle'))
    space = F.space
    cutoff = data.get('cutoff')
    try:
        if cutoff is not None:
            strategy = CutoffStrategy.at(space, int(cutoff))
        else:
            strategy = Strategy.from_signals(space, [str(s) for s in _require(data, 'strategy', 'Witness bundle')])
    except KeyError as e:
        raise FileFormatError(f"strategy: unknown signal {e}") from e
    certification = _require(data, 'certification', 'Witness bundle')
    direction = data.get('direction')
    try:
        package = WitnessPackage(
            family = family,
            game = game,
            strategy = strategy,
            pivot = space.index(str(_require(certification, 'pivot', 'certification'))),
            holding_net_payoff = to_rational(_require(certification, 'holding_net_payoff', 'certification')),
            failing_net_payoff = to_rational(_require(certification, 'failing_net_payoff', 'certification')),
            direction = None if direction is None else WitnessDirection(direction),
            equilibrium_under = str(data.get('equilibrium_under', 'G')),
        )
    except KeyError as e:
        raise FileFormatError(f"certification: unknown pivot signal {e}") from e
    return WitnessBundle(package, F, G)

class SimilFile(ABC):
    """
    Parsed contents of one file. `isvalid` reads only the header
    and the top-level keys.
    """

    FORMAT : str

    def __init__(self, path : 'PathLike'):
        path = Path(path)
        self.path : Path = path
        self.open(path)

    @classmethod
    def isvalid(cls, path : 'PathLike')->bool:
        """ Returns whether a path points to a file of this type """
        path = Path(path)
        if path.suffix not in FILE_TAGS:
            return False
        data = load_yaml(path)
        return data.get('format') == cls.FORMAT and cls.matches(data)

    @classmethod
    def matches(cls, data : dict)->bool:
        """ Checks the top-level keys, ideally do more """
        return True

    @abstractmethod
    def open(self, path : 'PathLike'):
        pass

    def _parse(self, path : Path, parser):
        data = load_yaml(path)
        try:
            return parser(data)
        except SimilError:
            raise
        except (KeyError, TypeError, ValueError) as e:
            raise FileFormatError(f"Could not read {path}: {e}") from e

class DistributionFile(SimilFile):
    FORMAT = DISTRIBUTION_FORMAT

    @classmethod
    def matches(cls, data : dict)->bool:
        return 'mass' in data and 'stateFamily' not in data

    def open(self, path : 'PathLike'):
        self.dist : JointDistBase = self._parse(Path(path), distribution_from_dict)

class FamilyFile(SimilFile):
    FORMAT = DISTRIBUTION_FORMAT

    @classmethod
    def matches(cls, data : dict)->bool:
        return 'stateFamily' in data

    def open(self, path : 'PathLike'):
        self.family : StateFamily = self._parse(Path(path), family_from_dict)

class GameFile(SimilFile):
    FORMAT = GAME_FORMAT

    def open(self, path : 'PathLike'):
        self.game, self.weights = self._parse(Path(path), game_from_dict)

class WitnessBundleFile(SimilFile):
    FORMAT = WITNESS_FORMAT

    def open(self, path : 'PathLike'):
        self.bundle : WitnessBundle = self._parse(Path(path), bundle_from_dict)

class SimilReader(ABC):
    """
    Reads one file of its `FILE_TYPE`. Subclasses name the file
    type and mix in whatever validation their files carry.
    """
    FILE_TYPE : Type[SimilFile]
    FILE_TAGS : Sequence[str] = FILE_TAGS

    def __init__(self, file_path : 'PathLike'):
        file_path = Path(file_path)
        if file_path.suffix not in self.__class__.FILE_TAGS:
            raise FileFormatError(f"""
                File {file_path} does not have the correct extension
                for {self.__class__.__name__} files.
            """)
        if not (file_path.exists()):
            raise FileFormatError(
                f"""File {file_path} does not exist."""
            )

        self.file_path : Path = file_path
        self.file = self.open(self.file_path)

    @classmethod
    def open(cls, file_path : 'PathLike')->SimilFile:
        return cls.FILE_TYPE(Path(file_path))

    @classmethod
    def isvalid(cls, file_path : 'PathLike', report_failure : bool = True)->bool:
        """
        Whether a file is of the correct type. Files that fail to
        parse are reported (unless asked not to) and rejected.
        """
        file_path = Path(file_path)
        try:
            return cls.FILE_TYPE.isvalid(file_path)
        except Exception as e:
            if report_failure:
                logging.warning(f"""
                Failed to validate file {file_path} as a {cls.FILE_TYPE.__name__}
                due to error: {e}
                """
                )
            return False

    @property
    def name(self)->str:
        return self.file_path.stem

class DistributionReader(
    FormatValidatedMixin,
    ProvenanceMixin,
    SimilReader
    ):
    """ Joint distribution of the players' signals """

    FILE_TYPE = DistributionFile

    format_config = FormatConfig(
        name = DISTRIBUTION_FORMAT,
        version = FORMAT_VERSION,
        fields = ['signals', 'players', 'mass'],
    )

    @property
    def dist(self)->JointDistBase:
        return self.file.dist

    @property
    def information(self)->JointDistBase:
        return self.dist

class FamilyReader(
    FormatValidatedMixin,
    ProvenanceMixin,
    SimilReader
    ):
    """ State-conditional family of exchangeable joints """

    FILE_TYPE = FamilyFile

    format_config = FormatConfig(
        name = DISTRIBUTION_FORMAT,
        version = FORMAT_VERSION,
        fields = ['signals', 'players', 'stateFamily'],
    )

    @property
    def family(self)->StateFamily:
        return self.file.family

    @property
    def information(self)->StateFamily:
        return self.family

class GameReader(
    FormatValidatedMixin,
    ProvenanceMixin,
    SimilReader
    ):
    """ Private- or common-value binary-action game """

    FILE_TYPE = GameFile

    format_config = FormatConfig(
        name = GAME_FORMAT,
        version = FORMAT_VERSION,
        fields = ['alpha', 'beta'],
    )

    @property
    def game(self)->Game:
        return self.file.game

    @property
    def weights(self)->Optional[Tuple[Fraction, ...]]:
        """ Player weights of the aggregate, `None` for the plain count """
        return self.file.weights

class WitnessBundleReader(
    FormatValidatedMixin,
    SimilReader
    ):
    """ Witness package together with F and G, replayable on its own """

    FILE_TYPE = WitnessBundleFile

    format_config = FormatConfig(
        name = WITNESS_FORMAT,
        version = FORMAT_VERSION,
        fields = ['family', 'game', 'certification', 'F', 'G'],
    )

    @property
    def bundle(self)->WitnessBundle:
        return self.file.bundle
