"""
Format names and versions carried in every file header, and the
shared YAML loader. JSON files parse through the same loader.
"""
from pathlib import Path
from typing import TYPE_CHECKING

from ruamel.yaml import YAML

from ..errors import FileFormatError

if TYPE_CHECKING:
    from ..utils.types import PathLike

DISTRIBUTION_FORMAT = 'simil-distribution'
GAME_FORMAT = 'simil-game'
WITNESS_FORMAT = 'simil-witness'
FORMATS = (DISTRIBUTION_FORMAT, GAME_FORMAT, WITNESS_FORMAT)

FORMAT_VERSION = 1

FILE_TAGS = ('.yaml', '.yml', '.json')

def load_yaml(path : 'PathLike')->dict:
    """ Top-level mapping of a YAML or JSON file """
    path = Path(path)
    try:
        data = YAML().load(path)
    except Exception as e:
        raise FileFormatError(f"Could not parse {path}: {e}") from e
    if not isinstance(data, dict):
        raise FileFormatError(f"{path} does not hold a mapping at its top level")
    return data
