"""
Run configuration for the `simil` command line. Defaults can come
from a YAML file (`--config run.yaml`); flags given on the command
line override it.
"""
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, TYPE_CHECKING
import logging

from ruamel.yaml import YAML

from ..errors import FileFormatError
from ..io.writers import REPORT_FORMATS

if TYPE_CHECKING:
    from ..utils.types import PathLike

DEFAULT_SEED = 20240917
DEFAULT_POINTS = 20

@dataclass
class RunConfig():
    """
    A class for storing the parameters of one invocation.
    """
    command : Optional[str] = None
    inputs : List[str] = field(default_factory=list)
    out : Optional[str] = None
    format : str = 'json'
    seed : int = DEFAULT_SEED # randomized commands always run from a seed
    points : int = DEFAULT_POINTS # grid size of sweeps
    count : Optional[int] = None # instances per property suite; None uses each suite's own default
    params : Dict[str, Any] = field(default_factory=dict) # command-specific, e.g. epsilon and p

    def __post_init__(self):
        if self.format not in REPORT_FORMATS:
            raise FileFormatError(
                f"Unknown output format {self.format!r}, expected one of {list(REPORT_FORMATS)}"
            )
        if self.points < 2:
            raise FileFormatError(f"Grid size must be at least 2, got {self.points}")
        if self.count is not None and self.count < 1:
            raise FileFormatError(f"Instance count must be positive, got {self.count}")

    @classmethod
    def from_yaml(cls, path : 'PathLike')->'RunConfig':
        """
        Reads the keys of `RunConfig` from a YAML mapping; unknown
        keys are logged and ignored.
        """
        path = Path(path)
        try:
            data = YAML().load(path) or {}
        except Exception as e:
            raise FileFormatError(f"Could not read run configuration {path}: {e}") from e
        if not isinstance(data, dict):
            raise FileFormatError(f"Run configuration {path} must be a mapping")
        known = {f.name for f in fields(cls)}
        unknown = [key for key in data if key not in known]
        if unknown:
            logging.warning(
                f"""Ignoring unknown keys {unknown} in run configuration {path}.
                Known keys are {sorted(known)}.
                """
            )
        values = {key : data[key] for key in data if key in known}
        if 'inputs' in values:
            values['inputs'] = [str(p) for p in values['inputs']]
        if 'params' in values:
            values['params'] = dict(values['params'])
        return cls(**values)

    def updated(self, **overrides)->'RunConfig':
        """ Copy with every override that is not None applied """
        return replace(self, **{key : value for key, value in overrides.items() if value is not None})

    def to_dict(self)->dict:
        return {f.name : getattr(self, f.name) for f in fields(self)}
