"""
Contains a mixin for finding the provenance notes that sit next to
an input file and storing what they say about it
"""

from pathlib import Path
from typing import Any, Dict, Optional, TYPE_CHECKING
import logging
from dataclasses import dataclass, field

from ruamel.yaml import YAML

if TYPE_CHECKING:
    from ...utils.types import PathLike

@dataclass
class ProvenanceNotes():
    """
    Where an instance comes from and what it is expected to show.
    """
    source : Optional[str] = None # e.g. the example or construction it reproduces
    derivation : Optional[str] = None # how the masses were obtained
    notes : Optional[str] = None
    expected : Dict[str, Any] = field(default_factory=dict) # key: check name, value: expected outcome

class ProvenanceMixin():
    """
    A mixin for readers that looks for a `*provenance.yaml` file in
    the same directory as the file being read. The notes file maps
    file names to their notes under a top-level `files` key:

    ```yaml
        files:
          puzzle_F.yaml:
            source: correlated bank-run pair
            expected: {cad: violated}
    ```

    Missing notes are a warning, never an error.
    """

    provenance : Optional[ProvenanceNotes]

    def __init__(self, file_path : 'PathLike', *args, **kwargs):
        file_path = Path(file_path)

        search_path = self.to_search_path(file_path)
        try:
            putative_notes = next(
                (
                    path for path in search_path.glob('*provenance.yaml')
                    if not (path.name.startswith('._'))
                ), None
            )
            if putative_notes is None:
                logging.warning(
                    f"""No provenance notes found for {file_path}.
                    Its origin cannot be reported.
                    """
                )
                self.provenance = None
            else:
                self.provenance = self.read_provenance(putative_notes, file_path)
        except Exception as e:
            logging.warning(
                f"""Failed to read provenance notes for {file_path}.
                Exception: \n{e}
                """, exc_info = (not isinstance(e, (FileNotFoundError, KeyError)))
            )
            self.provenance = None
        super().__init__(file_path, *args, **kwargs)

    def to_search_path(self, file_path : 'PathLike')->Path:
        """ Where to search """
        return Path(file_path).parent

    def read_provenance(self, notes_path : 'PathLike', file_path : 'PathLike')->Optional[ProvenanceNotes]:
        """
        Returns the notes for `file_path` from the notes file,
        or `None` (with a warning) when it has no entry.
        """
        notes_path, file_path = Path(notes_path), Path(file_path)
        notes_data = YAML().load(notes_path) or {}
        entries : dict = notes_data.get('files', {}) or {}
        entry = entries.get(file_path.name)
        if entry is None:
            logging.warning(
                f"""Provenance notes {notes_path} have no entry for {file_path.name}.
                """
            )
            return None
        return ProvenanceNotes(
            source = entry.get('source'),
            derivation = entry.get('derivation'),
            notes = entry.get('notes'),
            expected = dict(entry.get('expected', {}) or {}),
        )
