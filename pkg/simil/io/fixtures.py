"""
A class which walks a directory of instance files, discerns which
reader each file needs, and opens them. Works automatically for
every `SimilReader` subclass defined in `simil.io.files`.
"""
from pathlib import Path
from typing import Dict, List, Optional, Type, TypeVar, TYPE_CHECKING
import inspect
import logging

from . import files
from .files import (
    SimilReader, DistributionReader, FamilyReader, GameReader, WitnessBundleReader,
)
from ..errors import FileFormatError

if TYPE_CHECKING:
    from ..utils.types import PathLike

ReaderT = TypeVar("ReaderT", bound=SimilReader)

READERS : List[Type[SimilReader]] = [
    cls
    for name, cls in
    inspect.getmembers(
        files,
        lambda x: (
            issubclass(x, SimilReader) and not inspect.isabstract(x) and hasattr(x, 'FILE_TYPE')
        ) if inspect.isclass(x) else False
    )
]

def _hidden(path : Path)->bool:
    # macOS resource forks and our own temporary writes
    return path.name.startswith('.')

def reader_for(path : 'PathLike', report_failure : bool = True)->Optional[Type[SimilReader]]:
    """ The first reader that accepts the file, if any """
    path = Path(path)
    return next(
        (cls for cls in READERS if cls.isvalid(path, report_failure = report_failure)),
        None,
    )

def open_file(path : 'PathLike')->SimilReader:
    """
    Opens a single file with whichever reader accepts it.

    ## Example

    ```python
        F = open_file('fixtures/bankrun/puzzle_F.yaml').information
    ```
    """
    path = Path(path)
    if not path.is_file():
        raise FileFormatError(f"File {path} does not exist.")
    reader_class = reader_for(path)
    if reader_class is None:
        raise FileFormatError(
            f"File {path} is not a distribution, family, game or witness bundle"
        )
    return reader_class(path)

class FixtureSet():
    """
    Every readable instance under a directory, by reader type and
    by file stem. Files that no reader accepts (provenance notes,
    run configurations) are skipped.

    ## Example

    ```python
        fixtures = FixtureSet('fixtures')
        F = fixtures['puzzle_F'].information
        games = fixtures.games
    ```
    """

    def __init__(self, path : 'PathLike', suppress_warnings : bool = False):
        path = Path(path)
        self.main_path = path
        files_in_path = sorted(path.rglob("*") if path.is_dir() else [path])
        self.readers : List[SimilReader] = []
        for file in files_in_path:
            if file.is_dir() or _hidden(file):
                continue
            reader_class = reader_for(file, report_failure = not suppress_warnings)
            if reader_class is None:
                continue
            try:
                self.readers.append(reader_class(file))
            except Exception as e:
                if not suppress_warnings:
                    logging.warning(f"""
                        Skipping {file}: it looks like a {reader_class.FILE_TYPE.__name__}
                        but could not be read.\n
                        {e}
                    """)
        logging.info(f"Found {len(self.readers)} instance files under {path}")

    def get_reader_type(self, cls : Type[ReaderT])->List[ReaderT]:
        """ Returns all readers of type cls """
        return [reader for reader in self.readers if isinstance(reader, cls)]

    @property
    def by_name(self)->Dict[str, SimilReader]:
        return {reader.name : reader for reader in self.readers}

    def __getitem__(self, name : str)->SimilReader:
        try:
            return self.by_name[name]
        except KeyError:
            raise KeyError(f"No instance file named {name!r} under {self.main_path}") from None

    def __contains__(self, name : str)->bool:
        return name in self.by_name

    def __len__(self)->int:
        return len(self.readers)

    @property
    def distributions(self)->List[DistributionReader]:
        return self.get_reader_type(DistributionReader)

    @property
    def families(self)->List[FamilyReader]:
        return self.get_reader_type(FamilyReader)

    @property
    def games(self)->List[GameReader]:
        return self.get_reader_type(GameReader)

    @property
    def bundles(self)->List[WitnessBundleReader]:
        return self.get_reader_type(WitnessBundleReader)
