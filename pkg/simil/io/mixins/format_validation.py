from pathlib import Path
from typing import List, Optional, Union
import logging
from dataclasses import dataclass, field

from ..formats import load_yaml

@dataclass
class FormatConfig():
    """
    A file format a reader has been validated against: the
    header `format` name, the newest `version` checked, and
    the top-level fields it needs.
    """
    name : Optional[str] = None
    version : Optional[int] = None
    fields : List[str] = field(default_factory=list)

class FormatValidatedMixin():
    """
    A mixin for readers that checks the `format` / `version`
    header of a file against the formats the reader has been
    validated on. Problems are logged, never raised: the
    reader itself decides whether it can parse the file.
    """

    format_config : Union[FormatConfig, List[FormatConfig]] = []

    def __init__(self, file_path : Union[str, Path], *args, **kwargs):
        if not self.__class__.format_config:
            logging.warning(
                f"""
                {self.__class__.__name__} does not have a format_config attribute,
                despite using a FormatValidated mixin.
                Cannot validate the file header.
                To fix, implement a class attribute format_config of type FormatConfig.
            """ )
        try:
            self.validate_format(file_path)
        except Exception as e:
            logging.error(f"""
                Error validating file header for {file_path}.\n
                {e}
            """)
        super().__init__(file_path, *args, **kwargs)

    def validate_format(self, file_path : Union[str, Path]):
        """
        Validates the header of the file for the reader.
        """
        file_path = Path(file_path)
        header = load_yaml(file_path)

        format_configs = self.__class__.format_config
        if not isinstance(format_configs, list):
            format_configs = [format_configs]

        config = next(
            (conf for conf in format_configs if conf.name == header.get('format')),
            None,
        )
        if config is None:
            logging.warning(f"""
                Unknown format {header.get('format')!r} in {file_path} for a
                {self.__class__.__name__}; known formats are
                {[conf.name for conf in format_configs]}.\n
                Cannot guarantee the file is read correctly.
            """)
            return

        warn_string = is_valid_format(header, config)
        if len(warn_string) > 0:
            logging.warning(f"""
                Invalid or incompatible header found for
                {file_path} reader {self.__class__.__name__}:\n
                {warn_string}
            """)

def is_valid_format(header : dict, format_config : FormatConfig)->str:
    ret_string = ""
    version = header.get('version')
    if version is None:
        ret_string += """
            File has no format version; assuming the current one.\n
        """
    elif format_config.version is not None and int(version) > format_config.version:
        ret_string += f"""
            File format version {version} is more recent than the
            version {format_config.version} this reader has been
            validated against. The file may be read incorrectly.\n
        """

    missing = [name for name in format_config.fields if name not in header]
    if missing:
        ret_string += f"""
            Missing top-level fields {missing}.\n
        """

    return ret_string
