from .provenance import ProvenanceNotes, ProvenanceMixin # noqa: F401
from .format_validation import FormatConfig, FormatValidatedMixin, is_valid_format # noqa: F401
