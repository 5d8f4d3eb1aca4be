from typing import Union, Any, Tuple, FrozenSet, Iterable
from fractions import Fraction
from pathlib import Path
import numpy as np

PathLike = Union[str, Path]

# Exact quantities are always `Fraction`s; anything that
# `to_rational` accepts can be passed in.
RationalLike = Union[Fraction, int, str, float]

Label = str
# A signal may be named by its label or by its numeric value
SignalLike = Union[Label, Fraction, int]
SignalSetLike = Iterable[SignalLike]

# Profiles and multisets are stored as tuples of signal indices
IndexProfile = Tuple[int, ...]
IndexSet = FrozenSet[int]

ObjectArray = np.ndarray[Any, object]
FloatArray = np.ndarray[Any, float]
IntArray = np.ndarray[Any, int]
