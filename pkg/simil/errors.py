"""
Exceptions raised across `simil`. All of them are `ValueError`s
so callers that only know about bad input can catch that.
"""
from typing import Sequence, TYPE_CHECKING

if TYPE_CHECKING:
    from fractions import Fraction

class SimilError(ValueError):
    """ Base class for every error raised by simil """

class SpaceMismatchError(SimilError):
    """ Two objects live on different signal spaces, player counts or states """

class ZeroProbabilityError(SimilError):
    """ Conditioning on a signal with zero marginal probability """

class InvalidDistributionError(SimilError):
    """ Negative masses, wrong total mass, or outside desk-scale bounds """

class InfeasibleTransformError(SimilError):
    """ A transformation would create negative mass """

class AffineDependenceError(SimilError):
    """
    The posteriors handed to a separating construction are affinely
    dependent. `witness` holds the nonzero λ with Σλ = 0 and Σλμ = 0.
    """
    def __init__(self, message : str, witness : Sequence['Fraction']):
        super().__init__(message)
        self.witness = tuple(witness)

class UnverifiableViolationError(SimilError):
    """ A claimed violation does not hold strictly on the inputs """

class DegenerateViolationError(SimilError):
    """ A violation holds, but the witness game would divide by zero """

class ParameterError(SimilError):
    """ A named model parameter is out of its admissible range """

class FileFormatError(SimilError):
    """ An input file could not be parsed """
