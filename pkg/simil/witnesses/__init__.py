from .package import ( # noqa: F401
    WitnessPackage, WitnessDirection, VerificationTranscript, verify_package,
    FAMILIES, PRIVATE_MAX, PRIVATE_MIN, COMMON, SEPARABLE, SCAD, CONGESTION,
)
from .separation import SeparatingFunctional, separating_functional # noqa: F401
from .private import witness_private_max, witness_private_min # noqa: F401
from .strong import witness_scad # noqa: F401
from .congestion import witness_congestion # noqa: F401
from .common import witness_common, witness_separable # noqa: F401
from .routing import witness_from_verdict # noqa: F401
