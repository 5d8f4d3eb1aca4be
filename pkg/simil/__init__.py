try:
    from ._version import __version__, __version_tuple__, version, version_tuple # noqa: F401
except ImportError:
    __version__ = version = '0.1.0'
    __version_tuple__ = version_tuple = (0, 1, 0)
from . import utils # noqa: F401
from . import dist # noqa: F401
from . import orders # noqa: F401
from . import games # noqa: F401
from . import witnesses # noqa: F401
from . import applications # noqa: F401
from . import io # noqa: F401
from .dist import SignalSpace, JointDist, NonExchJointDist, StateFamily # noqa: F401
from .orders import Order, check, check_cad_statewise # noqa: F401
from .io import FixtureSet, open_file # noqa: F401
