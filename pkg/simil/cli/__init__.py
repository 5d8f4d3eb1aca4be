from .config import RunConfig, DEFAULT_SEED # noqa: F401
from .demos import DEMOS, DemoResult # noqa: F401
from .properties import SUITES, run_suite # noqa: F401
