from .aggregator import Aggregator, Affine, Table, aggregator_from_dict # noqa: F401
from .strategy import Strategy, CutoffStrategy # noqa: F401
from .stats import ICEntry, ICReport, ParticipationStats, EquilibriumSet # noqa: F401
from .private import ( # noqa: F401
    PrivateValueGame, net_payoff_private, is_equilibrium_private,
    enumerate_equilibria_private,
)
from .common import ( # noqa: F401
    CommonValueGame, net_payoff_common, is_equilibrium_common, is_cutoff_equilibrium,
    enumerate_cutoff_equilibria, enumerate_equilibria_common,
)
from .compare import InclusionReport, compare_equilibrium_sets # noqa: F401
from .weighted import nonexch_is_equilibrium, enumerate_equilibria_weighted # noqa: F401
from .relevance import RelevanceReport, validate_payoff_relevance # noqa: F401
