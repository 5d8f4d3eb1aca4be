from .marginals import EqualMarginalsMixin, EqualPlayerMarginalsMixin, first_marginal_mismatch # noqa: F401
from .players import TwoPlayersMixin # noqa: F401
