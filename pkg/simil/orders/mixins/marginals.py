"""
Mixins for order checkers that compare marginals before anything
else. To use, list the mixin before `OrderChecker` in the bases.
"""
from typing import Optional, TYPE_CHECKING

from ..verdict import MarginalMismatch
from ...dist.joint import require_same_shape

if TYPE_CHECKING:
    from ...dist.joint import JointDist, NonExchJointDist

def first_marginal_mismatch(F : 'JointDist', G : 'JointDist')->Optional[MarginalMismatch]:
    for s, (f, g) in enumerate(zip(F.marginal_vector, G.marginal_vector)):
        if f != g:
            return MarginalMismatch(lhs = f, rhs = g, s = s)
    return None

class EqualMarginalsMixin():
    """
    Orders that compare conditionals only make sense between
    distributions with the same marginal. The first signal at which
    the marginals differ becomes the verdict's violation.
    """

    def __init__(self, F : 'JointDist', G : 'JointDist', *args, **kwargs):
        require_same_shape(F, G)
        self.marginal_mismatch = first_marginal_mismatch(F, G)
        super().__init__(F, G, *args, **kwargs)

class EqualPlayerMarginalsMixin():
    """ As `EqualMarginalsMixin`, player by player """

    def __init__(self, F : 'NonExchJointDist', G : 'NonExchJointDist', *args, **kwargs):
        require_same_shape(F, G)
        self.marginal_mismatch = None
        for player in range(F.players):
            pairs = zip(F.marginal_vectors[player], G.marginal_vectors[player])
            for s, (f, g) in enumerate(pairs):
                if f != g:
                    self.marginal_mismatch = MarginalMismatch(
                        lhs = f, rhs = g, s = s, player = player,
                    )
                    break
            if self.marginal_mismatch is not None:
                break
        super().__init__(F, G, *args, **kwargs)
