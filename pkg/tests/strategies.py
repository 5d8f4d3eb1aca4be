"""
Hypothesis strategies for exact joint distributions.
"""
from fractions import Fraction
from typing import Optional

from hypothesis import strategies as st

from simil.dist.joint import JointDist, multisets
from simil.dist.space import SignalSpace

@st.composite
def joints(draw, max_players : int = 3, max_signals : int = 4, players : Optional[int] = None):
    """ Full-support exchangeable joints with small integer weights """
    n = draw(st.integers(2, max_signals))
    N = players if players is not None else draw(st.integers(2, max_players))
    keys = list(multisets(n, N))
    weights = draw(st.lists(st.integers(1, 9), min_size = len(keys), max_size = len(keys)))
    total = sum(weights)
    return JointDist(
        SignalSpace.from_values(range(n)),
        N,
        {key : Fraction(w, total) for key, w in zip(keys, weights)},
        by_index = True,
    )

weights = st.fractions(min_value = Fraction(1, 12), max_value = Fraction(11, 12), max_denominator = 12)
