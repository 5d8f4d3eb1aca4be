"""
Symmetric pure strategies: one participation set P ⊆ S played by
every player.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, TYPE_CHECKING

from ..dist.space import SignalSpace
from ..errors import ParameterError

if TYPE_CHECKING:
    from ..utils.types import SignalLike

@dataclass(frozen=True)
class Strategy():
    """ σ with participation set P(σ), given as signal indices """
    space : SignalSpace
    participation : FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, 'participation', frozenset(int(i) for i in self.participation))
        if any(not 0 <= i < self.space.n for i in self.participation):
            raise ParameterError(
                f"Participation set {sorted(self.participation)} is not within {self.space.n} signals"
            )

    @classmethod
    def from_signals(cls, space : SignalSpace, signals : Iterable['SignalLike'])->'Strategy':
        return cls(space, space.indices(signals))

    @classmethod
    def all_strategies(cls, space : SignalSpace)->Iterator['Strategy']:
        for subset in space.all_subsets():
            yield cls(space, subset)

    @property
    def non_participation(self)->FrozenSet[int]:
        """ NP(σ) = S∖P(σ) """
        return frozenset(range(self.space.n)) - self.participation

    def participates(self, i : int)->bool:
        return i in self.participation

    @property
    def is_empty(self)->bool:
        return len(self.participation) == 0

    def labels(self)->List[str]:
        return self.space.labels_of(self.participation)

    def __str__(self)->str:
        return "{" + ", ".join(self.labels()) + "}"

@dataclass(frozen=True)
class CutoffStrategy(Strategy):
    """
    P = {s_c, ..., s_n} for a 1-based cutoff c in 1..n+1;
    c = n+1 is the empty participation set.
    """
    cutoff : int = 1

    def __post_init__(self):
        super().__post_init__()
        if not 1 <= self.cutoff <= self.space.n + 1:
            raise ParameterError(f"Cutoff must lie in 1..{self.space.n + 1}, got {self.cutoff}")
        if self.participation != frozenset(range(self.cutoff - 1, self.space.n)):
            raise ParameterError(
                f"Participation set {sorted(self.participation)} does not match cutoff {self.cutoff}"
            )

    @classmethod
    def at(cls, space : SignalSpace, cutoff : int)->'CutoffStrategy':
        return cls(space, frozenset(range(cutoff - 1, space.n)), cutoff)

    @classmethod
    def all_cutoffs(cls, space : SignalSpace)->Iterator['CutoffStrategy']:
        for c in range(1, space.n + 2):
            yield cls.at(space, c)
