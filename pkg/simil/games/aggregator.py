"""
Aggregators h turning the number (or weighted sum) of other
participants into a payoff term.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence, Tuple, TYPE_CHECKING

from ..errors import ParameterError
from ..utils.rationals import to_rational, format_rational

if TYPE_CHECKING:
    from ..utils.types import RationalLike

class Aggregator(ABC):

    @abstractmethod
    def __call__(self, A : 'RationalLike')->Fraction:
        pass

    @property
    @abstractmethod
    def is_affine(self)->bool:
        pass

    def expectation(self, pmf : Sequence[Fraction])->Fraction:
        """ E[h(C)] for a count C with Prob(C = m) = pmf[m] """
        return sum((self(m) * q for m, q in enumerate(pmf)), Fraction(0))

    @abstractmethod
    def to_dict(self)->dict:
        pass

    def check_players(self, players : int):
        pass

@dataclass(frozen=True)
class Affine(Aggregator):
    """ h(A) = k·A + l with k > 0 """
    k : Fraction = Fraction(1)
    l : Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'k', to_rational(self.k))
        object.__setattr__(self, 'l', to_rational(self.l))
        if self.k <= 0:
            raise ParameterError(f"Affine aggregator needs k > 0, got {format_rational(self.k)}")

    def __call__(self, A):
        return self.k * to_rational(A) + self.l

    @property
    def is_affine(self)->bool:
        return True

    def to_dict(self)->dict:
        return {'affine' : {'k' : format_rational(self.k), 'l' : format_rational(self.l)}}

@dataclass(frozen=True)
class Table(Aggregator):
    """
    h(0), ..., h(N-1): nondecreasing and increasing somewhere.
    Non-integer arguments (weighted sums) take the value at their
    floor, clamped to the table.
    """
    values : Tuple[Fraction, ...] = ()

    def __post_init__(self):
        values = tuple(to_rational(v) for v in self.values)
        object.__setattr__(self, 'values', values)
        if len(values) < 2:
            raise ParameterError("A table aggregator needs at least two entries")
        if any(b < a for a, b in zip(values, values[1:])):
            raise ParameterError(
                f"Table aggregator must be nondecreasing, got {[format_rational(v) for v in values]}"
            )
        if values[-1] == values[0]:
            raise ParameterError("Table aggregator must increase somewhere")

    @classmethod
    def threshold(cls, m : int, players : int)->'Table':
        """ h(A) = 1{A ≥ m} over A = 0, ..., N-1 """
        if not 1 <= m <= players - 1:
            raise ParameterError(f"Threshold m must lie in 1..{players - 1}, got {m}")
        return cls(tuple(Fraction(int(A >= m)) for A in range(players)))

    def __call__(self, A):
        A = to_rational(A)
        idx = min(max(floor(A), 0), len(self.values) - 1)
        return self.values[idx]

    @property
    def is_affine(self)->bool:
        steps = {b - a for a, b in zip(self.values, self.values[1:])}
        return len(steps) == 1

    def check_players(self, players : int):
        if len(self.values) != players:
            raise ParameterError(
                f"Table aggregator has {len(self.values)} entries for {players} players"
            )

    def to_dict(self)->dict:
        return {'table' : [format_rational(v) for v in self.values]}

def aggregator_from_dict(data : dict)->Aggregator:
    """ {'affine': {'k', 'l'}} or {'table': [...]} """
    if 'affine' in data:
        return Affine(data['affine'].get('k', 1), data['affine'].get('l', 0))
    if 'table' in data:
        return Table(tuple(data['table']))
    raise ParameterError(f"Unknown aggregator {dict(data)}")
