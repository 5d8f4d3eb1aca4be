"""
Strict three-way separation of affinely independent posteriors by a
linear functional over the states.

With y − x for y ∈ A ∪ B linearly independent, complete them to a
basis, send a − x to −1, b − x to +1 and the completing vectors to
0, and solve for the coefficients. Then ⟨λ, a⟩ = ⟨λ, x⟩ − 1 and
⟨λ, b⟩ = ⟨λ, x⟩ + 1.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from ..dist.family import Posterior, require_affinely_independent
from ..utils.linalg import complete_basis, solve
from ..utils.rationals import to_rational, format_rational

PosteriorLike = Union[Posterior, Sequence]

def _vector(p : PosteriorLike)->List[Fraction]:
    if isinstance(p, Posterior):
        return list(p.probs)
    return [to_rational(x) for x in p]

def _dot(coefficients : Sequence[Fraction], vector : Sequence[Fraction])->Fraction:
    return sum((c * v for c, v in zip(coefficients, vector)), Fraction(0))

@dataclass(frozen=True)
class SeparatingFunctional():
    """
    Coefficients λ(θ) with max over A < value at x < min over B.
    A missing side has no bound (`None`).
    """
    coefficients : Tuple[Fraction, ...]
    max_a : Optional[Fraction]
    at_x : Fraction
    min_b : Optional[Fraction]

    def value(self, posterior : PosteriorLike)->Fraction:
        """ ⟨λ, μ⟩ = E_μ[λ(θ)] """
        return _dot(self.coefficients, _vector(posterior))

    @property
    def lower_gap(self)->Optional[Fraction]:
        return None if self.max_a is None else self.at_x - self.max_a

    @property
    def upper_gap(self)->Optional[Fraction]:
        return None if self.min_b is None else self.min_b - self.at_x

    @property
    def separates(self)->bool:
        return (
            (self.max_a is None or self.max_a < self.at_x)
            and (self.min_b is None or self.at_x < self.min_b)
        )

    def to_dict(self)->dict:
        def fmt(x):
            return None if x is None else format_rational(x)
        return {
            'coefficients' : [format_rational(c) for c in self.coefficients],
            'max_a' : fmt(self.max_a),
            'at_x' : format_rational(self.at_x),
            'min_b' : fmt(self.min_b),
        }

def separating_functional(
        A : Sequence[PosteriorLike],
        x : PosteriorLike,
        B : Sequence[PosteriorLike],
    )->SeparatingFunctional:
    """
    Raises `AffineDependenceError`, carrying the λ-witness, when
    A ∪ {x} ∪ B is affinely dependent (in particular when a posterior
    repeats).
    """
    a_vectors = [_vector(a) for a in A]
    b_vectors = [_vector(b) for b in B]
    x_vector = _vector(x)
    dim = len(x_vector)
    require_affinely_independent(a_vectors + [x_vector] + b_vectors)

    differences = [
        [yi - xi for yi, xi in zip(y, x_vector)]
        for y in a_vectors + b_vectors
    ]
    added = complete_basis(differences, dim)
    basis = differences + [
        [Fraction(int(j == i)) for j in range(dim)] for i in added
    ]
    targets = [Fraction(-1)] * len(a_vectors) + [Fraction(1)] * len(b_vectors) + [Fraction(0)] * len(added)
    coefficients = tuple(solve(basis, targets))

    return SeparatingFunctional(
        coefficients = coefficients,
        max_a = max((_dot(coefficients, a) for a in a_vectors), default = None),
        at_x = _dot(coefficients, x_vector),
        min_b = min((_dot(coefficients, b) for b in b_vectors), default = None),
    )
