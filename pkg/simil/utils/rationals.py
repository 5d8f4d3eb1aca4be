"""
Conversions between exact rationals and their text form "num/den".

Every probability, payoff coefficient and threshold in simil is a
`fractions.Fraction`. Floats are accepted on input only, and are
rationalized with a bounded denominator and a warning.
"""
from fractions import Fraction
from numbers import Rational
from typing import TYPE_CHECKING
import warnings

if TYPE_CHECKING:
    from .types import RationalLike

MAX_FLOAT_DENOMINATOR = 10**9

def to_rational(x : 'RationalLike')->Fraction:
    """
    Converts `x` to a `Fraction`.

    Accepts `Fraction`s, ints, strings of the form "num/den" or
    "num" (whitespace tolerated), and floats. Floats are replaced
    by the closest rational with denominator at most 10^9 and a
    warning is issued, since order checks need exact values.
    """
    if isinstance(x, bool):
        raise TypeError(f"Refusing to interpret boolean {x} as a rational")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.replace(" ", ""))
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Cannot parse {x!r} as a rational: {e}") from e
    if isinstance(x, float):
        rationalized = Fraction(x).limit_denominator(MAX_FLOAT_DENOMINATOR)
        warnings.warn(
            f"Float {x!r} ingested as {format_rational(rationalized)}; "
            "comparisons are exact only for the rationalized value.",
            stacklevel = 2,
        )
        return rationalized
    raise TypeError(f"Cannot interpret {x!r} of type {type(x).__name__} as a rational")

def format_rational(x : 'RationalLike')->str:
    """ Always "num/den", including integers ("1/1") """
    x = to_rational(x)
    return f"{x.numerator}/{x.denominator}"
