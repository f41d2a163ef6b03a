"""Rational scalars.

Rationals are plain :class:`fractions.Fraction` values. Integers are accepted
wherever a rational is expected; floats are refused so that no inexact value
ever enters an exact computation.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = ["Fraction", "to_rational", "is_scalar", "format_rational", "parse_rational"]


def to_rational(value) -> Fraction:
    """Convert ``value`` (int, Fraction or a ``"p/q"`` string) to a Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def format_rational(value) -> str:
    q = to_rational(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
