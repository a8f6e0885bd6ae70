"""Exact rational scalars.

Everything in the package is computed over :class:`fractions.Fraction`.
This module holds the text format used on the command line and in JSON
output, plus the two falling-factorial products that the rest of the
code leans on.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RAT_RE = re.compile(r"\s*([+-]?\d+)(?:/(\d+))?\s*\Z")


def rat_parse(text: str) -> Fraction:
    """Parse ``[+-]digits[/digits]`` into a reduced Fraction.

    >>> rat_parse("3/6")
    Fraction(1, 2)
    >>> rat_parse("-4")
    Fraction(-4, 1)
    """
    if not isinstance(text, str):
        raise TypeError(f"expected str, got {type(text).__name__}")
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is None:
        return Fraction(int(num))
    if int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den))


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or rational literal to Fraction.

    Floats are refused on purpose.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rat_parse(value)
    raise TypeError(f"cannot treat {type(value).__name__} as an exact rational")


def rat_str(value: Fraction) -> str:
    """Canonical text form: ``"a"`` for integers, ``"a/b"`` otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """(x)_n = x(x-1)...(x-n+1), with (x)_0 = 1."""
    return degenerate_falling_factorial(x, n, 1)


def degenerate_falling_factorial(x: RationalLike, n: int, lam: RationalLike) -> Fraction:
    """(x)_{n,lam} = x(x-lam)...(x-(n-1)lam).

    ``lam = 0`` gives x**n and ``lam = 1`` the ordinary falling factorial.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    x, lam = rat(x), rat(lam)
    out = Fraction(1)
    for j in range(n):
        out *= x - j * lam
    return out
