"""Exact integers and rationals shared by every computation path.

Rationals are :class:`fractions.Fraction`, which already keeps values in
lowest terms with a positive denominator and raises ``ZeroDivisionError``
on division by zero.  This module adds the strict text syntax used by the
CLI and fixtures, plus a couple of checked conversions.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?\s*$")


class IntegralityError(ArithmeticError):
    """An exact value expected to be an integer had a nonunit denominator."""


def binomial(n: int, k: int) -> int:
    """C(n, k) for ``n >= 0``; zero when ``k`` is outside ``0..n``."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (optional sign on ``p``).

    Decimal and exponent forms are rejected, as is a zero denominator.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}; expected 'p/q' or 'p'")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    """Inverse of :func:`parse_rational`: ``"p"`` when integral, else ``"p/q"``."""
    q = rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_to_json(q: Fraction) -> dict:
    q = rational(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def to_int(q: Fraction) -> int:
    """Checked conversion; raises :class:`IntegralityError` if ``q`` is not integral."""
    q = rational(q)
    if q.denominator != 1:
        raise IntegralityError(f"{format_rational(q)} is not an integer")
    return q.numerator


def log_abs(q: Fraction) -> float:
    """Natural log of ``|q|`` for exact rationals far outside double range."""
    q = rational(q)
    if q == 0:
        raise ValueError("log of zero")
    # math.log accepts arbitrarily large ints without overflowing.
    return math.log(abs(q.numerator)) - math.log(q.denominator)
