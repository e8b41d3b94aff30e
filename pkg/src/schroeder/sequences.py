"""Weighted small and large Schroeder numbers s_d(n) and s-bar_d(n).

``s_d(n) = sum_k s(n,k) d^k``.  Three routes compute it: the defining sum
over the triangle, the three-term P-recurrence (the fast path), and power
series coefficient extraction (see :mod:`schroeder.series`).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .numeric import IntegralityError, RationalLike, rational
from .triangles import catalan, large_schroeder_row, small_schroeder_entry


class Method(str, enum.Enum):
    DEFINITION = "definition"
    RECURRENCE = "recurrence"
    SERIES = "series"
    AUTO = "auto"


@dataclass(frozen=True)
class WeightedSequenceQuery:
    d: Fraction
    n_max: int
    method: Method = Method.AUTO

    def __post_init__(self):
        object.__setattr__(self, "d", rational(self.d))
        object.__setattr__(self, "method", Method(self.method))
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")


def _check_n(n: int, least: int = 1) -> None:
    if n < least:
        raise ValueError(f"n must be >= {least}, got {n}")


def sd_definition(d: RationalLike, n: int) -> Fraction:
    """Weighted sum over the triangle row; the ground-truth route."""
    d = rational(d)
    _check_n(n)
    return sum((small_schroeder_entry(n, k) * d**k for k in range(n)), Fraction(0))


def sd_recurrence_list(d: RationalLike, n_max: int) -> List[Fraction]:
    """``[s_d(1), ..., s_d(n_max)]`` from

    ``n s_d(n) = (2d+1)(2n-3) s_d(n-1) - (n-3) s_d(n-2)``,
    seeded with ``s_d(1) = 1`` and ``s_d(2) = d``.
    """
    d = rational(d)
    _check_n(n_max)
    integral = d.denominator == 1
    vals = [Fraction(1), d]
    for n in range(3, n_max + 1):
        v = ((2 * d + 1) * (2 * n - 3) * vals[-1] - (n - 3) * vals[-2]) / n
        if integral and v.denominator != 1:
            raise IntegralityError(f"s_{d}({n}) = {v} is not an integer")
        vals.append(v)
    return vals[:n_max]


def sd_recurrence(d: RationalLike, n: int) -> Fraction:
    _check_n(n)
    return sd_recurrence_list(d, n)[n - 1]


def sd_values(d: RationalLike, n_max: int, method: Method | str = Method.AUTO) -> List[Fraction]:
    """``[s_d(1), ..., s_d(n_max)]`` by the chosen method."""
    method = Method(method)
    d = rational(d)
    if method in (Method.AUTO, Method.RECURRENCE):
        return sd_recurrence_list(d, n_max)
    if method is Method.DEFINITION:
        return [sd_definition(d, n) for n in range(1, n_max + 1)]
    from .series import sd_series

    return list(sd_series(d, n_max).coefficients[1:])


def compute(query: WeightedSequenceQuery) -> List[Fraction]:
    return sd_values(query.d, query.n_max, query.method)


def sbar_definition(d: RationalLike, n: int) -> Fraction:
    d = rational(d)
    _check_n(n)
    row = large_schroeder_row(n).entries
    return sum((c * d**k for k, c in enumerate(row)), Fraction(0))


def sbar_d(d: RationalLike, n: int) -> Fraction:
    """Weighted large Schroeder number.

    For ``n >= 2`` and ``d != 0`` this is ``(d+1)/d * s_d(n)``; the result is
    cross-checked against the defining sum and a mismatch raises.
    """
    d = rational(d)
    _check_n(n)
    if d == 0 or n == 1:
        return sbar_definition(d, n)
    value = (d + 1) / d * sd_recurrence(d, n)
    direct = sbar_definition(d, n)
    if value != direct:
        raise ArithmeticError(f"s-bar_{d}({n}): {value} != {direct}")
    return value


def sbar_values(d: RationalLike, n_max: int, method: Method | str = Method.AUTO) -> List[Fraction]:
    d = rational(d)
    method = Method(method)
    if method is Method.DEFINITION or d == 0:
        return [sbar_definition(d, n) for n in range(1, n_max + 1)]
    base = sd_values(d, n_max, method)
    return [base[0] if n == 1 else (d + 1) / d * base[n - 1] for n in range(1, n_max + 1)]


def sd_reflection(d: RationalLike, n: int) -> Fraction:
    """``(-1)^(n-1) * d/(d+1) * s_{-d-1}(n)``, which equals ``s_d(n)``."""
    d = rational(d)
    _check_n(n, 2)
    if d == -1:
        raise ValueError("reflection identity is undefined at d = -1")
    sign = 1 if n % 2 == 1 else -1
    return sign * d / (d + 1) * sd_recurrence(-d - 1, n)


def s_minus_half(n: int) -> Fraction:
    """Closed form for d = -1/2: zero at odd ``n >= 3``, and
    ``(-1)^m c(m) / 2^(2m-1)`` at ``n = 2m``."""
    _check_n(n)
    if n == 1:
        return Fraction(1)
    if n % 2 == 1:
        return Fraction(0)
    m = n // 2
    return Fraction((-1) ** m * catalan(m), 2 ** (2 * m - 1))


def parity_split(n: int) -> Tuple[int, int]:
    """``(sum of s(n,k) over odd k, sum over even k)``."""
    _check_n(n)
    odd = sum(small_schroeder_entry(n, k) for k in range(1, n, 2))
    even = sum(small_schroeder_entry(n, k) for k in range(0, n, 2))
    return odd, even
