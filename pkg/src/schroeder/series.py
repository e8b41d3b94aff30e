"""Power series prefixes from the two quadratic functional equations.

* ``y = sum s_d(n) x^n`` solves ``(d+1) y^2 - (x+1) y + x = 0``.
* ``C_d = sum_n sum_k c(n,k) d^k x^n`` solves ``C^2 + (dx - x - 1) C + x = 0``.

Coefficients are found by matching powers of ``x``, so everything stays in
exact rationals and ``d = -1`` needs no special handling.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .numeric import RationalLike, rational
from .triangles import catalan


class SeriesKind(str, enum.Enum):
    SCHROEDER_Y = "schroeder_y"
    NARAYANA_C = "narayana_C"


@dataclass(frozen=True)
class SeriesPrefix:
    coefficients: tuple
    weight_d: Fraction
    kind: SeriesKind

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]


def _square_coefficient(c: Sequence[Fraction], n: int) -> Fraction:
    # [x^n] of c(x)^2 with c_0 = 0
    return sum((c[i] * c[n - i] for i in range(1, n)), Fraction(0))


def sd_series(d: RationalLike, N: int) -> SeriesPrefix:
    """Coefficients ``y_0..y_N``.

    Matching ``x^1`` gives ``y_1 = 1``; for ``n >= 2``,
    ``y_n = (d+1) [x^n] y^2 - y_{n-1}``.
    """
    d = rational(d)
    if N < 1:
        raise ValueError("N must be >= 1")
    y: List[Fraction] = [Fraction(0), Fraction(1)]
    for n in range(2, N + 1):
        y.append((d + 1) * _square_coefficient(y, n) - y[n - 1])
    return SeriesPrefix(tuple(y), d, SeriesKind.SCHROEDER_Y)


def narayana_series(d: RationalLike, N: int) -> SeriesPrefix:
    """Coefficients ``C_0..C_N``; ``C_1 = 1`` and
    ``C_n = [x^n] C^2 + (d-1) C_{n-1}`` for ``n >= 2``."""
    d = rational(d)
    if N < 1:
        raise ValueError("N must be >= 1")
    c: List[Fraction] = [Fraction(0), Fraction(1)]
    for n in range(2, N + 1):
        c.append(_square_coefficient(c, n) + (d - 1) * c[n - 1])
    return SeriesPrefix(tuple(c), d, SeriesKind.NARAYANA_C)


def residual(prefix: SeriesPrefix) -> List[Fraction]:
    """Coefficients of ``x^0..x^N`` after substituting the prefix back into
    its functional equation.  All zero for a correct prefix."""
    c = prefix.coefficients
    d = prefix.weight_d
    N = prefix.order
    out = []
    for n in range(N + 1):
        sq = sum((c[i] * c[n - i] for i in range(n + 1)), Fraction(0))
        prev = c[n - 1] if n >= 1 else Fraction(0)
        const = Fraction(1) if n == 1 else Fraction(0)
        if prefix.kind is SeriesKind.SCHROEDER_Y:
            out.append((d + 1) * sq - c[n] - prev + const)
        else:
            out.append(sq + (d - 1) * prev - c[n] + const)
    return out


def catalan_gf_relation_holds(coefficients: Sequence[Fraction]) -> bool:
    """Check a coefficient list of ``C_{-1}`` against ``C_1(-x^2) = C_{-1}(x) - x``.

    Index 1 must be 1, odd indices >= 3 must vanish, and index ``n = 2m``
    must equal ``(-1)^m c(m)``.
    """
    for n in range(1, len(coefficients)):
        if n == 1:
            expected = 1
        elif n % 2 == 1:
            expected = 0
        else:
            m = n // 2
            expected = (-1) ** m * catalan(m)
        if coefficients[n] != expected:
            return False
    return True


def catalan_gf_relation_check(N: int) -> bool:
    if N < 2:
        raise ValueError("N must be >= 2")
    return catalan_gf_relation_holds(narayana_series(-1, N).coefficients)
