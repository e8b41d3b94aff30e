"""Closed-form triangle entries: small Schroeder s(n,k), Narayana c(n,k),
large Schroeder s-bar(n,k), and the Catalan numbers c(n).

Indexing follows the tree convention: ``n`` counts leaves (so ``n >= 1``)
and ``k`` counts internal nodes, ``0 <= k <= n-1``.  Out-of-range ``k``
gives 0 so that shifted sums need no special cases.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .numeric import binomial, to_int


@dataclass(frozen=True)
class TriangleRow:
    n: int
    entries: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("row index n must be >= 1")
        if len(self.entries) != self.n:
            raise ValueError(f"row {self.n} must have exactly {self.n} entries")

    @property
    def total(self) -> int:
        return sum(self.entries)


def _check_n(n: int, least: int = 1) -> None:
    if n < least:
        raise ValueError(f"n must be >= {least}, got {n}")


def small_schroeder_entry(n: int, k: int) -> int:
    """Number of Schroeder trees with ``n`` leaves and ``k`` internal nodes."""
    _check_n(n)
    if n == 1:
        return 1 if k == 0 else 0
    if k < 0 or k >= n:
        return 0
    # Integer by construction; a nonzero remainder means a transcription bug.
    return to_int(Fraction(binomial(n - 1, k) * binomial(n + k - 1, n), n - 1))


def narayana_entry(n: int, k: int) -> int:
    """Number of Dyck paths in D_n with exactly ``k`` peaks."""
    _check_n(n)
    if n == 1:
        return 1 if k == 0 else 0
    if k < 0 or k >= n:
        return 0
    return to_int(Fraction(binomial(n - 1, k - 1) * binomial(n - 1, k), n - 1))


def large_schroeder_entry(n: int, k: int) -> int:
    """Number of large Schroeder paths of size ``n`` with ``k`` up steps.

    Equals ``s(n,k) + s(n,k+1)``; defined for ``n >= 2``.  The ``n = 1`` row
    (a single empty path) is handled by :func:`large_schroeder_row`.
    """
    _check_n(n, 2)
    if k < 0 or k >= n:
        return 0
    return small_schroeder_entry(n, k) + small_schroeder_entry(n, k + 1)


def catalan(n: int) -> int:
    """``c(n) = C(2n-2, n-1) / n``, so c(1) = c(2) = 1, c(3) = 2."""
    _check_n(n)
    return to_int(Fraction(binomial(2 * n - 2, n - 1), n))


def catalan_recurrence(n: int) -> int:
    """Catalan numbers from ``c(n) = 2(2n-3)/n * c(n-1)``, ``c(1) = 1``."""
    _check_n(n)
    c = Fraction(1)
    for m in range(2, n + 1):
        c = c * 2 * (2 * m - 3) / m
    return to_int(c)


def catalan_list(n_max: int) -> List[int]:
    """``[c(1), ..., c(n_max)]`` via the recurrence."""
    out = []
    c = Fraction(1)
    for m in range(1, n_max + 1):
        if m > 1:
            c = c * 2 * (2 * m - 3) / m
        out.append(to_int(c))
    return out


def small_schroeder_row(n: int) -> TriangleRow:
    return TriangleRow(n, tuple(small_schroeder_entry(n, k) for k in range(n)))


def narayana_row(n: int) -> TriangleRow:
    return TriangleRow(n, tuple(narayana_entry(n, k) for k in range(n)))


def large_schroeder_row(n: int) -> TriangleRow:
    if n == 1:
        return TriangleRow(1, (1,))
    return TriangleRow(n, tuple(large_schroeder_entry(n, k) for k in range(n)))


ROW_FUNCTIONS = {
    "small": small_schroeder_row,
    "narayana": narayana_row,
    "large": large_schroeder_row,
}
