"""Schroeder trees, lattice paths, path statistics and brute-force counts.

Paths are stored as strings over ``"U"``, ``"F"``, ``"D"`` (one character per
step).  A path of size ``n`` ends at ``(2n-2, 0)``, so ``U + F = n - 1``.
Trees are nested tuples of children; a leaf has no children.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Tuple

from .numeric import RationalLike, rational

ENUMERATION_LIMIT = 12

UP, FLAT, DOWN = "U", "F", "D"
_HEIGHT_STEP = {UP: 1, FLAT: 0, DOWN: -1}


class EnumerationLimitError(ValueError):
    """Requested size exceeds the enumeration bound."""


class InvalidObjectError(ValueError):
    """A tree or path violates the invariants of its class."""


class PathClass(str, enum.Enum):
    SMALL = "small_schroeder"
    LARGE = "large_schroeder"
    DYCK = "dyck"


def _check_bound(n: int, max_n: int | None) -> None:
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")
    limit = ENUMERATION_LIMIT if max_n is None else max_n
    if n > limit:
        raise EnumerationLimitError(
            f"n = {n} exceeds the enumeration bound {limit}; pass a larger max_n to override"
        )


# --------------------------------------------------------------------------
# Trees
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PlaneTree:
    children: Tuple["PlaneTree", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> int:
        if self.is_leaf:
            return 1
        return sum(c.leaves() for c in self.children)

    def internal_nodes(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + sum(c.internal_nodes() for c in self.children)

    def is_schroeder(self) -> bool:
        return self.is_leaf or (
            len(self.children) >= 2 and all(c.is_schroeder() for c in self.children)
        )

    def mirror(self) -> "PlaneTree":
        return PlaneTree(tuple(c.mirror() for c in reversed(self.children)))

    def encode(self) -> str:
        return "(" + "".join(c.encode() for c in self.children) + ")"

    def __str__(self) -> str:
        return self.encode()


LEAF = PlaneTree()


def parse_tree(text: str) -> PlaneTree:
    """Inverse of :meth:`PlaneTree.encode` (``"()"`` is a leaf)."""
    text = text.strip()
    stack: list = []
    root = None
    for pos, ch in enumerate(text):
        if ch == "(":
            if root is not None:
                raise ValueError(f"trailing characters after position {pos}")
            stack.append([])
        elif ch == ")":
            if not stack:
                raise ValueError(f"unbalanced ')' at position {pos}")
            node = PlaneTree(tuple(stack.pop()))
            if stack:
                stack[-1].append(node)
            else:
                root = node
        else:
            raise ValueError(f"unexpected character {ch!r} at position {pos}")
    if stack or root is None:
        raise ValueError("unbalanced tree encoding")
    return root


def _trees(n: int) -> Iterator[PlaneTree]:
    if n == 1:
        yield LEAF
        return
    for kids in _forests(n, 2):
        yield PlaneTree(kids)


def _forests(n: int, min_parts: int) -> Iterator[tuple]:
    # Ordered sequences of Schroeder trees with n leaves in total and at
    # least min_parts members; first member's size ascending.
    if n == 0:
        if min_parts <= 0:
            yield ()
        return
    for a in range(1, n - max(min_parts - 1, 0) + 1):
        for t in _trees(a):
            for rest in _forests(n - a, min_parts - 1):
                yield (t,) + rest


def enumerate_schroeder_trees(n: int, max_n: int | None = None) -> Iterator[PlaneTree]:
    """Every Schroeder tree with ``n`` leaves, exactly once.

    Order: children lists by first-child leaf count ascending, then
    recursively by the first child's own order, then by the remaining
    siblings.
    """
    _check_bound(n, max_n)
    return _trees(n)


def enumerate_full_binary_trees(n: int, max_n: int | None = None) -> Iterator[PlaneTree]:
    """Trees with ``n`` leaves and ``n - 1`` internal nodes (all binary)."""
    _check_bound(n, max_n)
    return _binary_trees(n)


def _binary_trees(n: int) -> Iterator[PlaneTree]:
    if n == 1:
        yield LEAF
        return
    for a in range(1, n):
        for left in _binary_trees(a):
            for right in _binary_trees(n - a):
                yield PlaneTree((left, right))


# --------------------------------------------------------------------------
# Paths
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticePath:
    steps: str
    kind: PathClass = PathClass.SMALL

    def __post_init__(self):
        object.__setattr__(self, "kind", PathClass(self.kind))
        problem = path_violation(self.steps, self.kind)
        if problem:
            raise InvalidObjectError(f"{self.steps!r} is not a {self.kind.value} path: {problem}")

    @property
    def size(self) -> int:
        return self.steps.count(UP) + self.steps.count(FLAT) + 1

    def heights(self) -> list:
        """Height before each step, followed by the final height."""
        h, out = 0, [0]
        for s in self.steps:
            h += _HEIGHT_STEP[s]
            out.append(h)
        return out

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)


def path_violation(steps: str, kind: PathClass) -> str | None:
    """Reason the step string is not in the class, or ``None`` if it is."""
    kind = PathClass(kind)
    h = 0
    for i, s in enumerate(steps):
        if s not in _HEIGHT_STEP:
            return f"unknown step {s!r} at {i}"
        if s == FLAT:
            if kind is PathClass.DYCK:
                return f"flat step at {i}"
            if kind is PathClass.SMALL and h == 0:
                return f"flat step on the axis at {i}"
        h += _HEIGHT_STEP[s]
        if h < 0:
            return f"goes below the axis at step {i}"
    if h != 0:
        return f"ends at height {h}"
    return None


def is_path(steps: str, kind: PathClass) -> bool:
    return path_violation(steps, kind) is None


def _paths(budget: int, height: int, kind: PathClass, prefix: list) -> Iterator[str]:
    # budget = remaining U + F steps.  Branches are tried in U < F < D order,
    # which makes the output lexicographic under that alphabet.
    if budget == 0 and height == 0:
        yield "".join(prefix)
        return
    if budget > 0:
        prefix.append(UP)
        yield from _paths(budget - 1, height + 1, kind, prefix)
        prefix.pop()
        if kind is PathClass.LARGE or (kind is PathClass.SMALL and height > 0):
            prefix.append(FLAT)
            yield from _paths(budget - 1, height, kind, prefix)
            prefix.pop()
    if height > 0:
        prefix.append(DOWN)
        yield from _paths(budget, height - 1, kind, prefix)
        prefix.pop()


def enumerate_paths(n: int, kind: PathClass, max_n: int | None = None) -> Iterator[LatticePath]:
    _check_bound(n, max_n)
    kind = PathClass(kind)
    return (LatticePath(s, kind) for s in _paths(n - 1, 0, kind, []))


def enumerate_small_schroeder_paths(n: int, max_n: int | None = None) -> Iterator[LatticePath]:
    return enumerate_paths(n, PathClass.SMALL, max_n)


def enumerate_large_schroeder_paths(n: int, max_n: int | None = None) -> Iterator[LatticePath]:
    return enumerate_paths(n, PathClass.LARGE, max_n)


def enumerate_dyck_paths(n: int, max_n: int | None = None) -> Iterator[LatticePath]:
    return enumerate_paths(n, PathClass.DYCK, max_n)


# --------------------------------------------------------------------------
# Statistics
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PathStatistics:
    U: int
    F: int
    D: int
    V: int    # valleys, adjacent DU
    K: int    # peaks, adjacent UD
    U_V: int  # up steps not in a valley
    D_V: int
    U_K: int  # up steps not in a peak
    D_K: int


def path_statistics(path: LatticePath | str) -> PathStatistics:
    s = path.steps if isinstance(path, LatticePath) else path
    u, f, d = s.count(UP), s.count(FLAT), s.count(DOWN)
    valleys = sum(1 for a, b in zip(s, s[1:]) if a == DOWN and b == UP)
    peaks = sum(1 for a, b in zip(s, s[1:]) if a == UP and b == DOWN)
    return PathStatistics(
        U=u, F=f, D=d, V=valleys, K=peaks,
        U_V=u - valleys, D_V=d - valleys, U_K=u - peaks, D_K=d - peaks,
    )


# --------------------------------------------------------------------------
# Brute-force weighted and colored counts over D_n
# --------------------------------------------------------------------------

def weighted_catalan_V(a: RationalLike, b: RationalLike, n: int, max_n: int | None = None) -> Fraction:
    """Sum of ``a^U_V * b^V`` over Dyck paths of size ``n`` (``0^0 = 1``)."""
    a, b = rational(a), rational(b)
    total = Fraction(0)
    for p in enumerate_dyck_paths(n, max_n):
        st = path_statistics(p)
        total += a**st.U_V * b**st.V
    return total


def weighted_catalan_K(a: RationalLike, b: RationalLike, n: int, max_n: int | None = None) -> Fraction:
    """Sum of ``a^K * b^U_K`` over Dyck paths of size ``n`` (``0^0 = 1``)."""
    a, b = rational(a), rational(b)
    total = Fraction(0)
    for p in enumerate_dyck_paths(n, max_n):
        st = path_statistics(p)
        total += a**st.K * b**st.U_K
    return total


def _check_colors(k: int, l: int, p: int) -> None:
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    if p < 0 or p > k * l:
        raise ValueError(f"cannot forbid {p} of the {k * l} peak types")


def colored_dyck_count(k: int, l: int, p: int, n: int, max_n: int | None = None) -> int:
    """Dyck paths of size ``n`` with ``k`` up-step colors and ``l`` down-step
    colors, avoiding ``p`` of the ``k*l`` colored peak types.

    Each peak has ``kl - p`` allowed colorings and every other step is free,
    so the count is ``sum k^U_K * l^D_K * (kl-p)^K``.
    """
    _check_colors(k, l, p)
    allowed = k * l - p
    total = 0
    for path in enumerate_dyck_paths(n, max_n):
        st = path_statistics(path)
        total += k**st.U_K * l**st.D_K * allowed**st.K
    return total


def colored_dyck_count_bruteforce(k: int, l: int, p: int, n: int, max_n: int | None = None) -> int:
    """Same count by coloring every step explicitly and rejecting forbidden peaks.

    The forbidden types are the first ``p`` pairs ``(up color, down color)``
    in lexicographic order; the count does not depend on which are chosen.
    """
    _check_colors(k, l, p)
    forbidden = set(itertools.islice(itertools.product(range(k), range(l)), p))
    total = 0
    for path in enumerate_dyck_paths(n, max_n):
        s = path.steps
        peak_pos = [i for i in range(len(s) - 1) if s[i] == UP and s[i + 1] == DOWN]
        palettes = [range(k) if ch == UP else range(l) for ch in s]
        for coloring in itertools.product(*palettes):
            if all((coloring[i], coloring[i + 1]) not in forbidden for i in peak_pos):
                total += 1
    return total


def peak_parity_counts(n: int, max_n: int | None = None) -> Tuple[int, int]:
    """``(#Dyck paths with an even number of peaks, #with an odd number)``.

    The size-1 path is empty and has zero peaks, so ``n = 1`` gives ``(1, 0)``.
    """
    even = odd = 0
    for p in enumerate_dyck_paths(n, max_n):
        if path_statistics(p).K % 2 == 0:
            even += 1
        else:
            odd += 1
    return even, odd


def flat_colored_count(m: int, n: int, max_n: int | None = None) -> int:
    """Small Schroeder paths of size ``n`` with each flat step painted one of ``m`` colors."""
    return sum(m ** p.steps.count(FLAT) for p in enumerate_small_schroeder_paths(n, max_n))
