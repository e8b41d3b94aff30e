"""Tree-to-path maps and path involutions, with exhaustive verification.

``psi`` walks a Schroeder tree in preorder and writes U for a leftmost
child, D for a rightmost child and F for any middle child.  ``psi_prime``
does the same walk on the mirrored tree (root, then children right to left)
with the roles of leftmost and rightmost swapped, which is exactly
``psi(T.mirror())``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Iterator, List, Tuple

from .objects import (
    DOWN,
    FLAT,
    LEAF,
    UP,
    InvalidObjectError,
    LatticePath,
    PathClass,
    PlaneTree,
    enumerate_dyck_paths,
    enumerate_full_binary_trees,
    enumerate_large_schroeder_paths,
    enumerate_schroeder_trees,
    enumerate_small_schroeder_paths,
    path_statistics,
    path_violation,
)


@dataclass
class BijectionReport:
    name: str
    n: int
    domain_size: int = 0
    range_size: int = 0
    round_trip_failures: int = 0
    statistic_failures: int = 0

    @property
    def passed(self) -> bool:
        return self.round_trip_failures == 0 and self.statistic_failures == 0

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out


def _as_steps(path, kind: PathClass) -> str:
    if isinstance(path, LatticePath):
        if path.kind is not kind:
            raise InvalidObjectError(f"expected a {kind.value} path, got {path.kind.value}")
        return path.steps
    problem = path_violation(path, kind)
    if problem:
        raise InvalidObjectError(f"{path!r} is not a {kind.value} path: {problem}")
    return path


def _require_schroeder(tree: PlaneTree) -> None:
    if not tree.is_schroeder():
        raise InvalidObjectError("tree has an internal node with a single child")


def _preorder_labels(tree: PlaneTree, out: List[str]) -> None:
    kids = tree.children
    last = len(kids) - 1
    for i, child in enumerate(kids):
        out.append(UP if i == 0 else DOWN if i == last else FLAT)
        _preorder_labels(child, out)


def psi(tree: PlaneTree) -> LatticePath:
    _require_schroeder(tree)
    out: List[str] = []
    _preorder_labels(tree, out)
    return LatticePath("".join(out), PathClass.SMALL)


def psi_prime(tree: PlaneTree) -> LatticePath:
    _require_schroeder(tree)
    out: List[str] = []
    _preorder_labels(tree.mirror(), out)
    return LatticePath("".join(out), PathClass.SMALL)


def psi_inverse(path: LatticePath | str) -> PlaneTree:
    """Rebuild the tree in one scan with a stack of open child lists.

    A node is internal exactly when the next step is U (its leftmost
    child).  F adds a middle sibling; D adds the last sibling, and the
    frame closes once that sibling's own subtree is complete.
    """
    steps = _as_steps(path, PathClass.SMALL)
    if not steps:
        return LEAF
    # Each frame: [children, closing]; closing is set once the D child arrives.
    frames: List[list] = [[[], False]]
    i = 0
    while i < len(steps):
        s = steps[i]
        frame = frames[-1]
        if frame[1]:
            raise InvalidObjectError(f"step {i} follows a closed node")
        if (s == UP) != (not frame[0]):
            raise InvalidObjectError(f"step {s} at {i} is not a valid sibling label")
        if s == DOWN:
            frame[1] = True
        if i + 1 < len(steps) and steps[i + 1] == UP:
            frames.append([[], False])
        else:
            frame[0].append(LEAF)
            while len(frames) > 1 and frames[-1][1]:
                done = PlaneTree(tuple(frames.pop()[0]))
                frames[-1][0].append(done)
        i += 1
    if len(frames) != 1 or not frames[0][1]:
        raise InvalidObjectError("path does not close the root")
    return PlaneTree(tuple(frames[0][0]))


def psi_prime_inverse(path: LatticePath | str) -> PlaneTree:
    return psi_inverse(path).mirror()


def _q_path(n: int) -> str:
    return UP * (n - 1) + DOWN * (n - 1)


def alpha(path: LatticePath | str) -> LatticePath:
    """Swap the first valley DU with F, or the first F with DU, whichever
    occurs first.  Undefined on ``U^(n-1) D^(n-1)``, which has neither."""
    s = _as_steps(path, PathClass.SMALL)
    for i, ch in enumerate(s):
        if ch == FLAT:
            return LatticePath(s[:i] + DOWN + UP + s[i + 1:], PathClass.SMALL)
        if ch == DOWN and i + 1 < len(s) and s[i + 1] == UP:
            return LatticePath(s[:i] + FLAT + s[i + 2:], PathClass.SMALL)
    raise ValueError(f"alpha is undefined on {s!r} (no valley and no flat step)")


def _first_ground_flat(s: str) -> int:
    h = 0
    for i, ch in enumerate(s):
        if ch == FLAT and h == 0:
            return i
        h += 1 if ch == UP else -1 if ch == DOWN else 0
    return -1


def beta(path: LatticePath | str) -> LatticePath:
    """``P1 F P2 -> P1 U P2 D`` at the first flat step on the axis."""
    s = _as_steps(path, PathClass.LARGE)
    i = _first_ground_flat(s)
    if i < 0:
        raise ValueError(f"{s!r} has no flat step on the axis")
    return LatticePath(s[:i] + UP + s[i + 1:] + DOWN, PathClass.SMALL)


def beta_inverse(path: LatticePath | str) -> LatticePath:
    """Split at the last up step leaving the axis and drop the final D."""
    s = _as_steps(path, PathClass.SMALL)
    if not s:
        raise ValueError("beta_inverse needs a nonempty path (n >= 2)")
    h, last = 0, -1
    for i, ch in enumerate(s):
        if ch == UP and h == 0:
            last = i
        h += 1 if ch == UP else -1 if ch == DOWN else 0
    return LatticePath(s[:last] + FLAT + s[last + 1:-1], PathClass.LARGE)


def gamma(path: LatticePath | str) -> LatticePath:
    """``psi_prime(psi_inverse(P))`` restricted to Dyck paths."""
    s = _as_steps(path, PathClass.DYCK)
    out = psi_prime(psi_inverse(s)).steps
    return LatticePath(out, PathClass.DYCK)


# --------------------------------------------------------------------------
# Exhaustive checks
# --------------------------------------------------------------------------

def _tree_map_report(name: str, fwd: Callable, inv: Callable, n: int, max_n=None) -> BijectionReport:
    rep = BijectionReport(name, n)
    images = set()
    for t in enumerate_schroeder_trees(n, max_n):
        rep.domain_size += 1
        p = fwd(t)
        images.add(p.steps)
        if inv(p) != t:
            rep.round_trip_failures += 1
        if p.steps.count(UP) != t.internal_nodes() or p.size != n:
            rep.statistic_failures += 1
    rep.range_size = sum(1 for _ in enumerate_small_schroeder_paths(n, max_n))
    if len(images) != rep.domain_size or rep.range_size != rep.domain_size:
        rep.round_trip_failures += 1
    return rep


def check_psi(n: int, max_n=None) -> BijectionReport:
    return _tree_map_report("psi", psi, psi_inverse, n, max_n)


def check_psi_prime(n: int, max_n=None) -> BijectionReport:
    return _tree_map_report("psi-prime", psi_prime, psi_prime_inverse, n, max_n)


def check_alpha(n: int, max_n=None) -> BijectionReport:
    rep = BijectionReport("alpha", n)
    q = _q_path(n)
    domain = [p for p in enumerate_small_schroeder_paths(n, max_n) if p.steps != q]
    rep.domain_size = len(domain)
    images = set()
    for p in domain:
        a = alpha(p)
        images.add(a.steps)
        if alpha(a) != p:
            rep.round_trip_failures += 1
        if abs(a.steps.count(UP) - p.steps.count(UP)) != 1:
            rep.statistic_failures += 1
    rep.range_size = len(images)
    if rep.range_size != rep.domain_size or q in images:
        rep.round_trip_failures += 1
    return rep


def check_beta(n: int, max_n=None) -> BijectionReport:
    rep = BijectionReport("beta", n)
    images = set()
    for p in enumerate_large_schroeder_paths(n, max_n):
        if _first_ground_flat(p.steps) < 0:
            continue
        rep.domain_size += 1
        b = beta(p)
        images.add(b.steps)
        if beta_inverse(b) != p:
            rep.round_trip_failures += 1
        if b.steps.count(UP) != p.steps.count(UP) + 1 or b.size != n:
            rep.statistic_failures += 1
    rep.range_size = sum(1 for _ in enumerate_small_schroeder_paths(n, max_n))
    if len(images) != rep.range_size or rep.domain_size != rep.range_size:
        rep.round_trip_failures += 1
    return rep


def check_gamma(n: int, max_n=None) -> BijectionReport:
    rep = BijectionReport("gamma", n)
    images = set()
    for p in enumerate_dyck_paths(n, max_n):
        rep.domain_size += 1
        g = gamma(p)
        images.add(g.steps)
        sp, sg = path_statistics(p), path_statistics(g)
        if n >= 2 and not (sp.K + sg.K == n and sp.K == sg.U_V and sp.U_K == sg.V):
            rep.statistic_failures += 1
    rep.range_size = len(images)
    if rep.range_size != rep.domain_size:
        rep.round_trip_failures += 1
    return rep


def lemma_statistics_check(n: int, max_n=None) -> BijectionReport:
    """Over every full binary tree with ``n`` leaves, check

    ``K(psi T) + K(psi' T) = n``, ``K(psi T) = U_V(psi' T)`` and
    ``U_K(psi T) = V(psi' T)``.
    """
    if n < 2:
        raise ValueError("the statistics lemma needs n >= 2")
    rep = BijectionReport("lemma", n)
    images = set()
    for t in enumerate_full_binary_trees(n, max_n):
        rep.domain_size += 1
        a, b = psi(t), psi_prime(t)
        images.add(a.steps)
        sa, sb = path_statistics(a), path_statistics(b)
        if not (sa.K + sb.K == n and sa.K == sb.U_V and sa.U_K == sb.V):
            rep.statistic_failures += 1
        if a.steps.count(FLAT) or b.steps.count(FLAT):
            rep.statistic_failures += 1
    rep.range_size = len(images)
    return rep


CHECKS = {
    "psi": check_psi,
    "psi-prime": check_psi_prime,
    "alpha": check_alpha,
    "beta": check_beta,
    "gamma": check_gamma,
    "lemma": lemma_statistics_check,
}


def mapping_pairs(name: str, n: int, max_n=None) -> Iterator[Tuple[str, str]]:
    """``(input, output)`` canonical encodings for every element of the domain."""
    if name == "psi":
        for t in enumerate_schroeder_trees(n, max_n):
            yield t.encode(), psi(t).steps
    elif name == "psi-prime":
        for t in enumerate_schroeder_trees(n, max_n):
            yield t.encode(), psi_prime(t).steps
    elif name == "alpha":
        q = _q_path(n)
        for p in enumerate_small_schroeder_paths(n, max_n):
            if p.steps != q:
                yield p.steps, alpha(p).steps
    elif name == "beta":
        for p in enumerate_large_schroeder_paths(n, max_n):
            if _first_ground_flat(p.steps) >= 0:
                yield p.steps, beta(p).steps
    elif name == "gamma":
        for p in enumerate_dyck_paths(n, max_n):
            yield p.steps, gamma(p).steps
    elif name == "lemma":
        for t in enumerate_full_binary_trees(n, max_n):
            yield psi(t).steps, psi_prime(t).steps
    else:
        raise ValueError(f"unknown bijection {name!r}")


def stratum_counts(paths: Iterable[LatticePath]) -> dict:
    """Up-step count -> number of paths."""
    out: dict = {}
    for p in paths:
        k = p.steps.count(UP)
        out[k] = out.get(k, 0) + 1
    return out
