from collections import Counter

import pytest
from hypothesis import given, settings

from schroeder.bijections import (
    alpha,
    beta,
    beta_inverse,
    check_alpha,
    check_beta,
    check_gamma,
    check_psi,
    check_psi_prime,
    gamma,
    lemma_statistics_check,
    mapping_pairs,
    psi,
    psi_inverse,
    psi_prime,
    psi_prime_inverse,
    stratum_counts,
)
from schroeder.objects import (
    LEAF,
    InvalidObjectError,
    LatticePath,
    PathClass,
    PlaneTree,
    enumerate_dyck_paths,
    enumerate_large_schroeder_paths,
    enumerate_schroeder_trees,
    enumerate_small_schroeder_paths,
    parse_tree,
    path_statistics,
)
from schroeder.triangles import small_schroeder_entry

from strategies import schroeder_trees

# root -> [A, leaf]; A -> [leaf, B, leaf]; B -> [leaf, leaf]
FIG_TREE = PlaneTree((PlaneTree((LEAF, PlaneTree((LEAF, LEAF)), LEAF)), LEAF))
T2 = PlaneTree((LEAF, LEAF))


def large(s):
    return LatticePath(s, PathClass.LARGE)


def test_psi_examples():
    assert psi(FIG_TREE).steps == "UUFUDDD"
    assert psi(LEAF).steps == ""
    assert psi(T2).steps == "UD"


def test_psi_prime_examples():
    assert psi_prime(FIG_TREE).steps == "UDUFUDD"
    assert psi_prime(LEAF).steps == ""
    assert psi_prime(T2).steps == "UD"


def test_inverses_examples():
    assert psi_inverse("UUFUDDD") == FIG_TREE
    assert psi_inverse(LatticePath("")) == LEAF
    assert psi_prime_inverse("UDUFUDD") == FIG_TREE
    assert psi_prime_inverse("UD") == T2


def test_malformed_inputs_rejected():
    with pytest.raises(InvalidObjectError):
        psi(PlaneTree((LEAF,)))
    with pytest.raises(InvalidObjectError):
        psi_inverse("FUD")
    with pytest.raises(InvalidObjectError):
        psi_inverse(large("UDF"))
    with pytest.raises(InvalidObjectError):
        gamma("UFD")


def test_psi_round_trip_exhaustive():
    for n in range(1, 8):
        for t in enumerate_schroeder_trees(n):
            p, q = psi(t), psi_prime(t)
            assert psi_inverse(p) == t
            assert psi_prime_inverse(q) == t
            assert p.steps.count("U") == q.steps.count("U") == t.internal_nodes()
        for p in enumerate_small_schroeder_paths(n):
            assert psi(psi_inverse(p)) == p
            assert psi_prime(psi_prime_inverse(p)) == p


@settings(max_examples=200, deadline=None)
@given(schroeder_trees())
def test_psi_round_trip_random(tree):
    p = psi(tree)
    assert p.size == tree.leaves()
    assert psi_inverse(p) == tree
    assert psi_prime_inverse(psi_prime(tree)) == tree


def test_psi_bijects_strata():
    for n in range(1, 8):
        for fn in (psi, psi_prime):
            by_k = Counter(fn(t).steps.count("U") for t in enumerate_schroeder_trees(n))
            assert all(by_k[k] == small_schroeder_entry(n, k) for k in range(n))
        assert check_psi(n).passed and check_psi_prime(n).passed


@pytest.mark.parametrize("src,dst", [("UUDUDD", "UUFDD"), ("UFFD", "UDUFD"), ("UUFDD", "UUDUDD")])
def test_alpha_examples(src, dst):
    assert alpha(src).steps == dst


def test_alpha_undefined_on_q():
    for n in (1, 2, 5):
        with pytest.raises(ValueError):
            alpha("U" * (n - 1) + "D" * (n - 1))


def test_alpha_involution():
    for n in range(2, 9):
        rep = check_alpha(n)
        assert rep.passed, rep
        assert rep.domain_size == sum(small_schroeder_entry(n, k) for k in range(n)) - 1
        for p in enumerate_small_schroeder_paths(n):
            if p.steps == "U" * (n - 1) + "D" * (n - 1):
                continue
            a = alpha(p)
            assert alpha(a) == p
            assert (a.steps.count("U") - p.steps.count("U")) in (1, -1)


def test_beta_examples():
    assert beta(large("FUUDD")).steps == "UUUDDD"
    assert beta(large("UDF")).steps == "UDUD"
    assert beta_inverse("UUUDDD") == large("FUUDD")
    assert beta_inverse("UD") == large("F")
    domain = [p for p in enumerate_large_schroeder_paths(4)
              if not _is_small(p.steps)]
    assert len(domain) == 11
    assert {beta(p).steps for p in domain} == {p.steps for p in enumerate_small_schroeder_paths(4)}


def _is_small(s):
    try:
        LatticePath(s, PathClass.SMALL)
    except InvalidObjectError:
        return False
    return True


def test_beta_errors():
    with pytest.raises(ValueError):
        beta(large("UFD"))
    with pytest.raises(ValueError):
        beta_inverse("")


def test_beta_bijection_and_strata():
    for n in range(2, 9):
        rep = check_beta(n)
        assert rep.passed, rep
        for q in enumerate_small_schroeder_paths(n):
            assert beta(beta_inverse(q)) == q
        lifted = stratum_counts(enumerate_large_schroeder_paths(n))
        for k in range(n):
            assert lifted.get(k, 0) == small_schroeder_entry(n, k) + small_schroeder_entry(n, k + 1)


def test_gamma_examples():
    dyck = lambda s: LatticePath(s, PathClass.DYCK)
    assert gamma(dyck("UUDD")).steps == "UDUD"
    assert psi_inverse("UUDD") == parse_tree("((()())())")
    assert gamma(dyck("UD")).steps == "UD"


def test_gamma_permutes_and_transports():
    for n in range(1, 9):
        rep = check_gamma(n)
        assert rep.passed, rep
    for p in enumerate_dyck_paths(7):
        g = gamma(p)
        assert path_statistics(p).K + path_statistics(g).K == 7


@pytest.mark.parametrize("n,count", [(2, 1), (4, 5), (8, 429)])
def test_lemma(n, count):
    rep = lemma_statistics_check(n)
    assert rep.domain_size == count
    assert rep.statistic_failures == 0
    assert rep.passed


def test_lemma_base_case():
    assert path_statistics(psi(T2)).K + path_statistics(psi_prime(T2)).K == 2
    with pytest.raises(ValueError):
        lemma_statistics_check(1)


def test_mapping_pairs():
    pairs = list(mapping_pairs("alpha", 3))
    assert ("UUDD", "UFD") not in pairs  # Q is excluded
    assert ("UDUD", "UFD") in pairs and ("UFD", "UDUD") in pairs
    assert len(list(mapping_pairs("psi", 4))) == 11
    with pytest.raises(ValueError):
        list(mapping_pairs("delta", 3))
