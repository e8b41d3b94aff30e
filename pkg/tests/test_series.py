from fractions import Fraction as F

import pytest

from schroeder.sequences import s_minus_half, sd_recurrence_list
from schroeder.series import (
    SeriesKind,
    SeriesPrefix,
    catalan_gf_relation_check,
    catalan_gf_relation_holds,
    narayana_series,
    residual,
    sd_series,
)
from schroeder.triangles import narayana_row

GRID = [F(x) for x in ("-3", "-2", "-3/2", "-1", "-1/2", "0", "1/3", "1", "2", "3", "7/2")]


def test_sd_series_examples():
    assert list(sd_series(2, 5).coefficients) == [0, 1, 2, 10, 62, 430]
    assert list(sd_series(F(5, 3), 1).coefficients) == [0, 1]
    assert list(sd_series(-1, 6).coefficients) == [0, 1, -1, 1, -1, 1, -1]


def test_narayana_series_examples():
    assert list(narayana_series(1, 6).coefficients) == [0, 1, 1, 2, 5, 14, 42]
    for d in GRID:
        assert narayana_series(d, 2)[2] == d
    assert list(narayana_series(-1, 8).coefficients) == [0, 1, -1, 0, 1, 0, -2, 0, 5]


def test_prefix_invariants():
    for d in GRID:
        for prefix in (sd_series(d, 10), narayana_series(d, 10)):
            assert prefix[0] == 0 and prefix[1] == 1
            assert prefix.order == 10


def test_series_equals_recurrence():
    for d in GRID:
        assert list(sd_series(d, 40).coefficients[1:]) == sd_recurrence_list(d, 40)


def test_narayana_series_equals_weighted_rows():
    for d in GRID:
        c = narayana_series(d, 20)
        for n in range(1, 21):
            row = narayana_row(n).entries
            assert c[n] == sum((v * d**k for k, v in enumerate(row)), F(0))


def test_residual_vanishes():
    for d in GRID:
        assert not any(residual(sd_series(d, 25)))
        assert not any(residual(narayana_series(d, 25)))


def test_residual_detects_corruption():
    good = sd_series(2, 6)
    bad = SeriesPrefix(good.coefficients[:4] + (good[4] + 1,) + good.coefficients[5:], good.weight_d,
                       SeriesKind.SCHROEDER_Y)
    assert any(residual(bad))


def test_catalan_relation():
    assert catalan_gf_relation_check(12)
    assert catalan_gf_relation_check(2)
    with pytest.raises(ValueError):
        catalan_gf_relation_check(1)


def test_catalan_relation_mutation():
    coeffs = list(narayana_series(-1, 12).coefficients)
    for i in range(1, len(coeffs)):
        mutated = coeffs.copy()
        mutated[i] += 1
        assert not catalan_gf_relation_holds(mutated)


def test_minus_half_chain():
    c = narayana_series(-1, 20)
    for n in range(1, 21):
        assert 2 ** (n - 1) * s_minus_half(n) == c[n]
