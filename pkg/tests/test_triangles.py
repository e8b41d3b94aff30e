import pytest

from schroeder.triangles import (
    TriangleRow,
    catalan,
    catalan_list,
    catalan_recurrence,
    large_schroeder_entry,
    large_schroeder_row,
    narayana_entry,
    narayana_row,
    small_schroeder_entry,
    small_schroeder_row,
)

SMALL_ROWS = {
    1: [1],
    2: [0, 1],
    3: [0, 1, 2],
    4: [0, 1, 5, 5],
    5: [0, 1, 9, 21, 14],
    6: [0, 1, 14, 56, 84, 42],
}
NARAYANA_ROWS = {
    1: [1],
    2: [0, 1],
    3: [0, 1, 1],
    4: [0, 1, 3, 1],
    5: [0, 1, 6, 6, 1],
    6: [0, 1, 10, 20, 10, 1],
}
# s(n), n = 1..12, extends the printed table with values from the recurrence
# n s(n) = 3(2n-3) s(n-1) - (n-3) s(n-2).
S_N = [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859, 2646723]


@pytest.mark.parametrize("n,k,expected", [(5, 3, 21), (1, 0, 1), (4, 0, 0), (6, 5, 42), (4, 4, 0), (3, -1, 0), (1, 1, 0)])
def test_small_entry(n, k, expected):
    assert small_schroeder_entry(n, k) == expected


@pytest.mark.parametrize("n,k,expected", [(6, 3, 20), (4, 2, 3), (1, 0, 1), (1, 2, 0), (5, 5, 0)])
def test_narayana_entry(n, k, expected):
    assert narayana_entry(n, k) == expected


def test_printed_rows():
    for n, row in SMALL_ROWS.items():
        assert list(small_schroeder_row(n).entries) == row
    for n, row in NARAYANA_ROWS.items():
        assert list(narayana_row(n).entries) == row


def test_large_entries():
    assert large_schroeder_entry(2, 0) == 1
    assert large_schroeder_row(4).total == 22
    assert large_schroeder_row(6).total == 394
    assert large_schroeder_entry(4, 4) == 0
    assert large_schroeder_row(1).entries == (1,)
    with pytest.raises(ValueError):
        large_schroeder_entry(1, 0)


def test_row_invariants():
    for n in range(2, 13):
        for row in (small_schroeder_row(n), narayana_row(n)):
            assert len(row.entries) == n
            assert row.entries[0] == 0
        # sbar(n, 0) = s(n, 0) + s(n, 1) = 1
        assert large_schroeder_row(n).entries[0] == 1
    with pytest.raises(ValueError):
        TriangleRow(3, (0, 1))


def test_row_sums_and_catalan_diagonal():
    for n in range(1, 13):
        assert small_schroeder_row(n).total == S_N[n - 1]
        assert small_schroeder_entry(n, n - 1) == catalan(n)
        assert narayana_row(n).total == catalan(n)
    for n in range(2, 13):
        assert large_schroeder_row(n).total == 2 * S_N[n - 1]


def test_catalan_values():
    assert catalan(5) == 14
    assert catalan(1) == 1
    # C(22, 11) / 12 = 705432 / 12
    assert catalan(12) == 58786


def test_catalan_two_routes_agree():
    closed = [catalan(n) for n in range(1, 201)]
    assert closed == [catalan_recurrence(n) for n in range(1, 201)]
    assert closed == catalan_list(200)


def test_bad_n():
    for fn in (small_schroeder_entry, narayana_entry):
        with pytest.raises(ValueError):
            fn(0, 0)
    with pytest.raises(ValueError):
        catalan(0)
