import pytest
from hypothesis import given, strategies as st

from schroeder import reference
from schroeder.reference import (
    BFile,
    BFileError,
    FetchError,
    FetchStatusError,
    NetworkDisabledError,
    compare_sequence,
    fetch_bfile,
    fixture_bfile,
    parse_bfile,
    serialize_bfile,
)
from schroeder.sequences import sbar_d, sd_recurrence, sd_recurrence_list
from schroeder.objects import peak_parity_counts
from schroeder.triangles import narayana_row, small_schroeder_row


def test_parse_basic():
    b = parse_bfile("1 1\n2 1\n3 3\n4 11\n")
    assert b.entries == [(1, 1), (2, 1), (3, 3), (4, 11)]


def test_parse_comments_blank_crlf():
    b = parse_bfile("# A001003\r\n\r\n0 1\r\n1   1\r\n2\t3\r\n")
    assert b.entries == [(0, 1), (1, 1), (2, 3)]
    assert len(parse_bfile("# comment\n")) == 0


def test_parse_errors_carry_line_numbers():
    with pytest.raises(BFileError) as exc:
        parse_bfile("1 1\nfoo\n")
    assert exc.value.line == 2
    with pytest.raises(BFileError) as exc:
        parse_bfile("1 1\n2 3 4\n")
    assert exc.value.line == 2
    with pytest.raises(BFileError) as exc:
        parse_bfile("1 1\n3 2\n2 5\n")
    assert exc.value.line == 3
    with pytest.raises(BFileError):
        BFile("A000001", [(2, 1), (2, 1)])


def test_big_values():
    v = 3**300
    assert parse_bfile(f"10 {v}\n11 -{v}\n").entries == [(10, v), (11, -v)]


@given(st.lists(st.integers(min_value=-10**30, max_value=10**30), max_size=30), st.integers(-5, 5))
def test_serialize_parse_fixed_point(values, start):
    b = BFile("A123456", [(start + i, v) for i, v in enumerate(values)])
    again = parse_bfile(serialize_bfile(b), "A123456")
    assert again == b
    assert serialize_bfile(again) == serialize_bfile(b)


def test_compare_with_fixtures():
    s = [int(v) for v in sd_recurrence_list(1, 8)]
    rep = compare_sequence(s, fixture_bfile("A001003"), offset_shift=-1)
    assert rep.compared == 8 and rep.mismatches == [] and rep.ok
    s2 = [int(v) for v in sd_recurrence_list(2, 8)]
    assert compare_sequence(s2, fixture_bfile("A107841"), offset_shift=-1).ok


def test_compare_detects_perturbation_and_empty_overlap():
    s = [int(v) for v in sd_recurrence_list(1, 8)]
    s[4] += 1
    rep = compare_sequence(s, fixture_bfile("A001003"), offset_shift=-1)
    assert len(rep.mismatches) == 1 and rep.mismatches[0]["n"] == 5
    empty = compare_sequence(s, fixture_bfile("A001003"), offset_shift=100)
    assert empty.empty_overlap and not empty.ok
    # wrong alignment is caught rather than guessed
    assert compare_sequence(s, fixture_bfile("A001003"), offset_shift=0).mismatches


def test_embedded_tables_reproduced():
    assert [sd_recurrence(1, n) for n in range(1, 9)] == reference.SMALL_SCHROEDER
    for d, vals in reference.WEIGHTED_SMALL_SCHROEDER.items():
        assert [sd_recurrence(d, n) for n in range(1, 9)] == vals
    assert [sbar_d(1, n) for n in range(1, 9)] == reference.LARGE_SCHROEDER
    for n in range(1, 7):
        assert list(small_schroeder_row(n).entries) == reference.SMALL_SCHROEDER_TRIANGLE[n - 1]
        assert list(narayana_row(n).entries) == reference.NARAYANA_TRIANGLE[n - 1]
    for n in range(2, 11):
        assert peak_parity_counts(n) == (reference.PEAK_PARITY["even"][n - 1], reference.PEAK_PARITY["odd"][n - 1])


def test_fetch_refuses_offline(monkeypatch):
    monkeypatch.delenv(reference.NETWORK_ENV_VAR, raising=False)
    with pytest.raises(NetworkDisabledError):
        fetch_bfile("A001003")


def test_fetch_rejects_bad_id_before_io(monkeypatch):
    def boom(*a, **k):
        raise AssertionError("no I/O expected")

    monkeypatch.setattr(reference.urllib.request, "urlopen", boom)
    for bad in ("A1003", "a001003", "B001003", "A001003x"):
        with pytest.raises(ValueError):
            fetch_bfile(bad, enable_network=True)


def test_fetch_errors_are_distinct(monkeypatch):
    import urllib.error

    def http_404(url, timeout):
        raise urllib.error.HTTPError(url, 404, "Not Found", None, None)

    def unreachable(url, timeout):
        raise urllib.error.URLError("no route")

    monkeypatch.setattr(reference.urllib.request, "urlopen", http_404)
    with pytest.raises(FetchStatusError) as exc:
        fetch_bfile("A001003", enable_network=True)
    assert exc.value.status == 404
    monkeypatch.setattr(reference.urllib.request, "urlopen", unreachable)
    with pytest.raises(FetchError) as exc:
        fetch_bfile("A001003", enable_network=True)
    assert not isinstance(exc.value, FetchStatusError)


def test_fetch_success_path(monkeypatch):
    import io

    class Resp(io.BytesIO):
        status = 200

    seen = {}

    def fake(url, timeout):
        seen["url"] = url
        return Resp(b"0 1\n1 1\n2 3\n")

    monkeypatch.setenv(reference.NETWORK_ENV_VAR, "1")
    monkeypatch.setattr(reference.urllib.request, "urlopen", fake)
    text = fetch_bfile("A001003")
    assert seen["url"] == "https://oeis.org/A001003/b001003.txt"
    assert parse_bfile(text).entries == fixture_bfile("A001003").entries[:3]
