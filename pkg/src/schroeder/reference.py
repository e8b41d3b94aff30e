"""OEIS b-file parsing, embedded table fixtures, and sequence cross-checks.

Everything here works offline.  :func:`fetch_bfile` is the only function
that touches the network, and it refuses unless explicitly enabled.
"""
from __future__ import annotations

import os
import re
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

NETWORK_ENV_VAR = "SCHROEDER_ENABLE_NETWORK"
_SEQ_ID_RE = re.compile(r"^A\d{6}$")

# Tables as printed, indexed from n = 1.
SMALL_SCHROEDER = [1, 1, 3, 11, 45, 197, 903, 4279]
WEIGHTED_SMALL_SCHROEDER = {
    2: [1, 2, 10, 62, 430, 3194, 24850, 199910],
    3: [1, 3, 21, 183, 1785, 18651, 204141, 2310447],
    4: [1, 4, 36, 404, 5076, 68324, 963396, 14046964],
}
LARGE_SCHROEDER = [1, 2, 6, 22, 90, 394, 1806, 8558]
SMALL_SCHROEDER_TRIANGLE = [
    [1],
    [0, 1],
    [0, 1, 2],
    [0, 1, 5, 5],
    [0, 1, 9, 21, 14],
    [0, 1, 14, 56, 84, 42],
]
NARAYANA_TRIANGLE = [
    [1],
    [0, 1],
    [0, 1, 1],
    [0, 1, 3, 1],
    [0, 1, 6, 6, 1],
    [0, 1, 10, 20, 10, 1],
]
# (even, odd) peak counts over D_n, n = 1..10.  The printed n = 1 column
# reads (0, 1); the empty path has no peaks, so the computed value is (1, 0).
PEAK_PARITY = {
    "even": [0, 0, 1, 3, 7, 20, 66, 217, 715, 2424],
    "odd": [1, 1, 1, 2, 7, 22, 66, 212, 715, 2438],
}

# b-file fixtures built from the tables above.  Each entry is
# (first OEIS index, values); the first value is the table's n = 1 term.
BFILE_FIXTURES: Dict[str, Tuple[int, List[int]]] = {
    "A001003": (0, SMALL_SCHROEDER),
    "A107841": (0, WEIGHTED_SMALL_SCHROEDER[2]),
    "A131763": (0, WEIGHTED_SMALL_SCHROEDER[3]),
    "A131765": (0, WEIGHTED_SMALL_SCHROEDER[4]),
    "A006318": (0, LARGE_SCHROEDER),
}


class BFileError(ValueError):
    """Malformed b-file text."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NetworkDisabledError(RuntimeError):
    pass


class FetchError(RuntimeError):
    """Transport-level failure while fetching a b-file."""


class FetchStatusError(FetchError):
    def __init__(self, status: int, url: str):
        self.status = status
        super().__init__(f"HTTP {status} for {url}")


@dataclass
class BFile:
    sequence_id: str = ""
    entries: List[Tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        for (a, _), (b, _) in zip(self.entries, self.entries[1:]):
            if b <= a:
                raise BFileError(f"indices not strictly increasing ({a} then {b})")

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def parse_bfile(text: str, sequence_id: str = "") -> BFile:
    entries: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"expected 'index value', got {raw!r}", lineno)
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"non-integer field in {raw!r}", lineno) from None
        if entries and idx <= entries[-1][0]:
            raise BFileError(f"index {idx} does not increase", lineno)
        entries.append((idx, val))
    return BFile(sequence_id, entries)


def serialize_bfile(bfile: BFile) -> str:
    head = f"# {bfile.sequence_id}\n" if bfile.sequence_id else ""
    return head + "".join(f"{i} {v}\n" for i, v in bfile.entries)


def fixture_bfile(sequence_id: str) -> BFile:
    first, values = BFILE_FIXTURES[sequence_id]
    return BFile(sequence_id, [(first + i, v) for i, v in enumerate(values)])


@dataclass
class ComparisonReport:
    sequence_id: str
    offset_shift: int
    compared: int = 0
    mismatches: List[dict] = field(default_factory=list)

    @property
    def empty_overlap(self) -> bool:
        return self.compared == 0

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.empty_overlap

    def to_dict(self) -> dict:
        return {
            "sequence_id": self.sequence_id,
            "offset_shift": self.offset_shift,
            "compared": self.compared,
            "empty_overlap": self.empty_overlap,
            "mismatches": self.mismatches,
            "ok": self.ok,
        }


def compare_sequence(values: Dict[int, int] | Sequence[int], bfile: BFile,
                     offset_shift: int, first_n: int = 1) -> ComparisonReport:
    """Compare ``values[n]`` with the b-file entry at index ``n + offset_shift``.

    ``values`` is either a mapping ``n -> value`` or a list whose first
    element is the term for ``n = first_n``.
    """
    if not isinstance(values, dict):
        values = {first_n + i: v for i, v in enumerate(values)}
    ref = bfile.as_dict()
    rep = ComparisonReport(bfile.sequence_id, offset_shift)
    for n in sorted(values):
        idx = n + offset_shift
        if idx not in ref:
            continue
        rep.compared += 1
        if values[n] != ref[idx]:
            rep.mismatches.append({"n": n, "index": idx, "computed": str(values[n]),
                                   "reference": str(ref[idx])})
    return rep


def network_enabled(flag: bool = False) -> bool:
    return flag or os.environ.get(NETWORK_ENV_VAR, "") not in ("", "0")


def bfile_url(sequence_id: str) -> str:
    return f"https://oeis.org/{sequence_id}/b{sequence_id[1:]}.txt"


def fetch_bfile(sequence_id: str, enable_network: bool = False, timeout: float = 30.0) -> str:
    if not _SEQ_ID_RE.match(sequence_id):
        raise ValueError(f"invalid OEIS id {sequence_id!r}; expected e.g. 'A001003'")
    if not network_enabled(enable_network):
        raise NetworkDisabledError(
            f"network access is disabled; pass --enable-network or set {NETWORK_ENV_VAR}=1"
        )
    url = bfile_url(sequence_id)
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            status = getattr(resp, "status", 200)
            if status != 200:
                raise FetchStatusError(status, url)
            return resp.read().decode("ascii")
    except urllib.error.HTTPError as exc:
        raise FetchStatusError(exc.code, url) from exc
    except (urllib.error.URLError, OSError) as exc:
        raise FetchError(f"could not fetch {url}: {exc}") from exc
