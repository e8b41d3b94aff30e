"""Verification suites: every identity checked by two independent routes.

Each suite returns a list of :class:`Check` records.  Brute-force checks
(anything that enumerates paths or trees) are capped at
``BRUTE_FORCE_CAP`` regardless of ``n_max``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from . import asymptotics, bijections, objects, reference, series, sequences, triangles
from .numeric import format_rational

DEFAULT_D_GRID = [Fraction(x) for x in ("-3", "-2", "-3/2", "-1", "-1/2", "0", "1/3", "1", "2", "3", "7/2")]
REFLECTION_D_GRID = [Fraction(x) for x in ("-3", "-2", "-1/2", "1/3", "1", "2")]
AB_GRID = [Fraction(x) for x in ("-2", "-1", "0", "1/2", "1", "3")]
COLOR_GRID = [(1, 1, 1), (1, 2, 1), (2, 2, 1), (3, 1, 1), (2, 2, 2)]
BRUTE_FORCE_CAP = 8
COLOR_ORACLE_CAP = 5
ASYMPTOTIC_DS = [Fraction(1, 2), Fraction(1), Fraction(2)]

SUITES = ("identities", "bijections", "colored", "series", "triangles", "parity", "asymptotics")


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    counterexample: Optional[str] = None

    def to_dict(self) -> dict:
        out = {"suite": self.suite, "name": self.name, "passed": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _first_failure(cases: Iterable, predicate: Callable) -> Optional[str]:
    for case in cases:
        ok, detail = predicate(case)
        if not ok:
            return detail
    return None


def _check(suite: str, name: str, cases: Iterable, predicate: Callable) -> Check:
    bad = _first_failure(cases, predicate)
    return Check(suite, name, bad is None, bad)


def _fmt(q) -> str:
    return format_rational(q) if isinstance(q, Fraction) else str(q)


def _eq(label: str, left, right):
    return left == right, f"{label}: {_fmt(left)} != {_fmt(right)}"


# --------------------------------------------------------------------------

def suite_triangles(n_max: int, d_grid=None) -> List[Check]:
    S = "triangles"
    n_top = max(n_max, 12)
    s_vals = sequences.sd_recurrence_list(1, n_top)
    cat = triangles.catalan_list(n_top)
    return [
        _check(S, "s(n,k) rows match printed triangle", range(1, 7),
               lambda n: _eq(f"n={n}", list(triangles.small_schroeder_row(n).entries),
                             reference.SMALL_SCHROEDER_TRIANGLE[n - 1])),
        _check(S, "c(n,k) rows match printed triangle", range(1, 7),
               lambda n: _eq(f"n={n}", list(triangles.narayana_row(n).entries),
                             reference.NARAYANA_TRIANGLE[n - 1])),
        _check(S, "row sums of s(n,k) equal s(n)", range(1, n_top + 1),
               lambda n: _eq(f"n={n}", triangles.small_schroeder_row(n).total, s_vals[n - 1])),
        _check(S, "s(n,n-1) = c(n)", range(1, n_top + 1),
               lambda n: _eq(f"n={n}", triangles.small_schroeder_entry(n, n - 1), cat[n - 1])),
        _check(S, "row sums of c(n,k) equal c(n)", range(1, n_top + 1),
               lambda n: _eq(f"n={n}", triangles.narayana_row(n).total, cat[n - 1])),
        _check(S, "large row sum = 2 * small row sum", range(2, n_top + 1),
               lambda n: _eq(f"n={n}", triangles.large_schroeder_row(n).total,
                             2 * triangles.small_schroeder_row(n).total)),
        _check(S, "Catalan closed form = recurrence", range(1, 201),
               lambda n: _eq(f"n={n}", triangles.catalan(n), triangles.catalan_recurrence(n))),
    ]


def suite_series(n_max: int, d_grid=None) -> List[Check]:
    S = "series"
    grid = d_grid or DEFAULT_D_GRID
    out = []

    def three_way(d):
        rec = sequences.sd_recurrence_list(d, n_max)
        ser = series.sd_series(d, n_max).coefficients[1:]
        for n in range(1, n_max + 1):
            defn = sequences.sd_definition(d, n)
            if not (defn == rec[n - 1] == ser[n - 1]):
                return False, (f"d={_fmt(d)} n={n}: definition {_fmt(defn)}, "
                               f"recurrence {_fmt(rec[n - 1])}, series {_fmt(ser[n - 1])}")
        return True, None

    out.append(_check(S, "definition = recurrence = series", grid, three_way))

    def narayana(d):
        coeffs = series.narayana_series(d, min(n_max, 20)).coefficients
        for n in range(1, len(coeffs)):
            direct = sum((c * d**k for k, c in enumerate(triangles.narayana_row(n).entries)), Fraction(0))
            if coeffs[n] != direct:
                return False, f"d={_fmt(d)} n={n}: {_fmt(coeffs[n])} != {_fmt(direct)}"
        return True, None

    out.append(_check(S, "Narayana series = weighted row sums", grid, narayana))

    def residual(d):
        for prefix in (series.sd_series(d, n_max), series.narayana_series(d, n_max)):
            r = series.residual(prefix)
            if any(r):
                return False, f"d={_fmt(d)} {prefix.kind.value}: nonzero residual"
        return True, None

    out.append(_check(S, "functional equations annihilate prefixes", grid, residual))
    out.append(Check(S, "C_1(-x^2) = C_{-1}(x) - x", series.catalan_gf_relation_check(max(n_max, 2))))

    m = min(n_max, 20)
    c_minus = series.narayana_series(-1, m).coefficients
    out.append(_check(S, "2^(n-1) s_{-1/2}(n) = [x^n] C_{-1}", range(1, m + 1),
                      lambda n: _eq(f"n={n}", 2 ** (n - 1) * sequences.s_minus_half(n), c_minus[n])))
    return out


def suite_identities(n_max: int, d_grid=None) -> List[Check]:
    S = "identities"
    grid = d_grid or DEFAULT_D_GRID
    bf = min(n_max, BRUTE_FORCE_CAP)
    out = []
    out.append(_check(S, "recurrence = defining sum", [(d, n) for d in grid for n in range(1, n_max + 1)],
                      lambda dn: _eq(f"d={_fmt(dn[0])} n={dn[1]}", sequences.sd_recurrence(*dn),
                                     sequences.sd_definition(*dn))))
    half = sequences.sd_recurrence_list(Fraction(-1, 2), max(n_max, 16))
    out.append(_check(S, "s_{-1/2} closed form = recurrence", range(1, max(n_max, 16) + 1),
                      lambda n: _eq(f"n={n}", sequences.s_minus_half(n), half[n - 1])))
    out.append(_check(S, "s_{-1}(n) = (-1)^(n-1)", range(1, n_max + 1),
                      lambda n: _eq(f"n={n}", sequences.sd_recurrence(-1, n), (-1) ** (n - 1))))

    def parity(n):
        odd, even = sequences.parity_split(n)
        return odd == even + (-1) ** n, f"n={n}: odd {odd}, even {even}"

    out.append(_check(S, "odd-k sum = even-k sum + (-1)^n", range(1, max(n_max, 12) + 1), parity))
    s1 = sequences.sd_recurrence_list(1, max(n_max, 40))
    out.append(_check(S, "s(n) is odd", range(1, len(s1) + 1),
                      lambda n: (s1[n - 1].numerator % 2 == 1, f"n={n}: s(n) = {s1[n - 1]}")))
    out.append(_check(S, "s_d(n) odd for odd d", [(d, n) for d in (1, 3, 5) for n in range(1, 21)],
                      lambda dn: (sequences.sd_recurrence(*dn).numerator % 2 == 1, f"d={dn[0]} n={dn[1]}")))
    out.append(_check(S, "large Schroeder number = 2 mod 4", range(2, len(s1) + 1),
                      lambda n: ((2 * s1[n - 1]) % 4 == 2, f"n={n}")))
    refl = [(d, n) for d in REFLECTION_D_GRID for n in range(2, n_max + 1)]
    out.append(_check(S, "reflection s_d = (-1)^(n-1) d/(d+1) s_{-d-1}", refl,
                      lambda dn: _eq(f"d={_fmt(dn[0])} n={dn[1]}", sequences.sd_reflection(*dn),
                                     sequences.sd_recurrence(*dn))))
    sbar_cases = [(d, n) for d in REFLECTION_D_GRID if d not in (0, -1) for n in range(2, n_max + 1)]
    out.append(_check(S, "sbar_d(n) = (-1)^(n-1) s_{-d-1}(n)", sbar_cases,
                      lambda dn: _eq(f"d={_fmt(dn[0])} n={dn[1]}", sequences.sbar_d(*dn),
                                     (-1) ** (dn[1] - 1) * sequences.sd_recurrence(-dn[0] - 1, dn[1]))))
    out.append(_check(S, "sbar_d(n) = sum sbar(n,k) d^k", [(d, n) for d in grid for n in range(1, min(n_max, 20) + 1)],
                      lambda dn: _eq(f"d={_fmt(dn[0])} n={dn[1]}", sequences.sbar_d(*dn),
                                     sequences.sbar_definition(*dn))))

    # brute force over D_n and P_n
    out.append(_check(S, "s_d(n) = c^V_{d,d+1}(n)", [(d, n) for d in grid for n in range(1, bf + 1)],
                      lambda dn: _eq(f"d={_fmt(dn[0])} n={dn[1]}",
                                     objects.weighted_catalan_V(dn[0], dn[0] + 1, dn[1]),
                                     sequences.sd_recurrence(*dn))))
    ab = [(a, b) for a in AB_GRID for b in AB_GRID]
    out.append(_check(S, "c^V_{a,b}(n) = (b-a)^(n-1) s_{a/(b-a)}(n)",
                      [(a, b, n) for a, b in ab if a != b for n in range(1, bf + 1)],
                      lambda t: _eq(f"a={_fmt(t[0])} b={_fmt(t[1])} n={t[2]}",
                                    objects.weighted_catalan_V(*t),
                                    (t[1] - t[0]) ** (t[2] - 1) * sequences.sd_recurrence(t[0] / (t[1] - t[0]), t[2]))))

    def flat_colors(mn):
        m, n = mn
        target = m ** (n - 1) * sequences.sd_recurrence(Fraction(1, m), n)
        a = objects.flat_colored_count(m, n)
        b = objects.weighted_catalan_V(1, m + 1, n)
        return a == target == b, f"m={m} n={n}: flats {a}, valleys {_fmt(b)}, formula {_fmt(target)}"

    out.append(_check(S, "m-colored flats = (m+1)-colored valleys = m^(n-1) s_{1/m}(n)",
                      [(m, n) for m in (1, 2, 3) for n in range(1, min(bf, 7) + 1)], flat_colors))
    out.append(_check(S, "c^V_{a,b}(n) = c^K_{a,b}(n)", [(a, b, n) for a, b in ab for n in range(1, bf + 1)],
                      lambda t: _eq(f"a={_fmt(t[0])} b={_fmt(t[1])} n={t[2]}",
                                    objects.weighted_catalan_V(*t), objects.weighted_catalan_K(*t))))
    return out


def suite_bijections(n_max: int, d_grid=None) -> List[Check]:
    S = "bijections"
    top = min(n_max, BRUTE_FORCE_CAP)
    out = []
    for name, fn in bijections.CHECKS.items():
        lo = 2 if name in ("beta", "lemma", "alpha") else 1
        hi = min(top, 7) if name in ("psi", "psi-prime") else top

        def run(n, fn=fn):
            rep = fn(n)
            return rep.passed, f"n={n}: {rep.to_dict()}"

        out.append(_check(S, name, range(lo, hi + 1), run))

    def strata(n):
        by_k = bijections.stratum_counts(objects.enumerate_large_schroeder_paths(n))
        expect = {k: triangles.large_schroeder_entry(n, k) for k in range(n)}
        got = {k: by_k.get(k, 0) for k in range(n)}
        return got == expect, f"n={n}: {got} != {expect}"

    out.append(_check(S, "large paths by up steps = s(n,k) + s(n,k+1)", range(2, top + 1), strata))
    return out


def suite_colored(n_max: int, d_grid=None) -> List[Check]:
    S = "colored"
    top = min(n_max, BRUTE_FORCE_CAP)
    oracle_top = min(n_max, COLOR_ORACLE_CAP)
    out = [
        _check(S, "statistics formula = explicit coloring",
               [(k, l, p, n) for k, l, p in COLOR_GRID for n in range(1, oracle_top + 1)],
               lambda t: _eq(f"(k,l,p,n)={t}", objects.colored_dyck_count(*t),
                             objects.colored_dyck_count_bruteforce(*t))),
        _check(S, "count = p^(n-1) s_{(kl-p)/p}(n)",
               [(k, l, p, n) for k, l, p in COLOR_GRID for n in range(1, top + 1)],
               lambda t: _eq(f"(k,l,p,n)={t}", objects.colored_dyck_count(*t),
                             t[2] ** (t[3] - 1) * sequences.sd_recurrence(Fraction(t[0] * t[1] - t[2], t[2]), t[3]))),
        _check(S, "count = c^K_{kl-p,kl}(n)",
               [(k, l, p, n) for k, l, p in COLOR_GRID for n in range(1, top + 1)],
               lambda t: _eq(f"(k,l,p,n)={t}", objects.colored_dyck_count(*t),
                             objects.weighted_catalan_K(t[0] * t[1] - t[2], t[0] * t[1], t[3]))),
        _check(S, "one up, two downs, avoid UD_1: s(n)", range(1, top + 1),
               lambda n: _eq(f"n={n}", objects.colored_dyck_count(1, 2, 1, n), sequences.sd_recurrence(1, n))),
        _check(S, "three ups, one down, avoid U_1D: s_2(n)", range(1, top + 1),
               lambda n: _eq(f"n={n}", objects.colored_dyck_count(3, 1, 1, n), sequences.sd_recurrence(2, n))),
        _check(S, "two ups, two downs, avoid U_1D_1: s_3(n)", range(1, top + 1),
               lambda n: _eq(f"n={n}", objects.colored_dyck_count(2, 2, 1, n), sequences.sd_recurrence(3, n))),
    ]
    return out


def suite_parity(n_max: int, d_grid=None) -> List[Check]:
    S = "parity"
    top = min(n_max, 10)

    def table(n):
        got = objects.peak_parity_counts(n)
        want = (reference.PEAK_PARITY["even"][n - 1], reference.PEAK_PARITY["odd"][n - 1])
        return got == want, f"n={n}: {got} != {want}"

    def signed(n):
        even, odd = objects.peak_parity_counts(n)
        return _eq(f"n={n}", even - odd, 2 ** (n - 1) * sequences.s_minus_half(n))

    return [
        _check(S, "peak parity counts match printed table (n >= 2)", range(2, top + 1), table),
        Check(S, "n = 1: empty path has zero peaks", objects.peak_parity_counts(1) == (1, 0),
              None if objects.peak_parity_counts(1) == (1, 0) else str(objects.peak_parity_counts(1))),
        _check(S, "even - odd = 2^(n-1) s_{-1/2}(n)", range(1, min(max(n_max, 2), 12) + 1), signed),
    ]


def suite_asymptotics(n_max: int, d_grid=None) -> List[Check]:
    S = "asymptotics"
    out = []
    for d in ASYMPTOTIC_DS:
        e100 = asymptotics.relative_error(d, 100)
        e400 = asymptotics.relative_error(d, 400)
        out.append(Check(S, f"d={_fmt(d)}: relative error < 2% at n=100", e100 < 0.02, f"{e100:.3e}"))
        out.append(Check(S, f"d={_fmt(d)}: error shrinks from n=100 to n=400", e400 < e100,
                         f"{e100:.3e} -> {e400:.3e}"))
        rho = asymptotics.growth_rate(float(d))
        r500 = abs(asymptotics.empirical_growth_rate(d, 500) - rho)
        r1000 = abs(asymptotics.empirical_growth_rate(d, 1000) - rho)
        # the ratio approaches rho like rho * (1 - 3/(2n)); allow 2 rho / n
        out.append(Check(S, f"d={_fmt(d)}: ratio converges to rho", r1000 < r500 and r1000 < 2 * rho / 1000,
                         f"|ratio - rho|: n=500 {r500:.3e}, n=1000 {r1000:.3e}"))
    for d in (0.1, 0.5, 1.0, 2.0, 10.0):
        res = asymptotics.characteristic_residual(d)
        out.append(Check(S, f"d={d}: characteristic residual < 1e-12", res < 1e-12, f"{res:.3e}"))
    grid = [10 ** (e / 4) for e in range(-12, 13)]
    bad = [d for d in grid if not (4 * d + 1 < asymptotics.growth_rate(d) < 4 * d + 2)]
    out.append(Check(S, "4d+1 < rho < 4d+2 on a log grid", not bad, str(bad) if bad else None))
    return out


SUITE_FUNCTIONS: Dict[str, Callable[..., List[Check]]] = {
    "identities": suite_identities,
    "bijections": suite_bijections,
    "colored": suite_colored,
    "series": suite_series,
    "triangles": suite_triangles,
    "parity": suite_parity,
    "asymptotics": suite_asymptotics,
}


def run_suite(name: str, n_max: int, d_grid: Optional[Sequence[Fraction]] = None) -> List[Check]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    names = SUITES if name == "all" else (name,)
    checks: List[Check] = []
    for s in names:
        if s not in SUITE_FUNCTIONS:
            raise ValueError(f"unknown suite {s!r}")
        checks.extend(SUITE_FUNCTIONS[s](n_max, d_grid))
    return checks


def report(checks: List[Check]) -> dict:
    failed = sum(not c.passed for c in checks)
    return {"checks": [c.to_dict() for c in checks], "total": len(checks),
            "failed": failed, "passed": failed == 0}
