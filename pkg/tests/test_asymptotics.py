import math
from fractions import Fraction as F

import pytest

from schroeder.asymptotics import (
    asymptotic_estimate,
    build_profile,
    characteristic_residual,
    compare_exact,
    empirical_growth_rate,
    growth_rate,
    log_asymptotic_estimate,
    phi,
    phi_prime,
    phi_second,
    relative_error,
)


def test_rho_values():
    assert build_profile(1).rho == pytest.approx(3 + 2 * math.sqrt(2), rel=1e-15)
    assert build_profile(2).rho == pytest.approx(5 + 2 * math.sqrt(6), rel=1e-15)
    assert build_profile(1).rho == pytest.approx(5.828427, abs=1e-6)
    assert build_profile(2).rho == pytest.approx(9.898979, abs=1e-6)


def test_rho_bounds_log_grid():
    for e in range(-12, 13):
        d = 10 ** (e / 4)
        assert 4 * d + 1 < growth_rate(d) < 4 * d + 2


@pytest.mark.parametrize("d", [0.1, 0.5, 1, 2, 10])
def test_profile_fields(d):
    prof = build_profile(d)
    assert 0 < prof.s_char < 1 / (d + 1)
    assert prof.rho == pytest.approx(prof.phi_at_s / prof.s_char, rel=1e-12)
    assert prof.phi_at_s == pytest.approx(phi(d, prof.s_char), rel=1e-12)
    assert prof.phi_pp_at_s == pytest.approx(phi_second(d, prof.s_char), rel=1e-12)
    assert characteristic_residual(d) < 1e-12
    # the prefactor equals sqrt(phi / (2 phi'')) / sqrt(pi)
    assert prof.prefactor == pytest.approx(math.sqrt(prof.phi_at_s / (2 * prof.phi_pp_at_s) / math.pi), rel=1e-12)


def test_phi_derivatives_by_finite_differences():
    d, y, h = 1.7, 0.2, 1e-5
    fd1 = (phi(d, y + h) - phi(d, y - h)) / (2 * h)
    fd2 = (phi(d, y + h) - 2 * phi(d, y) + phi(d, y - h)) / h**2
    assert phi_prime(d, y) == pytest.approx(fd1, rel=1e-8)
    assert phi_second(d, y) == pytest.approx(fd2, rel=1e-4)


def test_domain_errors():
    for d in (0, -1, float("nan")):
        with pytest.raises(ValueError):
            build_profile(d)
    with pytest.raises(ValueError):
        empirical_growth_rate(0, 10)


def test_prefactor_consistency():
    d = 1.5
    rho = growth_rate(d)
    scaled = [log_asymptotic_estimate(d, n) + 1.5 * math.log(n) - n * math.log(rho) for n in (10, 100, 1000, 10000)]
    assert max(scaled) - min(scaled) < 1e-9


def test_estimate_overflow_reported_as_inf():
    assert asymptotic_estimate(1, 10**6) == math.inf
    assert math.isfinite(log_asymptotic_estimate(1, 10**6))


def test_relative_error_shrinks():
    e100 = relative_error(1, 100)
    e400 = relative_error(1, 400)
    assert e100 < 0.02
    assert e400 < e100
    assert relative_error(2, 50) > relative_error(2, 100) > relative_error(2, 200)
    assert compare_exact(1, 100)["relative_error"] == e100


def test_empirical_ratio_approach():
    rho = growth_rate(1)
    assert abs(empirical_growth_rate(1, 1000) - rho) < 1e-2
    assert abs(empirical_growth_rate(1, 2000) - rho) < abs(empirical_growth_rate(1, 500) - rho)


@pytest.mark.parametrize("d", [F(1, 2), F(1), F(2)])
def test_empirical_ratio_gap_is_three_halves_rho_over_n(d):
    # s_d(n+1)/s_d(n) = rho (1 - 3/(2n) + O(n^-2)); the gap at n = 1000 is
    # about 1.5 rho / 1000, which exceeds 1e-2 once rho > 6.67 (e.g. d = 2).
    rho = growth_rate(float(d))
    gap = rho - empirical_growth_rate(d, 1000)
    assert gap == pytest.approx(1.5 * rho / 1000, rel=0.01)
