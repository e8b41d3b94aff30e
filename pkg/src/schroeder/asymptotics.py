"""Floating-point asymptotics of s_d(n) for d > 0.

With ``phi(y) = (1 - y) / (1 - (d+1) y)`` the series satisfies
``y = x phi(y)``.  The characteristic point ``tau`` solves
``phi(tau) = tau phi'(tau)`` and gives

    s_d(n) ~ sqrt(phi(tau) / (2 phi''(tau))) * rho^n / sqrt(pi n^3),
    rho = phi(tau) / tau = 2d + 1 + 2 sqrt(d^2 + d).

This is the only module that uses floats.  Exact values it compares
against come from :mod:`schroeder.sequences` and are handled in log space
so that ``n`` can go far past the double range.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from .numeric import RationalLike, log_abs, rational
from .sequences import sd_recurrence_list


@dataclass(frozen=True)
class AsymptoticProfile:
    d: float
    s_char: float
    phi_at_s: float
    phi_pp_at_s: float
    rho: float
    prefactor: float

    def to_dict(self) -> dict:
        return asdict(self)


def _check_d(d: float) -> float:
    d = float(d)
    if not d > 0 or not math.isfinite(d):
        raise ValueError(f"asymptotics need a finite d > 0, got {d}")
    return d


def phi(d: float, y: float) -> float:
    return (1 - y) / (1 - (d + 1) * y)


def phi_prime(d: float, y: float) -> float:
    return d / (1 - (d + 1) * y) ** 2


def phi_second(d: float, y: float) -> float:
    return 2 * d * (d + 1) / (1 - (d + 1) * y) ** 3


def growth_rate(d: float) -> float:
    d = _check_d(d)
    return 2 * d + 1 + 2 * math.sqrt(d * d + d)


def build_profile(d: float) -> AsymptoticProfile:
    d = _check_d(d)
    sd, sd1 = math.sqrt(d), math.sqrt(d + 1)
    gap = sd1 - sd
    s = 1 - math.sqrt(d / (d + 1))
    phi_s = 1 / (sd1 * gap)
    # Second derivative of phi at tau; twice this value enters the constant.
    phi_pp = 2 * (d + 1) / (sd * gap**3)
    prefactor = gap * d**0.25 / (2 * (d + 1) ** 0.75 * math.sqrt(math.pi))
    return AsymptoticProfile(
        d=d, s_char=s, phi_at_s=phi_s, phi_pp_at_s=phi_pp,
        rho=growth_rate(d), prefactor=prefactor,
    )


def characteristic_residual(d: float) -> float:
    """``|phi(tau) - tau phi'(tau)| / |phi(tau)|`` with phi' taken analytically."""
    prof = build_profile(d)
    lhs = phi(prof.d, prof.s_char)
    rhs = prof.s_char * phi_prime(prof.d, prof.s_char)
    return abs(lhs - rhs) / abs(lhs)


def log_asymptotic_estimate(d: float, n: int) -> float:
    if n < 1:
        raise ValueError("n must be >= 1")
    prof = build_profile(d)
    return math.log(prof.prefactor) - 1.5 * math.log(n) + n * math.log(prof.rho)


def asymptotic_estimate(d: float, n: int) -> float:
    """Leading-order estimate of s_d(n); ``inf`` once it leaves double range."""
    try:
        return math.exp(log_asymptotic_estimate(d, n))
    except OverflowError:
        return math.inf


def relative_error(d: RationalLike, n: int, exact: Fraction | None = None) -> float:
    """``|estimate / exact - 1|`` computed in log space."""
    dq = rational(d)
    if exact is None:
        exact = sd_recurrence_list(dq, n)[-1]
    return abs(math.expm1(log_asymptotic_estimate(float(dq), n) - log_abs(exact)))


def empirical_growth_rate(d: RationalLike, n: int) -> float:
    """Exact ``s_d(n+1) / s_d(n)`` rounded to a double."""
    dq = rational(d)
    if dq <= 0:
        raise ValueError("growth rate needs d > 0")
    vals = sd_recurrence_list(dq, n + 1)
    return float(vals[n] / vals[n - 1])


def compare_exact(d: RationalLike, n: int) -> dict:
    dq = rational(d)
    exact = sd_recurrence_list(dq, n)[-1]
    return {
        "n": n,
        "log_exact": log_abs(exact),
        "log_estimate": log_asymptotic_estimate(float(dq), n),
        "relative_error": relative_error(dq, n, exact),
    }
