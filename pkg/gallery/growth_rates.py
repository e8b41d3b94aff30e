"""How fast s_d(n) grows.

For d > 0, s_d(n) grows like rho^n / n^(3/2) with rho = 2d + 1 + 2 sqrt(d^2 + d).
The estimate is compared against exact values far beyond double range.
Consecutive ratios creep up to rho only slowly, roughly like rho (1 - 3/(2n)).
"""
from fractions import Fraction

from schroeder import asymptotics

for d in (Fraction(1, 2), Fraction(1), Fraction(2)):
    prof = asymptotics.build_profile(float(d))
    print(f"d = {d}: rho = {prof.rho:.6f}, constant = {prof.prefactor:.6f}")
    for n in (10, 100, 400, 1000):
        err = asymptotics.relative_error(d, n)
        ratio = asymptotics.empirical_growth_rate(d, n)
        print(f"   n = {n:4}: relative error {err:.2e}   ratio {ratio:.5f}  "
              f"rho - ratio {prof.rho - ratio:.2e}  (1.5 rho/n = {1.5 * prof.rho / n:.2e})")
