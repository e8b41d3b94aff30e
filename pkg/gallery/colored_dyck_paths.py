"""Colored Dyck paths and peak parity.

Paint each up step with one of k colors and each down step with one of l
colors, then forbid p of the k*l colored peaks.  The number of such paths
is p^(n-1) s_d(n) with d = (kl - p)/p.  The count is checked here against
an explicit coloring of every path.
"""
from fractions import Fraction

from schroeder import objects, sequences

print(" k l p |  n=1..5 by formula           | explicit coloring agrees | weighted Schroeder agrees")
for k, l, p in [(1, 1, 1), (1, 2, 1), (2, 2, 1), (3, 1, 1), (2, 2, 2)]:
    counts = [objects.colored_dyck_count(k, l, p, n) for n in range(1, 6)]
    explicit = [objects.colored_dyck_count_bruteforce(k, l, p, n) for n in range(1, 6)]
    weighted = [p ** (n - 1) * sequences.sd_recurrence(Fraction(k * l - p, p), n) for n in range(1, 6)]
    print(f" {k} {l} {p} | {str(counts):<28} | {counts == explicit!s:<24} | {counts == weighted}")

print("\nDyck paths split by the parity of their peak count:")
print("  n  even   odd   even-odd  2^(n-1) s_{-1/2}(n)")
for n in range(1, 11):
    even, odd = objects.peak_parity_counts(n)
    print(f" {n:2} {even:5} {odd:5} {even - odd:9}  {2 ** (n - 1) * sequences.s_minus_half(n)!s:>8}")
