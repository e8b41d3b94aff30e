"""Three routes to s_d(n), and what they give for various d.

s_d(n) weights every Schroeder tree with n leaves by d^(internal nodes).
At d = 1 this is the plain small Schroeder sequence; other d give new
integer sequences, and some rational d give surprisingly sparse ones.
"""
from fractions import Fraction

from schroeder import sequences, triangles
from schroeder.numeric import format_rational

print("The triangle s(n,k), rows 1..6:")
for n in range(1, 7):
    print("  ", triangles.small_schroeder_row(n).entries)

print("\nRow sums weighted by d^k, for a few d:")
for d in (1, 2, 3, Fraction(1, 2)):
    vals = sequences.sd_values(d, 8)
    print(f"  d = {format_rational(Fraction(d)):>4}:", ", ".join(map(format_rational, vals)))

# The definition, the recurrence and the power series are independent routes.
d = Fraction(-3, 2)
routes = {m: sequences.sd_values(d, 25, m) for m in ("definition", "recurrence", "series")}
print(f"\nd = -3/2, n <= 25: all three routes agree -> {len({tuple(v) for v in routes.values()}) == 1}")

print("\nAt d = -1/2 the odd terms vanish and the even terms are signed Catalan numbers:")
print("  ", ", ".join(format_rational(sequences.s_minus_half(n)) for n in range(1, 11)))

print("\nLarge Schroeder numbers are (d+1)/d times the small ones:")
print("  ", [int(sequences.sbar_d(1, n)) for n in range(1, 9)])
