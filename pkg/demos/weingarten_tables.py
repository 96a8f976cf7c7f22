"""Weingarten values, from a single class up to the scaled d = k tables."""

from wgcalc import wg_characters, wg_oracle_linear
from wgcalc.ratfunc import D
from wgcalc.weingarten import conjecture_scan, scaled_table

# Wg(d, mu) is a class function on S_k. Symbolic in d first:
wg2 = wg_characters(2, D)
for mu, value in wg2.values.items():
    print(f"Wg(d, {mu}) = {value}")

# Plug in a number and compare with the center linear system, a separate route.
wg = wg_characters(4, 7)
print("agree at k=4, d=7:", wg.values == wg_oracle_linear(4, 7).values)

# The d!^2-scaled tables at d = k, listed with parts written increasingly.
for d in (3, 4):
    print(f"\nd = {d}")
    for mu, value in scaled_table(d):
        print(f"  {str(mu):>12}  {value}")

# Absolute values shrink along the table, and denominators divide the largest.
rep = conjecture_scan(10)
print("\nscan to 10 holds:", rep.passed)

# Past 12 the decrease breaks.
for entry in conjecture_scan(14, 13).entries:
    for a, b in entry.counterexamples:
        print(f"d={entry.d}: |{a}| <= |{b}|")
