"""Exact unitary integrals checked against random Haar unitaries."""

from wgcalc.integrals import MonomialSpec, haar_mc_oracle, monomial_integral, wg_via_monomial
from wgcalc.permutations import Permutation
from wgcalc.ratfunc import D

# int |u_11|^2 |u_22|^2 dU and friends. The notation is "row,col" per factor.
cases = [
    (2, "1,1", "1,1"),
    (2, "1,1 2,2", "1,1 2,2"),
    (2, "1,1 2,2", "1,2 2,1"),
    (3, "1,2 2,3 3,1", "1,2 2,3 3,1"),
]
for d, u, ubar in cases:
    spec = MonomialSpec.parse(d, u, ubar)
    exact = monomial_integral(spec)
    est = haar_mc_oracle(spec, 50_000, seed=0)
    print(f"d={d} [{u} | {ubar}]  exact {str(exact):>7}  "
          f"MC {est.mean:+.5f} +- {est.stderr:.5f}")

# The same integral with d left free.
print(monomial_integral(MonomialSpec.parse(D, "1,1 1,2", "1,1 1,2")))

# With distinct indices, one monomial recovers Wg(d, tau).
tau = Permutation([2, 3, 1])
print("Wg(3, (1 2 3)) =", wg_via_monomial(3, tau))
