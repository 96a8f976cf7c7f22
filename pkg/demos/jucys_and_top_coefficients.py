"""Jucys-Murphy factorization and the leading 1/d behaviour of Wg."""

from wgcalc.connection import catalan_product, class_product, top_coefficients
from wgcalc.partitions import partitions_of
from wgcalc.ratfunc import D
from wgcalc.weingarten import jucys_factorization_check, wg_characters

# d(d + J_2)...(d + J_k) expands to sum_rho d^c(rho) rho.
print("factorization k=4:", jucys_factorization_check(4, D))

# Class sums multiply with nonnegative integer structure constants.
print("C_(2,1,1) C_(3,1) =", class_product([2, 1, 1], [3, 1]))
print("top part only:    ", class_product([2, 1, 1], [3, 1], degenerate=True))

# C[mu] is a product of signed Catalan numbers, one per cycle.
tc = top_coefficients(5)
for mu in partitions_of(5):
    print(f"C{mu} = {tc[mu]:>4}   product {catalan_product(mu):>4}")

# d^(k + |mu|) Wg(d, mu) drifts toward C[mu] as d grows.
k, mu = 4, [3, 1]
for d in (10, 100, 1000):
    print(d, float(d ** (k + 2) * wg_characters(k, d)[mu]))
print("limit", top_coefficients(k)[mu])
