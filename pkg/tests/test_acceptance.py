"""Acceptance criteria, one test each.

Every test runs the ``desk``-level check from :mod:`wgcalc.verify` under its
time budget and then pins a few values by a second, independent route. The
summary section ``acceptance criteria`` lists one PASS/FAIL line per test.
"""

import math
import time
from fractions import Fraction

import pytest

from wgcalc.algebra import ClassFunction, GroupAlgebraElement
from wgcalc.characters import character, dim_irrep, schur_dim
from wgcalc.connection import brute_force_class_product, top_coefficients, top_coefficients_brute
from wgcalc.integrals import MonomialSpec, haar_mc_oracle, monomial_integral, wg_via_monomial
from wgcalc.linalg import Matrix, TensorOperator
from wgcalc.partitions import Partition, partitions_of
from wgcalc.permutations import Permutation, all_permutations
from wgcalc.ratfunc import D
from wgcalc.tableaux import good_permutations, rsk, straighten
from wgcalc.tensorpoly import constant_C_d, formanek_verify, immo_values
from wgcalc.verify import CRITERIA, MC_SPECS, run_criterion, u2_analytic
from wgcalc.weingarten import conjecture_scan, jucys_product, wg_characters, wg_oracle_linear

F = Fraction


def check(number: int, budget: float):
    t0 = time.perf_counter()
    res = run_criterion(number, "desk")
    elapsed = time.perf_counter() - t0
    print(f"\n{res.line()} ({elapsed:.2f}s)")
    assert res.passed, res.details
    assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
    return res


def crit(number):
    return pytest.mark.criterion(number, CRITERIA[number][0])


@crit(1)
def test_scaled_tables():
    check(1, 120)
    # second route: the center linear system, rescaled by d!^2
    for d, mu, want in [
        (2, [1, 1], F(4, 3)),
        (4, [2, 2], F(22, 35)),
        (7, [7], F(7, 13)),
        (8, [1] * 8, F(3245092, 19305)),
        (8, [8], F(-10296, 19305)),
    ]:
        assert math.factorial(d) ** 2 * wg_oracle_linear(d, d)[mu] == want


@crit(2)
def test_full_cycle_closed_form():
    check(2, 30)
    for k in range(2, 9):
        # (-1)^(k-1) Cat_{k-1} / prod_{|j|<k} (d - j)
        want = F((-1) ** (k - 1) * math.comb(2 * k - 2, k - 1), k)
        den = 1
        for j in range(-(k - 1), k):
            den = den * (D - j)
        assert wg_characters(k, D)[[k]] == want / den
        assert math.factorial(k) ** 2 * wg_oracle_linear(k, k)[[k]] == F((-1) ** (k + 1) * k, 2 * k - 1)


@crit(3)
def test_oracle_equivalence():
    check(3, 60)
    assert wg_oracle_linear(3, 6).values == wg_characters(3, 6).values


@crit(4)
def test_jucys_factorization():
    check(4, 120)
    # d(d+J_2)(d+J_3) at k = 3 against the class expansion sum_rho d^c(rho) rho
    P = jucys_product(3, D)
    for rho in all_permutations(3):
        assert P[rho] == D ** rho.n_cycles


@crit(5)
def test_top_coefficients():
    check(5, 60)
    tc = top_coefficients(4)
    assert [tc[m] for m in ([2, 1, 1], [3, 1], [2, 2], [4])] == [-1, 2, 1, -5]
    assert top_coefficients(5)[[5]] == 14
    # leading Laurent coefficient read off an independent count
    brute = top_coefficients_brute(5)
    for mu in partitions_of(5):
        assert brute[mu] == top_coefficients(5)[mu]
    # d^(k+|mu|) Wg tends to C[mu]
    d = 10**6
    for mu in partitions_of(4):
        val = d ** (4 + mu.length) * wg_characters(4, d)[mu]
        assert abs(val - tc[mu]) < F(1, 10**4)


@crit(6)
def test_connection_tables():
    check(6, 120)
    want = ClassFunction(4, {(1, 1, 1, 1): 6, (3, 1): 3, (2, 2): 2})
    assert brute_force_class_product([2, 1, 1], [2, 1, 1]) == want
    assert brute_force_class_product([2, 1, 1, 1], [2, 1, 1, 1], degenerate=True) == \
        ClassFunction(5, {(3, 1, 1): 3, (2, 2, 1): 2})


@crit(7)
def test_signs_and_dominance():
    check(7, 60)
    wg = wg_oracle_linear(5, 5)
    for mu in partitions_of(5):
        assert wg[mu] * (-1) ** mu.length > 0
        if mu.length:
            assert abs(wg[mu]) < wg[[1] * 5]


@crit(8)
def test_conjecture_scan():
    check(8, 600)
    rep = conjecture_scan(10)
    assert rep.passed and [e.d for e in rep.entries] == list(range(2, 11))


@crit(9)
def test_haar_integrals():
    check(9, 60)
    for u, ubar, value in [
        ("1,1 2,2", "1,1 2,2", F(1, 3)),
        ("1,1 1,2", "1,1 1,2", F(1, 6)),
        ("1,1 2,2", "1,2 2,1", F(-1, 6)),
        ("1,1", "1,1", F(1, 2)),
    ]:
        s = MonomialSpec.parse(2, u, ubar)
        assert monomial_integral(s) == u2_analytic(s) == value
    assert len(MC_SPECS) == 10 and {d for d, _, _ in MC_SPECS} == {2, 3}
    s = MonomialSpec.parse(3, "1,1 2,2", "1,1 2,2")
    assert haar_mc_oracle(s, 100_000, seed=99).within(monomial_integral(s), 4.0)


@crit(10)
def test_wg_via_monomial():
    check(10, 60)
    assert wg_via_monomial(3, Permutation([1, 2])) == F(1, 8)
    assert wg_via_monomial(3, Permutation([2, 1])) == F(-1, 24)
    assert wg_via_monomial(3, Permutation([2, 3, 1])) == wg_oracle_linear(3, 3)[[3]]


@crit(11)
def test_formanek_d2():
    check(11, 10)
    rep = formanek_verify(2)
    assert rep.coefficient == F(-1, 12)
    assert rep.F == Matrix.identity(2).scale(rep.computed_scalar)
    assert rep.computed_scalar == F(-1, 12) * rep.T_X * rep.T_Y == -3
    assert abs(constant_C_d(2)) == 6
    vals = immo_values(2)
    assert vals[Permutation([1, 2])] == rep.T_Y
    assert all(v == 0 for s, v in vals.items() if not s.is_identity())


@crit(12)
def test_tableaux_suite():
    check(12, 120)
    P, Q = rsk(Permutation([3, 1, 2]))
    assert P.rows == ((1, 2), (3,)) and Q.rows == ((1, 3), (2,))
    assert len(good_permutations(7, 3)) == sum(
        dim_irrep(l) ** 2 for l in partitions_of(7) if l.height <= 2
    ) == 429
    a = GroupAlgebraElement.from_permutation(Permutation([3, 2, 1]))
    assert TensorOperator.from_group_algebra(straighten(a, 2), 2) == \
        TensorOperator.from_permutation(Permutation([3, 2, 1]), 2)


@crit(13)
def test_character_infrastructure():
    check(13, 30)
    assert character([3, 2], [1] * 5) == 5
    assert character([2, 2], [4]) == 0
    # hook-content: s_lambda(1^d) for lambda = (2,1), d = 3
    assert schur_dim(Partition([2, 1]), 3) == 8


@pytest.mark.deep
def test_deep_level():
    for n in (8, 11):
        res = run_criterion(n, "deep")
        print(f"\n{res.line()} [deep] ({res.seconds:.2f}s)")
        assert res.passed, res.details
