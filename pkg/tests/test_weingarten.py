import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from wgcalc.algebra import GroupAlgebraElement, class_collect, class_expand, ClassFunction
from wgcalc.linalg import TensorOperator
from wgcalc.partitions import Partition, partitions_of
from wgcalc.permutations import Permutation, all_permutations
from wgcalc.ratfunc import D
from wgcalc.reference import SCALED_TABLES
from wgcalc.weingarten import (
    catalan,
    complete_jucys,
    conjecture_scan,
    elementary_jucys,
    jucys_elements,
    jucys_factorization_check,
    jucys_product,
    jucys_series,
    novak_sign_check,
    p_element,
    pole_profile,
    scaled_table,
    wg_characters,
    wg_full_cycle,
    wg_inequality_check,
    wg_oracle_linear,
)


def gram_inverse_oracle(k, d):
    """Invert the k! x k! Gram matrix d^{c(s^-1 t)} directly."""
    group = all_permutations(k)
    G = sympy.Matrix(len(group), len(group), lambda i, j: d ** (group[i].inverse() * group[j]).n_cycles)
    row = G.inv().row(0)
    out = {}
    for j, t in enumerate(group):
        out.setdefault(t.cycle_type(), Fraction(int(row[j].p), int(row[j].q)))
    return out


def P(text):
    return Partition.parse(text)


class TestWeingartenValues:
    def test_p_element(self):
        assert p_element(2, D).values == {P("[1,1]"): D**2, P("[2]"): D}
        assert p_element(1, D).values == {P("[1]"): D}

    def test_symbolic_k2(self):
        wg = wg_characters(2, D)
        assert wg[[1, 1]] == 1 / (D**2 - 1)
        assert wg[[2]] == -1 / (D * (D**2 - 1))

    def test_d2_table(self):
        wg = wg_characters(2, 2)
        assert wg.values == {P("[1,1]"): Fraction(1, 3), P("[2]"): Fraction(-1, 6)}
        assert wg.scaled() == {P("[1,1]"): Fraction(4, 3), P("[2]"): Fraction(-2, 3)}

    def test_d3_table(self):
        scaled = wg_characters(3, 3).scaled()
        assert scaled == {P("[1,1,1]"): Fraction(21, 10), P("[2,1]"): Fraction(-9, 10), P("[3]"): Fraction(3, 5)}

    def test_k1(self):
        assert wg_oracle_linear(1, 5).values == {P("[1]"): Fraction(1, 5)}

    @pytest.mark.parametrize("k,d", [(2, 2), (2, 5), (3, 3), (3, 4), (4, 4), (4, 6)])
    def test_gram_matrix_oracle(self, k, d):
        assert wg_characters(k, d).values == gram_inverse_oracle(k, d)

    @pytest.mark.parametrize("k", range(1, 9))
    def test_route_equality(self, k):
        for d in (k, k + 3):
            assert wg_characters(k, d).values == wg_oracle_linear(k, d).values

    def test_oracle_rejects_small_d(self):
        with pytest.raises(ValueError):
            wg_oracle_linear(3, 2)

    @pytest.mark.parametrize("k", range(1, 7))
    def test_inverse_property(self, k):
        for d in (k, k + 1):
            prod = wg_characters(k, d).element() * class_expand(p_element(k, d))
            assert prod == GroupAlgebraElement.identity(k)

    @pytest.mark.parametrize("k", range(1, 6))
    def test_symbolic_specializes(self, k):
        sym = wg_characters(k, D)
        for d in (k, k + 2):
            assert sym.at(d).values == wg_characters(k, d).values

    def test_restricted_inverse_on_tensor_space(self):
        # d < k: Wg * P acts as the identity on V^{(x)k}
        for k, d in [(3, 2), (4, 2), (4, 3)]:
            wg = wg_characters(k, d)
            assert wg.restricted
            prod = wg.element() * class_expand(p_element(k, d))
            assert TensorOperator.from_group_algebra(prod, d) == TensorOperator.identity(d, k)

    def test_frozen_d4_table(self):
        assert scaled_table(4) == SCALED_TABLES[4]
        assert wg_oracle_linear(4, 4).scaled()[P("[2,2]")] == Fraction(22, 35)

    def test_rejects_bad_d(self):
        with pytest.raises(ValueError):
            wg_characters(2, 0)


class TestFullCycle:
    def test_k2(self):
        assert wg_full_cycle(2) == -1 / ((D - 1) * D * (D + 1))

    @pytest.mark.parametrize("k", range(2, 9))
    def test_closed_form(self, k):
        assert wg_characters(k, D)[[k]] == wg_full_cycle(k)
        scaled = math.factorial(k) ** 2 * wg_characters(k, k)[[k]]
        assert scaled == Fraction((-1) ** (k + 1) * k, 2 * k - 1)

    def test_cross_route(self):
        assert wg_full_cycle(5, 6) == wg_characters(5, 6)[[5]]
        assert wg_full_cycle(3, 3) * 36 == Fraction(3, 5)

    def test_catalan(self):
        assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


class TestJucys:
    def test_k2(self):
        (J2,) = jucys_elements(2)
        assert J2 == GroupAlgebraElement(2, {Permutation([2, 1]): 1})
        assert jucys_product(2, D) == class_expand(p_element(2, D))

    def test_commute(self):
        J2, J3 = jucys_elements(3)
        assert J2 * J3 == J3 * J2
        J = jucys_elements(5)
        for a in J:
            for b in J:
                assert a * b == b * a

    def test_k3_d2_expansion(self):
        assert jucys_product(3, 2) == class_expand(p_element(3, 2))

    @pytest.mark.parametrize("k", range(2, 7))
    def test_factorization_symbolic(self, k):
        assert jucys_factorization_check(k, D)

    @pytest.mark.parametrize("k", range(2, 7))
    def test_elementary_are_class_sums(self, k):
        for i in range(k):
            want = {mu: 1 for mu in partitions_of(k) if mu.length == i}
            assert class_collect(elementary_jucys(k, i)).values == want

    def test_e1_s3(self):
        assert class_collect(elementary_jucys(3, 1)) == ClassFunction(3, {(2, 1): 1})

    def test_power_coefficients_bounded(self):
        k = 4
        for J in jucys_elements(k):
            power = GroupAlgebraElement.identity(k)
            for j in range(1, 5):
                power = power * J
                assert all(abs(c) <= (k - 1) ** j for _, c in power.items())

    def test_complete_k2_alternates(self):
        for j in range(6):
            h = class_collect(complete_jucys(2, j))
            assert h.values == ({P("[1,1]"): 1} if j % 2 == 0 else {P("[2]"): 1})

    @pytest.mark.parametrize("k", range(1, 5))
    def test_series_matches_laurent(self, k):
        series = jucys_series(k)
        sym = wg_characters(k, D)
        for mu in partitions_of(k):
            laurent = sym[mu].laurent_at_infinity(-3 * k)
            predicted = {p: c for p, c in series.laurent_coefficients(mu).items() if c}
            assert predicted == laurent

    def test_partial_sum_converges(self):
        series = jucys_series(3, 12)
        exact = wg_characters(3, 10)
        err6 = max(abs(series.partial_sum(10, 6)[mu] - exact[mu]) for mu in partitions_of(3))
        err12 = max(abs(series.partial_sum(10, 12)[mu] - exact[mu]) for mu in partitions_of(3))
        assert err12 < err6 / 1000


class TestSignsAndBounds:
    def test_examples(self):
        wg = wg_characters(2, 2)
        assert wg[[1, 1]] > 0 > wg[[2]]
        assert novak_sign_check(8, 8).passed
        w5 = wg_characters(3, 5)
        assert w5[[1, 1, 1]] > 0 > w5[[2, 1]] and w5[[3]] > 0

    @pytest.mark.parametrize("k", range(1, 8))
    def test_sign_pattern(self, k):
        for d in range(k, k + 5):
            assert novak_sign_check(k, d).passed

    @pytest.mark.parametrize("k", range(2, 7))
    def test_dominance(self, k):
        for d in (k, k + 2):
            wg = wg_characters(k, d)
            one = wg[[1] * k]
            assert all(abs(v) < one for mu, v in wg.values.items() if mu.length)

    def test_inequality_examples(self):
        assert wg_inequality_check(2, 2, GroupAlgebraElement.identity(2)) == Fraction(1, 3)
        a = GroupAlgebraElement(2, {Permutation([1, 2]): 1, Permutation([2, 1]): -1})
        assert wg_inequality_check(2, 2, a) == 1
        with pytest.raises(ValueError):
            wg_inequality_check(2, 2, GroupAlgebraElement.zero(2))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 4), st.integers(0, 2), st.integers(0, 10**6))
    def test_inequality_positive(self, k, extra, seed):
        rng = random.Random(seed)
        group = all_permutations(k)
        a = GroupAlgebraElement(k, {rng.choice(group): rng.randint(-3, 3) for _ in range(4)})
        if a:
            assert wg_inequality_check(k, k + extra, a) > 0


class TestPolesAndTables:
    def test_k2_profile(self):
        assert pole_profile(2) == {-1: 1, 0: 1, 1: 1}

    @pytest.mark.parametrize("k", range(1, 7))
    def test_pole_bound(self, k):
        prof = pole_profile(k, check=False)
        assert all(p * (p + abs(i)) <= k for i, p in prof.items())

    def test_d7_denominators(self):
        (entry,) = conjecture_scan(7, 7).entries
        assert max(v.denominator for _, v in entry.rows) == 3432
        assert entry.denominators_divide

    def test_d8_ordering(self):
        (entry,) = conjecture_scan(8, 8).entries
        values = [abs(v) for _, v in entry.rows]
        assert values[0] == Fraction(3245092, 19305) and values[-1] == Fraction(10296, 19305)
        assert entry.decreasing

    def test_scan_to_ten(self):
        assert conjecture_scan(10).passed

    @pytest.mark.parametrize("d", range(2, 9))
    def test_reference_tables(self, d):
        assert scaled_table(d) == SCALED_TABLES[d]

    def test_decrease_fails_at_13(self):
        # finding: the strict decrease in table order breaks at d = 13
        (entry,) = conjecture_scan(13, 13).entries
        assert entry.denominators_divide
        assert entry.counterexamples == [(P("[7,1,1,1,1,1,1]"), P("[2,2,2,2,1,1,1,1,1]"))]
        rows = dict(entry.rows)
        assert abs(rows[P("[7,1,1,1,1,1,1]")]) < abs(rows[P("[2,2,2,2,1,1,1,1,1]")])

    def test_decrease_fails_at_14(self):
        (entry,) = conjecture_scan(14, 14).entries
        assert entry.denominators_divide
        assert entry.counterexamples == [
            (P("[7,1,1,1,1,1,1,1]"), P("[2,2,2,2,1,1,1,1,1,1]")),
            (P("[7,2,1,1,1,1,1]"), P("[3,3,3,1,1,1,1,1]")),
            (P("[9,1,1,1,1,1]"), P("[2,2,2,2,2,1,1,1,1]")),
        ]

    def test_scan_holds_through_twelve(self):
        assert conjecture_scan(12, 11).passed
