import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wgcalc.algebra import GroupAlgebraElement
from wgcalc.characters import dim_irrep
from wgcalc.linalg import TensorOperator
from wgcalc.partitions import CapacityError, Partition, partitions_of
from wgcalc.permutations import Permutation, all_permutations
from wgcalc.tableaux import (
    StandardTableau,
    Tableau,
    all_syt,
    content_vector,
    enumerate_syt,
    first_descending_subsequence,
    good_permutations,
    is_d_good,
    longest_decreasing,
    restrict,
    rsk,
    rsk_inverse,
    straighten,
    tableau_from_contents,
)


def brute_longest_decreasing(w):
    n = len(w)
    for size in range(n, 0, -1):
        for idx in itertools.combinations(range(n), size):
            if all(w[a] > w[b] for a, b in zip(idx, idx[1:])):
                return size
    return 0


class TestEnumeration:
    def test_counts(self):
        assert len(enumerate_syt([1, 1, 1])) == 1
        assert len(enumerate_syt([2, 1])) == 2
        assert len(enumerate_syt([4, 2, 1])) == 35

    @pytest.mark.parametrize("n", range(1, 8))
    def test_hook_formula(self, n):
        for lam in partitions_of(n):
            assert len(enumerate_syt(lam)) == dim_irrep(lam)
        assert sum(len(enumerate_syt(l)) ** 2 for l in partitions_of(n)) == math.factorial(n)

    def test_validation(self):
        with pytest.raises(ValueError):
            StandardTableau([[1, 3], [2, 4], [5, 4]])
        with pytest.raises(ValueError):
            StandardTableau([[2, 1]])
        with pytest.raises(CapacityError):
            enumerate_syt([13])


class TestRSK:
    def test_strange(self):
        P, Q = rsk("strange")
        assert P.shape == Partition([2, 2, 1, 1, 1])
        assert P.rows == (("a", "e"), ("g", "t"), ("n",), ("r",), ("s",))
        assert Q.rows == ((1, 2), (3, 5), (4,), (6,), (7,))
        assert "".join(rsk_inverse(P, Q)) == "strange"
        assert longest_decreasing("strange") == 5

    def test_trivial_cases(self):
        P, Q = rsk(Permutation.identity(4))
        assert P.rows == Q.rows == ((1, 2, 3, 4),)
        P, Q = rsk(Permutation([2, 1]))
        assert P.rows == Q.rows == ((1,), (2,))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_bijection_and_schensted(self, n):
        seen = set()
        for s in all_permutations(n):
            P, Q = rsk(s)
            assert isinstance(P, StandardTableau)
            assert rsk_inverse(P, Q) == s
            assert P.shape.height == longest_decreasing(s)
            # first row is a longest increasing subsequence
            assert P.shape[0] == longest_decreasing([-x for x in s])
            seen.add((P.rows, Q.rows))
        assert len(seen) == math.factorial(n)

    def test_inverse_permutation_swaps_tableaux(self):
        for s in all_permutations(5):
            P, Q = rsk(s)
            P2, Q2 = rsk(s.inverse())
            assert (P2.rows, Q2.rows) == (Q.rows, P.rows)

    @settings(max_examples=60)
    @given(st.lists(st.integers(0, 4), max_size=9))
    def test_words_roundtrip(self, w):
        P, Q = rsk(w)
        assert rsk_inverse(P, Q) == w
        assert P.size == len(w)
        if w:
            assert P.shape.height == brute_longest_decreasing(w)

    def test_shape_mismatch(self):
        P, _ = rsk(Permutation([2, 1]))
        with pytest.raises(ValueError):
            rsk_inverse(P, StandardTableau([[1, 2]]))


class TestGoodPermutations:
    def test_examples(self):
        assert not is_d_good([3, 2, 1], 3)
        assert longest_decreasing([3, 2, 1]) == 3
        assert all(not is_d_good(p, 1) for p in all_permutations(3))
        assert len(good_permutations(4, 3)) == 14

    @settings(max_examples=80)
    @given(st.integers(1, 8).flatmap(lambda k: st.permutations(range(1, k + 1))))
    def test_patience_sort(self, w):
        assert longest_decreasing(w) == brute_longest_decreasing(w)

    @pytest.mark.parametrize("k", range(1, 8))
    def test_basis_count(self, k):
        for d in range(1, 5):
            want = sum(dim_irrep(l) ** 2 for l in partitions_of(k) if l.height <= d)
            assert len(good_permutations(k, d + 1)) == want

    def test_first_descending(self):
        assert first_descending_subsequence([3, 1, 4, 2], 2) == (0, 1)
        assert first_descending_subsequence([1, 2, 3], 2) is None
        assert first_descending_subsequence([4, 3, 2, 1], 3) == (0, 1, 2)


class TestStraighten:
    def test_d1(self):
        a = GroupAlgebraElement.from_permutation(Permutation([2, 1]))
        assert straighten(a, 1) == GroupAlgebraElement.identity(2)

    def test_identity_when_d_large(self):
        rng = random.Random(0)
        a = GroupAlgebraElement(3, {p: rng.randint(-3, 3) for p in all_permutations(3)})
        assert straighten(a, 3) == a

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6), st.sampled_from([(3, 2), (4, 2), (4, 3), (3, 1)]))
    def test_operator_equal_and_idempotent(self, seed, kd):
        k, d = kd
        rng = random.Random(seed)
        group = all_permutations(k)
        a = GroupAlgebraElement(k, {rng.choice(group): rng.randint(-4, 4) for _ in range(5)})
        s = straighten(a, d)
        assert all(is_d_good(p, d + 1) for p in s.support())
        assert TensorOperator.from_group_algebra(a, d) == TensorOperator.from_group_algebra(s, d)
        assert straighten(s, d) == s

    def test_rejects_bad_d(self):
        with pytest.raises(ValueError):
            straighten(GroupAlgebraElement.identity(2), 0)


class TestContents:
    def test_worked_tableau(self):
        c = (0, -1, -2, 1, 0, 2, 3)
        T = tableau_from_contents(c)
        assert T.shape == Partition([4, 2, 1])
        assert T.rows == ((1, 4, 6, 7), (2, 5), (3,))
        assert content_vector(T) == c

    def test_single_row(self):
        assert content_vector(StandardTableau([[1, 2, 3]])) == (0, 1, 2)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_roundtrip_and_restriction(self, n):
        for T in all_syt(n):
            assert tableau_from_contents(content_vector(T)) == T
            for j in range(1, n):
                R = restrict(T, j)
                assert isinstance(R, StandardTableau) and R.size == j

    def test_inconsistent(self):
        with pytest.raises(ValueError):
            tableau_from_contents([0, 2])
        with pytest.raises(ValueError):
            tableau_from_contents([1])

    def test_tableau_accessors(self):
        T = StandardTableau([[1, 3], [2]])
        assert T.entry(2, 1) == 2 and T.position(3) == (1, 2)
        assert T.columns() == [(1, 2), (3,)]
        assert Tableau([["a", "b"]]).size == 2
