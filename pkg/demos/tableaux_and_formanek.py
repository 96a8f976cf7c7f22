"""Tableaux, good permutations and the d = 2 central polynomial."""

from wgcalc.algebra import GroupAlgebraElement
from wgcalc.linalg import TensorOperator
from wgcalc.permutations import Permutation
from wgcalc.tableaux import content_vector, good_permutations, rsk, straighten
from wgcalc.tensorpoly import constant_C_d, formanek_verify

P, Q = rsk("strange")
print(P, "\n--\n", Q, sep="")
print("contents of Q:", content_vector(Q))

# 3-good permutations span the commutant when dim V = 2.
print(len(good_permutations(5, 3)), "3-good permutations in S_5")

# Straightening keeps the operator on V^(x)3 but uses only good permutations.
a = GroupAlgebraElement.from_permutation(Permutation([3, 2, 1]))
s = straighten(a, 2)
print(s)
print("same action:", TensorOperator.from_group_algebra(a, 2) == TensorOperator.from_group_algebra(s, 2))

# F(X, Y) at elementary matrices is a scalar.
rep = formanek_verify(2)
print("C_2 =", constant_C_d(2), " F =", rep.computed_scalar, "* Id  passed:", rep.passed)
