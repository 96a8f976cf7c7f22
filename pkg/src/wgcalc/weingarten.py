"""The Weingarten function: inverse of ``P = sum_rho d^{c(rho)} rho``.

Three routes compute it and are kept independent of one another:

* :func:`wg_characters` sums over irreducible characters (integer or
  symbolic ``d``);
* :func:`wg_oracle_linear` solves ``X * P = 1`` in the center using
  connection coefficients obtained by counting;
* :func:`jucys_series` expands ``d^{-k} sum_j (-1/d)^j h_j(J_2..J_k)`` in
  the Jucys-Murphy elements.

Integer ``d`` gives :class:`fractions.Fraction` values; passing the symbol
:data:`wgcalc.ratfunc.D` gives :class:`~wgcalc.ratfunc.RationalFunction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .algebra import (
    ClassFunction,
    GroupAlgebraElement,
    class_expand,
    class_collect,
    class_structure_constants,
)
from .characters import character_table, dim_irrep, r_lambda
from .partitions import Partition, partitions_of, sort_table_order
from .permutations import Permutation
from .ratfunc import D, RationalFunction

__all__ = [
    "WeingartenClassFunction",
    "JucysSeries",
    "p_element",
    "wg_characters",
    "wg_oracle_linear",
    "wg_full_cycle",
    "catalan",
    "jucys_elements",
    "jucys_product",
    "jucys_factorization_check",
    "elementary_jucys",
    "complete_jucys",
    "jucys_series",
    "novak_sign_check",
    "wg_inequality_check",
    "pole_profile",
    "conjecture_scan",
    "scaled_table",
]


def _is_symbolic(d) -> bool:
    return isinstance(d, RationalFunction)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class WeingartenClassFunction:
    """``Wg(d, mu)`` for every ``mu`` of ``k``.

    ``restricted`` is set when ``d < k``: the values are then one
    representative of the inverse in the quotient algebra acting on
    ``V^{(x)k}``, not an inverse in ``Q[S_k]``.
    """

    k: int
    d: object
    values: dict
    restricted: bool = False

    def __getitem__(self, mu):
        return self.values[Partition.from_parts(mu)]

    def of(self, perm: Permutation):
        return self.values[perm.cycle_type()]

    def as_class_function(self) -> ClassFunction:
        return ClassFunction(self.k, self.values)

    def element(self) -> GroupAlgebraElement:
        return class_expand(self.as_class_function())

    def at(self, d: int) -> "WeingartenClassFunction":
        """Specialize a symbolic result at an integer ``d``."""
        if not _is_symbolic(self.d):
            raise ValueError("already numeric")
        return WeingartenClassFunction(self.k, d, {mu: v(d) for mu, v in self.values.items()})

    def scaled(self) -> dict:
        """``d!^2 * Wg(d, mu)`` for integer ``d``."""
        f = math.factorial(self.d) ** 2
        return {mu: f * v for mu, v in self.values.items()}

    def table_rows(self, scaled: bool = False) -> list[tuple[Partition, object]]:
        vals = self.scaled() if scaled else self.values
        return [(mu, vals[mu]) for mu in sort_table_order(vals)]


def p_element(k: int, d) -> ClassFunction:
    """``P`` in the class-sum basis: coefficient ``d^{ht(mu)}``."""
    return ClassFunction(k, {mu: d ** mu.height for mu in partitions_of(k)})


def wg_characters(k: int, d) -> WeingartenClassFunction:
    """``Wg(d, mu) = sum_lambda chi_lambda(1) chi_lambda(mu) / (k! r_lambda(d))``.

    For integer ``d`` only ``lambda`` with at most ``d`` rows contribute.
    The symbolic form uses every ``lambda``.
    """
    if not _is_symbolic(d) and d < 1:
        raise ValueError("d must be a positive integer or the symbol D")
    ct = character_table(k)
    kf = math.factorial(k)
    lams = [lam for lam in ct.partitions if _is_symbolic(d) or lam.height <= d]
    weights = {lam: Fraction(dim_irrep(lam), kf) / r_lambda(lam, d) for lam in lams}
    values = {}
    for mu in ct.partitions:
        values[mu] = sum((weights[lam] * ct[lam, mu] for lam in lams), Fraction(0))
    restricted = not _is_symbolic(d) and d < k
    return WeingartenClassFunction(k, d, values, restricted)


def wg_oracle_linear(k: int, d: int) -> WeingartenClassFunction:
    """Solve ``X * P = 1`` inside the center for ``d >= k``.

    The matrix of right multiplication by ``P`` is built from counted
    connection coefficients, so no character enters this route.
    """
    if d < k:
        raise ValueError("the center-linear oracle needs d >= k")
    parts = partitions_of(k)
    index = {mu: i for i, mu in enumerate(parts)}
    n = len(parts)
    rows = [[QQ(0)] * n for _ in range(n)]
    for (kappa, m1, m2), a in class_structure_constants(k).items():
        # coefficient of C_kappa in C_m1 * (d^{ht m2} C_m2)
        rows[index[kappa]][index[m1]] += QQ(a * d ** m2.height)
    rhs = [[QQ(0)] for _ in range(n)]
    rhs[index[Partition([1] * k)]][0] = QQ(1)
    M = DomainMatrix(rows, (n, n), QQ)
    b = DomainMatrix(rhs, (n, 1), QQ)
    if M.det() == 0:
        raise ArithmeticError("singular center system; P is not invertible")
    x = M.lu_solve(b).to_Matrix()
    values = {mu: Fraction(int(x[index[mu], 0].p), int(x[index[mu], 0].q)) for mu in parts}
    return WeingartenClassFunction(k, d, values)


def wg_full_cycle(k: int, d=D):
    """Closed form at a full cycle:
    ``(-1)^{k-1} Cat_{k-1} / prod_{j=-k+1}^{k-1} (d - j)``."""
    den = math.prod((d - j for j in range(-k + 1, k)), start=1)
    num = (-1) ** (k - 1) * catalan(k - 1)
    if isinstance(den, int):
        return Fraction(num, den)
    return num / den


# --- Jucys-Murphy elements --------------------------------------------------


def jucys_elements(k: int) -> list[GroupAlgebraElement]:
    """``[J_2, ..., J_k]`` with ``J_i = sum_{j<i} (j, i)``."""
    return [
        GroupAlgebraElement(k, {Permutation.transposition(j, i, k): 1 for j in range(1, i)})
        for i in range(2, k + 1)
    ]


def jucys_product(k: int, d) -> GroupAlgebraElement:
    """Expand ``d * prod_{i=2}^k (d + J_i)`` in the group algebra."""
    acc = GroupAlgebraElement.identity(k, d)
    for J in jucys_elements(k):
        acc = acc.scale(d) + acc * J
    return acc


def jucys_factorization_check(k: int, d) -> bool:
    """Whether ``d prod (d + J_i)`` equals ``sum_rho d^{c(rho)} rho``."""
    return jucys_product(k, d) == class_expand(p_element(k, d))


def _symmetric_in_jucys(k: int, max_degree: int, complete: bool) -> list[GroupAlgebraElement]:
    Js = jucys_elements(k)
    one = GroupAlgebraElement.identity(k)
    zero = GroupAlgebraElement.zero(k)
    # cur[j] = e_j or h_j in the variables processed so far
    cur = [one] + [zero] * max_degree
    for J in Js:
        new = [one]
        for j in range(1, max_degree + 1):
            if complete:
                new.append(cur[j] + new[j - 1] * J)
            else:
                new.append(cur[j] + cur[j - 1] * J)
        cur = new
    return cur


def elementary_jucys(k: int, i: int) -> GroupAlgebraElement:
    """``e_i(J_2, ..., J_k)``."""
    return _symmetric_in_jucys(k, i, complete=False)[i]


def complete_jucys(k: int, j: int) -> GroupAlgebraElement:
    """``h_j(J_2, ..., J_k)``."""
    return _symmetric_in_jucys(k, j, complete=True)[j]


@dataclass(frozen=True)
class JucysSeries:
    """Orders ``h_j(J_2..J_k)`` of the Jucys expansion, collected into
    class sums: ``orders[j][mu] = alpha_{j, mu}``."""

    k: int
    orders: list

    @property
    def max_order(self) -> int:
        return len(self.orders) - 1

    def coefficient(self, mu, j: int) -> int:
        return self.orders[j][mu]

    def partial_sum(self, d, order: int | None = None) -> ClassFunction:
        """``d^{-k} sum_{j <= order} (-1/d)^j h_j`` as a class function."""
        order = self.max_order if order is None else order
        total = ClassFunction(self.k)
        for j in range(order + 1):
            w = (Fraction(-1) if not _is_symbolic(d) else RationalFunction(-1)) ** j
            w = w / d ** (self.k + j)
            total = total + self.orders[j].scale(w)
        return total

    def laurent_coefficients(self, mu) -> dict[int, int]:
        """Predicted coefficients of ``d^{-k-j}`` in ``Wg(d, mu)``."""
        return {-(self.k + j): (-1) ** j * self.orders[j][mu] for j in range(len(self.orders))}


def jucys_series(k: int, max_order: int | None = None) -> JucysSeries:
    """Complete symmetric functions of the Jucys-Murphy elements up to
    ``max_order`` (default ``2k``)."""
    max_order = 2 * k if max_order is None else max_order
    hs = _symmetric_in_jucys(k, max_order, complete=True)
    return JucysSeries(k, [class_collect(h) for h in hs])


# --- sign, inequalities, poles ----------------------------------------------


@dataclass
class SignReport:
    k: int
    d: int
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def novak_sign_check(k: int, d: int) -> SignReport:
    """Check ``sign Wg(d, mu) == sign(mu)`` for every ``mu``; ``d >= k``."""
    if d < k:
        raise ValueError("sign pattern is stated for d >= k")
    wg = wg_characters(k, d)
    rep = SignReport(k, d)
    for mu, v in wg.values.items():
        if v == 0 or (v > 0) != (mu.sign > 0):
            rep.violations.append((mu, v))
    return rep


def wg_inequality_check(k: int, d: int, a: GroupAlgebraElement) -> Fraction:
    """``sum_sigma b_sigma Wg(d, sigma)`` with ``b = a a^*``; positive for
    every nonzero ``a`` when ``d >= k``."""
    if not a:
        raise ValueError("a must be nonzero")
    if a.k != k:
        raise ValueError("degree mismatch")
    wg = wg_characters(k, d)
    b = a * a.star()
    return sum((c * wg.of(p) for p, c in b.terms.items()), Fraction(0))


def pole_profile(k: int, check: bool = True) -> dict[int, int]:
    """Maximal pole order at each integer over the symbolic ``Wg(d, mu)``.

    With ``check`` a :class:`ArithmeticError` is raised if some order ``p``
    at ``i`` violates ``p (p + |i|) <= k``.
    """
    wg = wg_characters(k, D)
    prof: dict[int, int] = {}
    for i in range(-k + 1, k):
        p = max(v.pole_order(i) for v in wg.values.values())
        if p:
            prof[i] = p
    if check:
        bad = {i: p for i, p in prof.items() if p * (p + abs(i)) > k}
        if bad:
            raise ArithmeticError(f"pole orders exceed the bound for k={k}: {bad}")
    return prof


# --- the d = k tables --------------------------------------------------------


def scaled_table(d: int) -> list[tuple[Partition, Fraction]]:
    """``d!^2 Wg(d, mu)`` for ``mu`` of ``d``, in table order
    (partitions written increasingly, lexicographic)."""
    return wg_characters(d, d).table_rows(scaled=True)


@dataclass
class ConjectureEntry:
    d: int
    rows: list
    decreasing: bool
    denominators_divide: bool
    counterexamples: list

    @property
    def passed(self) -> bool:
        return self.decreasing and self.denominators_divide


@dataclass
class ConjectureReport:
    entries: list

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)


def conjecture_scan(d_max: int = 10, d_min: int = 2) -> ConjectureReport:
    """Scan the ``d = k`` tables for strictly decreasing absolute values in
    table order and for every denominator dividing the largest one."""
    entries = []
    for d in range(d_min, d_max + 1):
        rows = scaled_table(d)
        bad = []
        for (m1, v1), (m2, v2) in zip(rows, rows[1:]):
            if not abs(v1) > abs(v2):
                bad.append((m1, m2))
        dens = [v.denominator for _, v in rows]
        big = max(dens)
        divide = all(big % q == 0 for q in dens)
        entries.append(ConjectureEntry(d, rows, not bad, divide, bad))
    return ConjectureReport(entries)
