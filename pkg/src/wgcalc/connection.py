"""Connection coefficients, the ``1/d`` expansion of ``Wg`` and its top
coefficients.

``A[mu; mu1, mu2]`` is the coefficient of ``C_mu`` in ``C_mu1 C_mu2``. The
fast table here comes from characters; the counting table in
:func:`wgcalc.algebra.class_structure_constants` and the literal class-sum
product in :func:`brute_force_class_product` serve as independent checks.

Writing ``P = d^k (1 + T)`` with ``T = sum_{mu != 1} d^{-|mu|} C_mu`` gives
``P^{-1} = d^{-k} sum_i (-T)^i``. Collecting powers of ``1/d`` yields the
integers ``A[mu, h]``. Keeping only length-additive products (the degenerate
center) isolates ``C[mu] = A[mu, |mu|]``.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from sympy.utilities.iterables import multiset_partitions

from .algebra import (
    ClassFunction,
    GroupAlgebraElement,
    class_collect,
    class_expand,
    ga_multiply,
)
from .characters import character_table
from .partitions import Partition, class_size, partitions_of
from .permutations import Permutation, all_permutations
from .ratfunc import D
from .weingarten import catalan, wg_characters

__all__ = [
    "ConnectionTable",
    "TopCoefficients",
    "connection_table",
    "class_product",
    "brute_force_class_product",
    "collins_expansion",
    "top_coefficients",
    "top_coefficients_brute",
    "catalan_product",
    "verify_collins_multiplicativity",
    "young_blocks",
    "in_young_subgroup",
    "check_young_support",
    "check_block_additivity",
    "check_degenerate_split",
]


@dataclass(frozen=True)
class ConnectionTable:
    k: int
    constants: dict

    def __getitem__(self, key) -> int:
        mu, m1, m2 = (Partition.from_parts(x) for x in key)
        return self.constants.get((mu, m1, m2), 0)

    def product(self, m1, m2, degenerate: bool = False) -> ClassFunction:
        m1, m2 = Partition.from_parts(m1), Partition.from_parts(m2)
        out = {}
        for mu in partitions_of(self.k):
            a = self.constants.get((mu, m1, m2), 0)
            if a and (not degenerate or mu.length == m1.length + m2.length):
                out[mu] = a
        return ClassFunction(self.k, out)


@lru_cache(maxsize=None)
def connection_table(k: int) -> ConnectionTable:
    """All ``A[mu; mu1, mu2]`` for ``S_k`` by the Frobenius formula
    ``|C1||C2|/k! sum_lambda chi(mu1) chi(mu2) chi(mu) / chi(1)``."""
    ct = character_table(k)
    parts = ct.partitions
    one = Partition([1] * k)
    kf = math.factorial(k)
    # common denominator keeps the inner sums in integers
    L = math.lcm(*(ct[lam, one] for lam in parts))
    cols = {mu: [ct[lam, mu] for lam in parts] for mu in parts}
    scale = [L // ct[lam, one] for lam in parts]
    out = {}
    for m1 in parts:
        for m2 in parts:
            w = class_size(m1) * class_size(m2)
            pair = [a * b * s for a, b, s in zip(cols[m1], cols[m2], scale)]
            for mu in parts:
                num = sum(x * y for x, y in zip(pair, cols[mu])) * w
                if num:
                    q, r = divmod(num, L * kf)
                    if r:
                        raise ArithmeticError(f"non-integral constant at {mu}, {m1}, {m2}")
                    out[(mu, m1, m2)] = q
    return ConnectionTable(k, out)


def _check_sizes(m1: Partition, m2: Partition) -> int:
    if m1.size != m2.size:
        raise ValueError(f"size mismatch: |{m1}| != |{m2}|")
    return m1.size


def class_product(m1, m2, degenerate: bool = False) -> ClassFunction:
    """``C_mu1 * C_mu2`` in the class-sum basis (character route).

    With ``degenerate`` only the length-additive part is kept.
    """
    m1, m2 = Partition.from_parts(m1), Partition.from_parts(m2)
    k = _check_sizes(m1, m2)
    return connection_table(k).product(m1, m2, degenerate)


def brute_force_class_product(m1, m2, degenerate: bool = False) -> ClassFunction:
    """Multiply the expanded class sums in the group algebra and collect."""
    m1, m2 = Partition.from_parts(m1), Partition.from_parts(m2)
    k = _check_sizes(m1, m2)
    a = class_expand(ClassFunction(k, {m1: 1}))
    b = class_expand(ClassFunction(k, {m2: 1}))
    return class_collect(ga_multiply(a, b, "degenerate" if degenerate else "ordinary"))


# --- the 1/d expansion ------------------------------------------------------


def _pair_table(k: int, degenerate: bool) -> dict:
    table = defaultdict(list)
    for (mu, m1, m2), a in connection_table(k).constants.items():
        if degenerate and mu.length != m1.length + m2.length:
            continue
        table[(m1, m2)].append((mu, a))
    return table


def collins_expansion(k: int, h_max: int) -> dict[tuple[Partition, int], int]:
    """``A[mu, h]``: coefficient of ``d^{-k-h} C_mu`` in ``P^{-1}``, for
    ``h <= h_max``. Zero entries are omitted."""
    if h_max < 0:
        raise ValueError("h_max must be nonnegative")
    one = Partition([1] * k)
    pairs = _pair_table(k, degenerate=False)
    nontrivial = [mu for mu in partitions_of(k) if mu != one]
    total: dict = defaultdict(int)
    term = {(one, 0): 1}  # (-T)^0
    while term:
        for key, c in term.items():
            total[key] += c
        nxt: dict = defaultdict(int)
        for (m1, h1), c in term.items():
            for m2 in nontrivial:
                h = h1 + m2.length
                if h > h_max:
                    continue
                for mu, a in pairs.get((m1, m2), ()):
                    nxt[(mu, h)] -= c * a
        term = {key: c for key, c in nxt.items() if c}
    return {key: c for key, c in total.items() if c}


@dataclass(frozen=True)
class TopCoefficients:
    """``C[mu]`` for ``mu`` of ``k``; ``C[1^k] = 1`` by convention."""

    k: int
    values: dict

    def __getitem__(self, mu) -> int:
        return self.values[Partition.from_parts(mu)]


def top_coefficients(k: int) -> TopCoefficients:
    """Geometric series ``sum_i (-T~)^i`` in the degenerate center, with
    ``T~`` the sum of all non-identity class sums. Terminates after ``k-1``
    factors since the augmentation ideal is nilpotent."""
    one = Partition([1] * k)
    pairs = _pair_table(k, degenerate=True)
    nontrivial = [mu for mu in partitions_of(k) if mu != one]
    total: dict = defaultdict(int)
    term = {one: 1}
    steps = 0
    while term:
        for mu, c in term.items():
            total[mu] += c
        nxt: dict = defaultdict(int)
        for m1, c in term.items():
            for m2 in nontrivial:
                for mu, a in pairs.get((m1, m2), ()):
                    nxt[mu] -= c * a
        term = {mu: c for mu, c in nxt.items() if c}
        steps += 1
        if steps > k:
            raise ArithmeticError("degenerate series failed to terminate")
    return TopCoefficients(k, {mu: total.get(mu, 0) for mu in partitions_of(k)})


def top_coefficients_brute(k: int) -> TopCoefficients:
    """``C[mu] = sum_i (-1)^i #{(s_1..s_i) : s_j != 1, prod = sigma_mu,
    lengths add}``, computed in the degenerate group algebra itself."""
    ident = Permutation.identity(k)
    T = GroupAlgebraElement(k, {p: 1 for p in all_permutations(k) if p != ident})
    total = GroupAlgebraElement.identity(k)
    term = GroupAlgebraElement.identity(k)
    for _ in range(k):
        term = -ga_multiply(term, T, "degenerate")
        if not term:
            break
        total = total + term
    cf = class_collect(total)
    return TopCoefficients(k, {mu: cf[mu] for mu in partitions_of(k)})


def catalan_product(mu) -> int:
    """``prod_j (-1)^{a_j - 1} Cat_{a_j - 1}`` over the parts of ``mu``."""
    return math.prod((-1) ** (a - 1) * catalan(a - 1) for a in Partition.from_parts(mu))


@dataclass
class MultiplicativityReport:
    k: int
    top: TopCoefficients
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def verify_collins_multiplicativity(k: int, symbolic: bool = True) -> MultiplicativityReport:
    """Compare ``C[mu]`` with the Catalan product and, if ``symbolic``, with
    the leading coefficient ``lim d^{k+|mu|} Wg(d, mu)``."""
    top = top_coefficients(k)
    rep = MultiplicativityReport(k, top)
    wg = wg_characters(k, D) if symbolic else None
    for mu in partitions_of(k):
        expected = catalan_product(mu)
        if top[mu] != expected:
            rep.mismatches.append(("catalan", mu, top[mu], expected))
        if wg is not None:
            lead = -k - mu.length
            laurent = wg.values[mu].laurent_at_infinity(lead)
            if laurent != {lead: expected}:
                rep.mismatches.append(("laurent", mu, laurent, expected))
    return rep


# --- Young subgroups ----------------------------------------------------------


def young_blocks(sigma: Permutation) -> tuple[frozenset, ...]:
    """The set partition of ``{1..k}`` into the orbits of ``sigma``."""
    return tuple(frozenset(c) for c in sigma.cycles())


def in_young_subgroup(tau: Permutation, blocks) -> bool:
    return all(tau(x) in b for b in blocks for x in b)


def check_young_support(k: int) -> list:
    """Length-additive factorizations ``sigma = s1 s2`` (both nontrivial)
    whose factors leave the Young subgroup of ``sigma``. Expected empty."""
    perms = all_permutations(k)
    bad = []
    for s1 in perms:
        if s1.is_identity():
            continue
        for s2 in perms:
            if s2.is_identity():
                continue
            sigma = s1 * s2
            if sigma.length != s1.length + s2.length:
                continue
            blocks = young_blocks(sigma)
            if not (in_young_subgroup(s1, blocks) and in_young_subgroup(s2, blocks)):
                bad.append((sigma, s1, s2))
    return bad


def _set_partitions(k: int):
    for blocks in multiset_partitions(list(range(1, k + 1))):
        yield tuple(tuple(b) for b in blocks)


def _young_subgroup(blocks) -> list[Permutation]:
    k = sum(len(b) for b in blocks)
    out = []
    for images in itertools.product(*(itertools.permutations(b) for b in blocks)):
        img = [0] * k
        for b, im in zip(blocks, images):
            for x, y in zip(b, im):
                img[x - 1] = y
        out.append(Permutation._raw(img))
    return out


def _restrict(p: Permutation, block) -> Permutation:
    """The permutation induced on ``block``, relabelled to ``1..len(block)``."""
    pos = {x: i for i, x in enumerate(block, start=1)}
    return Permutation._raw(pos[p(x)] for x in block)


def check_block_additivity(k: int) -> list:
    """Pairs in some Young subgroup where global length additivity and
    blockwise additivity disagree. Expected empty."""
    bad = []
    for blocks in _set_partitions(k):
        group = _young_subgroup(blocks)
        for g in group:
            for t in group:
                whole = (g * t).length == g.length + t.length
                parts = all(
                    (_restrict(g, b) * _restrict(t, b)).length
                    == _restrict(g, b).length + _restrict(t, b).length
                    for b in blocks
                )
                if whole != parts:
                    bad.append((blocks, g, t))
    return bad


def check_degenerate_split(k: int) -> list:
    """Compare degenerate products inside ``Y_Pi`` with the blockwise
    degenerate products reassembled. Expected empty."""
    bad = []
    for blocks in _set_partitions(k):
        group = _young_subgroup(blocks)
        for g in group:
            for t in group:
                whole = ga_multiply(
                    GroupAlgebraElement.from_permutation(g),
                    GroupAlgebraElement.from_permutation(t),
                    "degenerate",
                )
                img = list(range(1, k + 1))
                alive = True
                for b in blocks:
                    gb, tb = _restrict(g, b), _restrict(t, b)
                    prod = ga_multiply(
                        GroupAlgebraElement.from_permutation(gb),
                        GroupAlgebraElement.from_permutation(tb),
                        "degenerate",
                    )
                    if not prod:
                        alive = False
                        break
                    (pb,) = prod.terms
                    for i, x in enumerate(b):
                        img[x - 1] = b[pb[i] - 1]
                split = (
                    GroupAlgebraElement.from_permutation(Permutation(img))
                    if alive
                    else GroupAlgebraElement.zero(k)
                )
                if whole != split:
                    bad.append((blocks, g, t))
    return bad
