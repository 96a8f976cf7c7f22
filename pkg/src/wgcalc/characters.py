"""Irreducible characters of ``S_k`` and the dimension formulas.

Characters use the Murnaghan-Nakayama rule: strip border strips of the
largest remaining cycle length. Shapes are handled as beta-sets, so a
border strip of length ``r`` is a bead moved from ``b`` to ``b - r``, with
sign ``(-1)^(beads jumped)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import GroupAlgebraElement, conjugacy_class
from .partitions import CapacityError, Partition, class_size, hooks_and_contents, partitions_of

__all__ = [
    "CharacterTable",
    "character",
    "character_table",
    "dim_irrep",
    "schur_dim",
    "r_lambda",
    "central_idempotent",
    "content_sum",
    "orthogonality_defect",
    "MAX_IDEMPOTENT_K",
]

MAX_IDEMPOTENT_K = 8


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beta:
            continue
        jumped = sum(1 for x in beta if target < x < b)
        new = frozenset(beta - {b} | {target})
        total += (-1) ** jumped * _mn(new, rest)
    return total


def _beta_set(lam: Partition) -> frozenset:
    n = len(lam)
    return frozenset(part + n - 1 - i for i, part in enumerate(lam))


def character(lam, mu) -> int:
    """``chi_lambda`` evaluated on the class of cycle type ``mu``.

    >>> character(Partition([2, 1]), Partition([1, 1, 1]))
    2
    """
    lam = Partition(lam)
    mu = Partition.from_parts(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(_beta_set(lam), tuple(mu))


@dataclass(frozen=True)
class CharacterTable:
    k: int
    partitions: tuple[Partition, ...]
    table: dict

    def __getitem__(self, key) -> int:
        lam, mu = key
        return self.table[(Partition(lam), Partition.from_parts(mu))]

    def row(self, lam) -> list[int]:
        return [self[lam, mu] for mu in self.partitions]

    def to_json(self) -> dict:
        return {
            str(lam): {str(mu): self.table[(lam, mu)] for mu in self.partitions}
            for lam in self.partitions
        }


@lru_cache(maxsize=None)
def character_table(k: int) -> CharacterTable:
    parts = partitions_of(k)
    table = {(lam, mu): character(lam, mu) for lam in parts for mu in parts}
    return CharacterTable(k, parts, table)


def dim_irrep(lam) -> int:
    """Hook length formula ``k! / prod h_u``."""
    lam = Partition(lam)
    return math.factorial(lam.size) // math.prod(b.hook for b in hooks_and_contents(lam))


def schur_dim(lam, d):
    """Hook-content formula ``prod (d + c_u) / h_u``.

    ``d`` may be an integer or the symbol :data:`wgcalc.ratfunc.D`.
    """
    lam = Partition(lam)
    boxes = hooks_and_contents(lam)
    num = math.prod((d + b.content for b in boxes), start=1)
    hooks = math.prod(b.hook for b in boxes)
    if isinstance(num, int):
        return Fraction(num, hooks)
    return num / hooks


def r_lambda(lam, d):
    """Scalar by which ``sum_rho d^{c(rho)} rho`` acts on ``M_lambda``:
    ``prod_u (d + c_u)``."""
    return math.prod((d + b.content for b in hooks_and_contents(Partition(lam))), start=1)


def content_sum(lam) -> Fraction:
    """Scalar of the sum of all transpositions on ``M_lambda``:
    ``1/2 sum_i (lambda_i^2 - (2i-1) lambda_i)``."""
    lam = Partition(lam)
    return Fraction(sum(p * p - (2 * i - 1) * p for i, p in enumerate(lam, start=1)), 2)


def central_idempotent(lam) -> GroupAlgebraElement:
    """``e_lambda = chi_lambda(1)/k! * sum_sigma chi_lambda(sigma) sigma``."""
    lam = Partition(lam)
    k = lam.size
    if k > MAX_IDEMPOTENT_K:
        raise CapacityError(f"central_idempotent supports k <= {MAX_IDEMPOTENT_K}")
    scale = Fraction(dim_irrep(lam), math.factorial(k))
    terms = {}
    for mu in partitions_of(k):
        chi = character(lam, mu)
        if chi:
            for p in conjugacy_class(mu):
                terms[p] = scale * chi
    return GroupAlgebraElement(k, terms)


def orthogonality_defect(k: int) -> list[tuple[Partition, Partition, Fraction]]:
    """Pairs ``(lambda, nu)`` where ``(1/k!) sum_mu |C_mu| chi_lambda chi_nu``
    differs from ``delta``. Empty when the table is correct."""
    ct = character_table(k)
    bad = []
    for lam in ct.partitions:
        for nu in ct.partitions:
            s = sum(class_size(mu) * ct[lam, mu] * ct[nu, mu] for mu in ct.partitions)
            val = Fraction(s, math.factorial(k))
            if val != (1 if lam == nu else 0):
                bad.append((lam, nu, val))
    return bad
