"""Sparse group algebra ``Q[S_k]`` and its center.

Coefficients may be any exact ring element supporting ``+``, ``*`` and
comparison with ``0``: ``int``, :class:`fractions.Fraction` or
:class:`wgcalc.ratfunc.RationalFunction`.

Two products are provided. The ordinary one is the group algebra product.
The degenerate one keeps ``s*t`` only when ``|s*t| == |s| + |t|``, where
``|s|`` is the transposition length; it is associative and graded by length.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .partitions import Partition, partitions_of
from .permutations import Permutation, all_permutations

__all__ = [
    "GroupAlgebraElement",
    "ClassFunction",
    "NonCentralError",
    "ga_multiply",
    "class_expand",
    "class_collect",
    "conjugacy_class",
    "class_representative",
    "class_structure_constants",
]

ORDINARY = "ordinary"
DEGENERATE = "degenerate"


class NonCentralError(ValueError):
    """Raised by class_collect when conjugate permutations carry different
    coefficients. ``witness`` holds the offending pair."""

    def __init__(self, msg, witness):
        super().__init__(msg)
        self.witness = witness


def _clean(terms: dict) -> dict:
    return {p: c for p, c in terms.items() if c != 0}


class GroupAlgebraElement:
    """Finite formal sum of permutations of a fixed degree ``k``."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: dict | Iterable | None = None):
        self.k = k
        raw = dict(terms or {})
        for p in raw:
            if len(p) != k:
                raise ValueError(f"permutation {p} does not have degree {k}")
        self.terms = _clean(raw)

    @classmethod
    def _from_clean(cls, k, terms):
        obj = cls.__new__(cls)
        obj.k = k
        obj.terms = terms
        return obj

    @classmethod
    def identity(cls, k: int, coef=1) -> "GroupAlgebraElement":
        return cls(k, {Permutation.identity(k): coef})

    @classmethod
    def from_permutation(cls, perm: Permutation, coef=1) -> "GroupAlgebraElement":
        return cls(len(perm), {Permutation(perm): coef})

    @classmethod
    def zero(cls, k: int) -> "GroupAlgebraElement":
        return cls._from_clean(k, {})

    def __getitem__(self, perm) -> object:
        return self.terms.get(perm, 0)

    def coefficient(self, perm):
        return self.terms.get(perm, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self):
        """Terms in canonical (lexicographic one-line) order."""
        return sorted(self.terms.items())

    def support(self) -> list[Permutation]:
        return sorted(self.terms)

    def _check(self, other: "GroupAlgebraElement") -> None:
        if other.k != self.k:
            raise ValueError(f"degree mismatch: S_{self.k} vs S_{other.k}")

    def __add__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return GroupAlgebraElement._from_clean(self.k, _clean(out))

    def __neg__(self):
        return GroupAlgebraElement._from_clean(self.k, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "GroupAlgebraElement":
        return GroupAlgebraElement._from_clean(self.k, _clean({p: c * v for p, v in self.terms.items()}))

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return ga_multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def multiply(self, other, mode: str = ORDINARY) -> "GroupAlgebraElement":
        return ga_multiply(self, other, mode)

    def star(self) -> "GroupAlgebraElement":
        """The anti-involution ``sigma -> sigma^{-1}`` extended linearly."""
        return GroupAlgebraElement._from_clean(
            self.k, {p.inverse(): c for p, c in self.terms.items()}
        )

    def map_coefficients(self, fn) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.k, {p: fn(c) for p, c in self.terms.items()})

    def is_central(self) -> bool:
        try:
            class_collect(self)
        except NonCentralError:
            return False
        return True

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{p.cycle_string()}" for p, c in self.items()) or "0"
        return f"<S_{self.k}: {body}>"


def ga_multiply(a: GroupAlgebraElement, b: GroupAlgebraElement, mode: str = ORDINARY) -> GroupAlgebraElement:
    """Bilinear product in ``Q[S_k]`` (``mode="ordinary"``) or in the
    degenerate algebra (``mode="degenerate"``)."""
    if a.k != b.k:
        raise ValueError(f"degree mismatch: S_{a.k} vs S_{b.k}")
    if mode not in (ORDINARY, DEGENERATE):
        raise ValueError(f"unknown product mode {mode!r}")
    out: dict = defaultdict(int)
    if mode == ORDINARY:
        for s, x in a.terms.items():
            for t, y in b.terms.items():
                out[Permutation._raw(s[i - 1] for i in t)] += x * y
    else:
        blen = {t: t.length for t in b.terms}
        for s, x in a.terms.items():
            ls = s.length
            for t, y in b.terms.items():
                st = Permutation._raw(s[i - 1] for i in t)
                if st.length == ls + blen[t]:
                    out[st] += x * y
    return GroupAlgebraElement._from_clean(a.k, _clean(out))


# --- conjugacy classes ------------------------------------------------------


@lru_cache(maxsize=None)
def _classes(k: int) -> dict[Partition, tuple[Permutation, ...]]:
    groups: dict[Partition, list[Permutation]] = {mu: [] for mu in partitions_of(k)}
    for p in all_permutations(k):
        groups[p.cycle_type()].append(p)
    return {mu: tuple(v) for mu, v in groups.items()}


def conjugacy_class(mu: Partition) -> tuple[Permutation, ...]:
    """All permutations of cycle type ``mu``, lexicographically ordered."""
    mu = Partition.from_parts(mu)
    return _classes(mu.size)[mu]


def class_representative(mu: Partition) -> Permutation:
    """The permutation ``(1..mu_1)(mu_1+1..mu_1+mu_2)...``."""
    mu = Partition.from_parts(mu)
    cycles, start = [], 1
    for part in mu:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(cycles, mu.size)


class ClassFunction:
    """Central element ``sum_mu f(mu) C_mu`` stored by class-sum coefficient."""

    __slots__ = ("k", "values")

    def __init__(self, k: int, values: dict | None = None):
        self.k = k
        vals = {}
        for mu, c in (values or {}).items():
            mu = Partition.from_parts(mu)
            if mu.size != k:
                raise ValueError(f"{mu} is not a partition of {k}")
            if c != 0:
                vals[mu] = c
        self.values = vals

    def __getitem__(self, mu):
        return self.values.get(Partition.from_parts(mu), 0)

    def items(self):
        """Entries in reverse-lexicographic partition order."""
        return sorted(self.values.items(), reverse=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.k == other.k and self.values == other.values

    def __add__(self, other):
        if not isinstance(other, ClassFunction) or other.k != self.k:
            return NotImplemented
        out = dict(self.values)
        for mu, c in other.values.items():
            out[mu] = out.get(mu, 0) + c
        return ClassFunction(self.k, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "ClassFunction":
        return ClassFunction(self.k, {mu: c * v for mu, v in self.values.items()})

    def map_values(self, fn) -> "ClassFunction":
        return ClassFunction(self.k, {mu: fn(v) for mu, v in self.values.items()})

    def expand(self) -> GroupAlgebraElement:
        return class_expand(self)

    def __repr__(self) -> str:
        body = ", ".join(f"{mu}: {c}" for mu, c in self.items())
        return f"ClassFunction(k={self.k}, {{{body}}})"


def class_expand(f: ClassFunction) -> GroupAlgebraElement:
    """Expand each class sum ``C_mu`` over its class."""
    terms = {}
    for mu, c in f.values.items():
        for p in conjugacy_class(mu):
            terms[p] = c
    return GroupAlgebraElement._from_clean(f.k, terms)


def class_collect(a: GroupAlgebraElement) -> ClassFunction:
    """Inverse of :func:`class_expand`; the element must be central."""
    values = {}
    for mu, members in _classes(a.k).items():
        first = members[0]
        c = a.terms.get(first, 0)
        for p in members[1:]:
            if a.terms.get(p, 0) != c:
                raise NonCentralError(
                    f"coefficients differ on conjugate permutations {first.cycle_string()} "
                    f"and {p.cycle_string()}",
                    (first, p),
                )
        if c != 0:
            values[mu] = c
    return ClassFunction(a.k, values)


@lru_cache(maxsize=None)
def class_structure_constants(k: int) -> dict[tuple[Partition, Partition, Partition], int]:
    """Connection coefficients ``A[mu; mu1, mu2]`` by direct counting.

    With ``sigma`` the representative of ``mu``, ``A[mu; mu1, mu2]`` is the
    number of ``rho`` of type ``mu1`` with ``rho^{-1} sigma`` of type ``mu2``.
    Cost ``p(k) * k!`` compositions; no character theory involved.
    """
    perms = all_permutations(k)
    types = {p: p.cycle_type() for p in perms}
    inverses = {p: p.inverse() for p in perms}
    out: dict[tuple[Partition, Partition, Partition], int] = defaultdict(int)
    for mu in partitions_of(k):
        sigma = class_representative(mu)
        for rho in perms:
            inv = inverses[rho]
            tau = Permutation._raw(inv[x - 1] for x in sigma)
            out[(mu, types[rho], types[tau])] += 1
    return dict(out)


def central_product(f: ClassFunction, g: ClassFunction, degenerate: bool = False,
                    constants: dict | None = None) -> ClassFunction:
    """Product of two central elements through structure constants.

    ``degenerate=True`` keeps only terms with ``|mu| = |mu1| + |mu2|``.
    ``constants`` defaults to the counting table of
    :func:`class_structure_constants`.
    """
    if f.k != g.k:
        raise ValueError("degree mismatch")
    table = class_structure_constants(f.k) if constants is None else constants
    out: dict = defaultdict(int)
    for (mu, m1, m2), a in table.items():
        x = f.values.get(m1)
        if x is None:
            continue
        y = g.values.get(m2)
        if y is None:
            continue
        if degenerate and mu.length != m1.length + m2.length:
            continue
        out[mu] += a * x * y
    return ClassFunction(f.k, out)


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)
