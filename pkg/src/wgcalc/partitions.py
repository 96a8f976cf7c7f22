"""Integer partitions, Young diagram box statistics and class sizes.

A :class:`Partition` is a tuple of weakly decreasing positive integers. The
same object is used for a cycle type, a conjugacy class of ``S_k`` and a
Young diagram.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from functools import lru_cache
from typing import NamedTuple

__all__ = [
    "CapacityError",
    "MAX_K",
    "Partition",
    "BoxStats",
    "partitions_of",
    "hooks_and_contents",
    "class_size",
    "z_mu",
    "table_order_key",
    "sort_table_order",
]

# Largest k accepted by partitions_of (p(30) = 5604).
MAX_K = 30


class CapacityError(ValueError):
    """Raised when a request exceeds a documented size bound."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    >>> lam = Partition([3, 1, 1])
    >>> lam.size, lam.height, lam.conjugate()
    (5, 3, Partition([3, 1, 1]))
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Build from parts in any order (e.g. a cycle-length list)."""
        return cls(sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"[3,1,1]"`` (brackets optional, any order of parts)."""
        nums = re.findall(r"-?\d+", text)
        return cls.from_parts(int(n) for n in nums)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    @property
    def length(self) -> int:
        """Minimal number of transpositions of a permutation of this type."""
        return self.size - self.height

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def boxes(self):
        """Yield the 1-based (row, column) coordinates of every box."""
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


class BoxStats(NamedTuple):
    row: int
    col: int
    hook: int
    content: int


@lru_cache(maxsize=None)
def partitions_of(k: int) -> tuple[Partition, ...]:
    """All partitions of ``k`` in reverse-lexicographic order ((k) first).

    >>> [list(p) for p in partitions_of(4)]
    [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > MAX_K:
        raise CapacityError(f"partitions_of supports k <= {MAX_K}, got {k}")

    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, largest), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(k, k, [])
    return tuple(out)


def hooks_and_contents(lam: Partition) -> list[BoxStats]:
    """Hook length and content of every box, row by row."""
    lam = Partition(lam)
    conj = lam.conjugate()
    return [
        BoxStats(i, j, lam[i - 1] + conj[j - 1] - i - j + 1, j - i)
        for i, j in lam.boxes()
    ]


def z_mu(mu: Partition) -> int:
    """Centralizer order ``prod_m m^{a_m} a_m!``."""
    return math.prod(m**a * math.factorial(a) for m, a in Counter(mu).items())


def class_size(mu: Partition) -> int:
    """Number of permutations with cycle type ``mu``."""
    mu = Partition.from_parts(mu)
    return math.factorial(mu.size) // z_mu(mu)


def table_order_key(mu: Partition) -> tuple[int, ...]:
    """Sort key for display tables: parts written increasingly, compared
    lexicographically. ``(1^k)`` comes first and ``(k)`` last."""
    return tuple(sorted(mu))


def sort_table_order(parts) -> list[Partition]:
    return sorted(parts, key=table_order_key)
