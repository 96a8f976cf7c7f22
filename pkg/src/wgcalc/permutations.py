"""Permutations of ``{1..k}`` in one-line form.

Composition is right to left: ``(s * t)(x) == s(t(x))``. Cycle notation is
accepted only as an input/output format.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache

from .partitions import CapacityError, Partition

__all__ = ["Permutation", "all_permutations", "MAX_ENUM_K"]

# Largest degree for which full enumeration of S_k is allowed.
MAX_ENUM_K = 10


@lru_cache(maxsize=None)
def _cycles(images: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    seen = [False] * (len(images) + 1)
    out = []
    for start in range(1, len(images) + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = images[x - 1]
        out.append(tuple(cyc))
    return tuple(out)


@lru_cache(maxsize=None)
def _cycle_type(images: tuple[int, ...]) -> Partition:
    return Partition.from_parts(len(c) for c in _cycles(images))


class Permutation(tuple):
    """A bijection of ``{1..k}`` stored as the tuple of images.

    >>> s = Permutation.parse("(1 2)")
    >>> t = Permutation.parse("(1 3)", 3)
    >>> (Permutation.parse("(1 2)", 3) * t).cycle_string()
    '(1 3 2)'
    """

    def __new__(cls, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _raw(cls, images) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls._raw(range(1, k + 1))

    @classmethod
    def from_cycles(cls, cycles, k: int | None = None) -> "Permutation":
        cycles = [tuple(int(x) for x in c) for c in cycles]
        n = max([x for c in cycles for x in c], default=0)
        k = n if k is None else k
        if n > k:
            raise ValueError(f"cycle entry {n} exceeds degree {k}")
        images = list(range(1, k + 1))
        used = set()
        for c in cycles:
            for i, x in enumerate(c):
                if x in used or x < 1:
                    raise ValueError(f"invalid cycle notation: {cycles}")
                used.add(x)
                images[x - 1] = c[(i + 1) % len(c)]
        return cls(images)

    @classmethod
    def transposition(cls, i: int, j: int, k: int) -> "Permutation":
        return cls.from_cycles([(i, j)], k)

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "Permutation":
        """Parse one-line ``"3 1 2"`` or cycle ``"(1 3 2)(4 5)"`` syntax."""
        text = text.strip()
        if "(" in text:
            groups = re.findall(r"\(([^)]*)\)", text)
            cycles = [tuple(int(x) for x in re.findall(r"\d+", g)) for g in groups]
            return cls.from_cycles([c for c in cycles if c], k)
        perm = cls(int(x) for x in re.findall(r"\d+", text))
        if k is not None and k != len(perm):
            raise ValueError(f"one-line permutation has degree {len(perm)}, expected {k}")
        return perm

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        return self[x - 1]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise ValueError("cannot compose permutations of different degree")
        return Permutation._raw(self[x - 1] for x in other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self, start=1):
            inv[x - 1] = i
        return Permutation._raw(inv)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """All cycles including fixed points, each starting at its minimum."""
        return _cycles(tuple(self))

    def cycle_type(self) -> Partition:
        return _cycle_type(tuple(self))

    @property
    def n_cycles(self) -> int:
        return len(_cycles(tuple(self)))

    @property
    def length(self) -> int:
        """``k - c(sigma)``, the minimal number of transposition factors."""
        return len(self) - self.n_cycles

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self, start=1))

    def extend(self, k: int) -> "Permutation":
        """The same permutation viewed in ``S_k`` (fixing the new points)."""
        if k < len(self):
            raise ValueError("cannot shrink a permutation")
        return Permutation._raw(tuple(self) + tuple(range(len(self) + 1, k + 1)))

    def cycle_string(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


@lru_cache(maxsize=None)
def all_permutations(k: int) -> tuple[Permutation, ...]:
    """All of ``S_k`` in lexicographic order of one-line images."""
    if k > MAX_ENUM_K:
        raise CapacityError(f"enumeration of S_k supports k <= {MAX_ENUM_K}, got {k}")
    return tuple(Permutation._raw(p) for p in itertools.permutations(range(1, k + 1)))
