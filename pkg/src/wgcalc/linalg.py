"""Sparse exact matrices and operators on ``V^{(x)k}``.

Indices are 0-based throughout this module. A multi-index is a tuple
``(c_1, ..., c_k)`` of basis labels in ``range(d)``.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction

from .algebra import GroupAlgebraElement
from .permutations import Permutation

__all__ = ["Matrix", "TensorOperator"]


def _clean(entries: dict) -> dict:
    return {k: v for k, v in entries.items() if v != 0}


class Matrix:
    """Sparse ``d x d`` matrix with exact entries."""

    __slots__ = ("d", "entries")

    def __init__(self, d: int, entries: dict | None = None):
        self.d = d
        for (i, j) in entries or {}:
            if not (0 <= i < d and 0 <= j < d):
                raise ValueError(f"entry ({i}, {j}) outside a {d}x{d} matrix")
        self.entries = _clean(dict(entries or {}))

    @classmethod
    def elementary(cls, d: int, i: int, j: int) -> "Matrix":
        """``e_{ij}`` (0-based)."""
        return cls(d, {(i, j): 1})

    @classmethod
    def identity(cls, d: int) -> "Matrix":
        return cls(d, {(i, i): 1 for i in range(d)})

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("matrix must be square")
        return cls(d, {(i, j): Fraction(x) for i, r in enumerate(rows) for j, x in enumerate(r)})

    def to_rows(self) -> list[list]:
        return [[self.entries.get((i, j), 0) for j in range(self.d)] for i in range(self.d)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.d == other.d and self.entries == other.entries

    def __hash__(self):
        return hash((self.d, frozenset(self.entries.items())))

    def _check(self, other: "Matrix") -> None:
        if other.d != self.d:
            raise ValueError(f"dimension mismatch: {self.d} vs {other.d}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out.get(key, 0) + v
        return Matrix(self.d, out)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c) -> "Matrix":
        return Matrix(self.d, {key: c * v for key, v in self.entries.items()})

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        rows = defaultdict(list)
        for (j, l), v in other.entries.items():
            rows[j].append((l, v))
        out: dict = defaultdict(int)
        for (i, j), u in self.entries.items():
            for l, v in rows.get(j, ()):
                out[(i, l)] += u * v
        return Matrix(self.d, out)

    def trace(self):
        return sum((v for (i, j), v in self.entries.items() if i == j), 0)

    def commutes_with(self, other: "Matrix") -> bool:
        return self @ other == other @ self

    def __repr__(self) -> str:
        return f"Matrix({self.to_rows()})"


class TensorOperator:
    """Sparse element of ``End(V)^{(x)k}`` keyed by ``(row, col)``
    multi-index pairs."""

    __slots__ = ("d", "k", "entries")

    def __init__(self, d: int, k: int, entries: dict | None = None):
        self.d = d
        self.k = k
        self.entries = _clean(dict(entries or {}))

    @classmethod
    def zero(cls, d: int, k: int) -> "TensorOperator":
        return cls(d, k)

    @classmethod
    def identity(cls, d: int, k: int) -> "TensorOperator":
        return cls(d, k, {(c, c): 1 for c in itertools.product(range(d), repeat=k)})

    @classmethod
    def from_permutation(cls, sigma: Permutation, d: int) -> "TensorOperator":
        """``sigma(v_1 (x) ... (x) v_k) = v_{s^-1(1)} (x) ... (x) v_{s^-1(k)}``."""
        k = len(sigma)
        inv = sigma.inverse()
        entries = {}
        for c in itertools.product(range(d), repeat=k):
            row = tuple(c[inv[l] - 1] for l in range(k))
            entries[(row, c)] = 1
        return cls(d, k, entries)

    @classmethod
    def from_group_algebra(cls, a: GroupAlgebraElement, d: int) -> "TensorOperator":
        out = cls(d, a.k)
        for sigma, c in a.terms.items():
            out = out + cls.from_permutation(sigma, d).scale(c)
        return out

    @classmethod
    def elementary(cls, d: int, rows, cols) -> "TensorOperator":
        """``e_{r_1 c_1} (x) ... (x) e_{r_k c_k}``."""
        rows, cols = tuple(rows), tuple(cols)
        if len(rows) != len(cols):
            raise ValueError("row and column multi-indices differ in length")
        return cls(d, len(rows), {(rows, cols): 1})

    @classmethod
    def kron(cls, matrices) -> "TensorOperator":
        """``X_1 (x) ... (x) X_k``."""
        matrices = list(matrices)
        d = matrices[0].d
        entries = {((), ()): 1}
        for X in matrices:
            if X.d != d:
                raise ValueError("matrices of different sizes")
            nxt = {}
            for (r, c), u in entries.items():
                for (i, j), v in X.entries.items():
                    nxt[(r + (i,), c + (j,))] = u * v
            entries = nxt
        return cls(d, len(matrices), entries)

    def _check(self, other: "TensorOperator") -> None:
        if (self.d, self.k) != (other.d, other.k):
            raise ValueError("operators on different tensor spaces")

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        self._check(other)
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out.get(key, 0) + v
        return TensorOperator(self.d, self.k, out)

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        return self + other.scale(-1)

    def scale(self, c) -> "TensorOperator":
        return TensorOperator(self.d, self.k, {key: c * v for key, v in self.entries.items()})

    def compose(self, other: "TensorOperator") -> "TensorOperator":
        """``self o other``."""
        self._check(other)
        rows = defaultdict(list)
        for (j, l), v in other.entries.items():
            rows[j].append((l, v))
        out: dict = defaultdict(int)
        for (i, j), u in self.entries.items():
            for l, v in rows.get(j, ()):
                out[(i, l)] += u * v
        return TensorOperator(self.d, self.k, out)

    __matmul__ = compose

    def trace(self):
        return sum((v for (r, c), v in self.entries.items() if r == c), 0)

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (self.d, self.k) == (other.d, other.k) and self.entries == other.entries

    def __hash__(self):
        return hash((self.d, self.k, frozenset(self.entries.items())))

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __repr__(self) -> str:
        return f"TensorOperator(d={self.d}, k={self.k}, nnz={len(self.entries)})"
