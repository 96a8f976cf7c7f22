"""Standard tableaux, Robinson-Schensted-Knuth, d-good permutations and
straightening, content vectors.

RSK uses row insertion: a letter bumps the leftmost entry strictly greater
than itself. Column-oriented descriptions produce the transposed pile; only
shapes and bijectivity are compared across conventions.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .algebra import GroupAlgebraElement
from .partitions import CapacityError, Partition, partitions_of
from .permutations import Permutation, all_permutations

__all__ = [
    "StandardTableau",
    "Tableau",
    "enumerate_syt",
    "rsk",
    "rsk_inverse",
    "longest_decreasing",
    "is_d_good",
    "good_permutations",
    "first_descending_subsequence",
    "straighten",
    "content_vector",
    "tableau_from_contents",
    "restrict",
    "all_syt",
    "MAX_SYT_SIZE",
]

MAX_SYT_SIZE = 12


@dataclass(frozen=True)
class Tableau:
    """Rows of a (semi)standard filling, top row first."""

    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        lengths = [len(r) for r in self.rows]
        if any(n == 0 for n in lengths) or lengths != sorted(lengths, reverse=True):
            raise ValueError(f"row lengths {lengths} do not form a partition")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entry(self, i: int, j: int):
        """Entry in row ``i``, column ``j`` (1-based)."""
        return self.rows[i - 1][j - 1]

    def columns(self) -> list[tuple]:
        return [
            tuple(r[j] for r in self.rows if len(r) > j)
            for j in range(len(self.rows[0]) if self.rows else 0)
        ]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


class StandardTableau(Tableau):
    """Filling of a Young diagram by ``1..n`` increasing along rows and
    down columns."""

    def __post_init__(self):
        super().__post_init__()
        flat = sorted(x for r in self.rows for x in r)
        if flat != list(range(1, len(flat) + 1)):
            raise ValueError("entries must be 1..n, each once")
        for r in self.rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not increasing")
        for c in self.columns():
            if any(a >= b for a, b in zip(c, c[1:])):
                raise ValueError(f"column {c} is not increasing")

    def position(self, x: int) -> tuple[int, int]:
        for i, r in enumerate(self.rows, start=1):
            if x in r:
                return i, r.index(x) + 1
        raise KeyError(x)


@lru_cache(maxsize=None)
def _syt(shape: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = sum(shape)
    if n == 0:
        return ((),)
    out = []
    # n sits in a removable corner
    for i, part in enumerate(shape):
        if part and (i + 1 == len(shape) or shape[i + 1] < part):
            smaller = list(shape)
            smaller[i] -= 1
            while smaller and smaller[-1] == 0:
                smaller.pop()
            for rows in _syt(tuple(smaller)):
                rows = [list(r) for r in rows] + [[] for _ in range(len(shape) - len(rows))]
                rows[i].append(n)
                out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def enumerate_syt(shape) -> list[StandardTableau]:
    """All standard tableaux of the given shape."""
    shape = Partition(shape)
    if shape.size > MAX_SYT_SIZE:
        raise CapacityError(f"enumerate_syt supports size <= {MAX_SYT_SIZE}")
    return [StandardTableau(rows) for rows in _syt(tuple(shape))]


# --- RSK ----------------------------------------------------------------------


def rsk(word: Sequence) -> tuple[Tableau, StandardTableau]:
    """Row-insertion RSK of a word (or a permutation in one-line form).

    Returns the insertion tableau ``P`` and the recording tableau ``Q``.
    """
    P: list[list] = []
    Q: list[list] = []
    for step, x in enumerate(word, start=1):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([step])
                break
            r = P[row]
            pos = bisect.bisect_right(r, x)
            if pos == len(r):
                r.append(x)
                Q[row].append(step)
                break
            r[pos], x = x, r[pos]
            row += 1
    P_tab = StandardTableau(P) if isinstance(word, Permutation) else Tableau(P)
    return P_tab, StandardTableau(Q)


def rsk_inverse(P: Tableau, Q: StandardTableau):
    """Inverse of :func:`rsk`. Returns a :class:`Permutation` when ``P`` is
    standard and a list of letters otherwise."""
    if P.shape != Q.shape:
        raise ValueError(f"shapes differ: {P.shape} vs {Q.shape}")
    rows = [list(r) for r in P.rows]
    n = Q.size
    out = [None] * n
    for step in range(n, 0, -1):
        i, j = Q.position(step)
        row = i - 1
        x = rows[row].pop()
        if j != len(rows[row]) + 1:
            raise ValueError("recording tableau does not match insertion tableau")
        for r in range(row - 1, -1, -1):
            cur = rows[r]
            pos = bisect.bisect_left(cur, x) - 1
            cur[pos], x = x, cur[pos]
        out[step - 1] = x
        while rows and not rows[-1]:
            rows.pop()
    if isinstance(P, StandardTableau):
        return Permutation(out)
    return out


def longest_decreasing(word: Sequence) -> int:
    """Length of a longest strictly decreasing subsequence (patience sort)."""
    # tails[i]: largest possible last letter of a decreasing run of length i+1
    tails: list = []
    for x in word:
        lo, hi = 0, len(tails)
        while lo < hi:
            mid = (lo + hi) // 2
            if tails[mid] > x:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(tails):
            tails.append(x)
        else:
            tails[lo] = x
    return len(tails)


def is_d_good(sigma: Sequence[int], d: int) -> bool:
    """No decreasing subsequence of length ``d``."""
    return longest_decreasing(sigma) <= d - 1


def good_permutations(k: int, d: int) -> list[Permutation]:
    return [p for p in all_permutations(k) if is_d_good(p, d)]


# --- straightening ----------------------------------------------------------------


def first_descending_subsequence(sigma: Sequence[int], length: int) -> tuple[int, ...] | None:
    """Lexicographically first tuple of positions ``i_1 < ... < i_length``
    (0-based) with strictly decreasing values, or ``None``."""
    n = len(sigma)
    # best[i]: longest decreasing run starting at i
    best = [1] * n
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            if sigma[j] < sigma[i] and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    chosen: list[int] = []
    start, bound = 0, None
    for need in range(length, 0, -1):
        for i in range(start, n):
            if (bound is None or sigma[i] < bound) and best[i] >= need:
                chosen.append(i)
                start, bound = i + 1, sigma[i]
                break
        else:
            return None
    return tuple(chosen)


def _signed_rearrangements(m: int):
    from itertools import permutations

    for perm in permutations(range(m)):
        if perm == tuple(range(m)):
            continue
        yield perm, Permutation._raw(x + 1 for x in perm).sign


def straighten(a: GroupAlgebraElement, d: int) -> GroupAlgebraElement:
    """Rewrite ``a`` on ``(d+1)``-good permutations without changing its
    action on ``V^{(x)k}``, ``dim V = d``.

    The lexicographically largest bad term ``sigma`` is replaced by
    ``-sum_{pi != 1} eps(pi) pi sigma`` where ``pi`` permutes the values on the
    first ``(d+1)``-descending subsequence; every new term is lexicographically
    smaller, so the loop terminates. Integer coefficients stay integers.
    """
    if d < 1:
        raise ValueError("d must be positive")
    terms = dict(a.terms)
    m = d + 1
    rearr = list(_signed_rearrangements(m))
    while True:
        bad = [p for p, c in terms.items() if c != 0 and longest_decreasing(p) > d]
        if not bad:
            break
        sigma = max(bad)
        c = terms.pop(sigma)
        pos = first_descending_subsequence(sigma, m)
        vals = [sigma[i] for i in pos]
        for perm, sign in rearr:
            img = list(sigma)
            for t, i in enumerate(pos):
                img[i] = vals[perm[t]]
            tau = Permutation._raw(img)
            terms[tau] = terms.get(tau, 0) - sign * c
    return GroupAlgebraElement(a.k, {p: c for p, c in terms.items() if c != 0})


# --- contents -----------------------------------------------------------------------


def content_vector(T: StandardTableau) -> tuple[int, ...]:
    """``c_T(i) = j - i`` for the box ``(i, j)`` holding ``i``."""
    out = [0] * T.size
    for i, r in enumerate(T.rows, start=1):
        for j, x in enumerate(r, start=1):
            out[x - 1] = j - i
    return tuple(out)


def tableau_from_contents(contents: Sequence[int]) -> StandardTableau:
    """Rebuild the tableau: each entry goes to the first free box of its
    diagonal, which must be addable."""
    rows: list[list[int]] = []
    filled: dict[int, int] = {}
    for x, c in enumerate(contents, start=1):
        i = max(1, 1 - c) + filled.get(c, 0)
        j = i + c
        if i > len(rows) + 1:
            raise ValueError(f"content sequence inconsistent at entry {x}")
        row_len = len(rows[i - 1]) if i <= len(rows) else 0
        above = len(rows[i - 2]) if i >= 2 else None
        if row_len != j - 1 or (above is not None and above < j):
            raise ValueError(f"content sequence inconsistent at entry {x}")
        if i > len(rows):
            rows.append([])
        rows[i - 1].append(x)
        filled[c] = filled.get(c, 0) + 1
    return StandardTableau(rows)


def restrict(T: StandardTableau, j: int) -> StandardTableau | None:
    """Empty the boxes holding entries larger than ``j``."""
    rows = [[x for x in r if x <= j] for r in T.rows]
    rows = [r for r in rows if r]
    return StandardTableau(rows) if rows else None


def all_syt(n: int) -> Iterator[StandardTableau]:
    for lam in partitions_of(n):
        yield from enumerate_syt(lam)
