"""Multilinear tensor polynomials in matrix variables, alternation, the
exterior invariants ``T_{2i-1}`` and ``T_d``, the operator ``G_d`` and the
Formanek central polynomial.

Alternations over ``n`` variables are evaluated by a dynamic program over
subsets: filling the slots of the monomials left to right, the sign change
from placing variable ``v`` is ``(-1)^{#used variables > v}``, which depends
only on the set already used. Partial products with the same used set are
summed, so the cost is ``2^n * n`` sparse updates instead of ``n!``.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .linalg import Matrix, TensorOperator
from .partitions import CapacityError
from .permutations import Permutation, all_permutations
from .weingarten import wg_characters

__all__ = [
    "MatrixTuple",
    "TensorMonomialPolynomial",
    "evaluate",
    "alternate",
    "standard_polynomial",
    "t_odd",
    "script_T_d",
    "script_T_d_wedge",
    "determinant_of_matrices",
    "elementary_tuple",
    "constant_C_d",
    "c_d_magnitude",
    "g_d",
    "verify_forgz",
    "immo_values",
    "formanek_F",
    "formanek_coefficient",
    "formanek_verify",
    "MAX_FORMANEK_D",
]

MAX_FORMANEK_D = 3


class MatrixTuple(tuple):
    """Tuple of square matrices of one common size ``d``."""

    def __new__(cls, matrices):
        matrices = tuple(matrices)
        if not matrices:
            raise ValueError("empty matrix tuple")
        d = matrices[0].d
        if any(m.d != d for m in matrices):
            raise ValueError("matrices of different sizes")
        return super().__new__(cls, matrices)

    @property
    def d(self) -> int:
        return self[0].d


def elementary_tuple(d: int) -> MatrixTuple:
    """``(e_11, e_12, ..., e_1d, e_21, ..., e_dd)``; its determinant is 1."""
    return MatrixTuple(Matrix.elementary(d, i, j) for i in range(d) for j in range(d))


def _as_tuple(Y) -> MatrixTuple:
    return Y if isinstance(Y, MatrixTuple) else MatrixTuple(Y)


# --- literal tensor polynomials ---------------------------------------------


class TensorMonomialPolynomial:
    """``sum c * w_1 (x) ... (x) w_k`` where each ``w`` is a word in the
    variables ``1..n`` (the empty word stands for the identity matrix)."""

    __slots__ = ("k", "n", "terms")

    def __init__(self, k: int, n: int, terms: dict | None = None):
        self.k = k
        self.n = n
        clean = {}
        for words, c in (terms or {}).items():
            words = tuple(tuple(w) for w in words)
            if len(words) != k:
                raise ValueError(f"term {words} does not have {k} tensor factors")
            if any(not 1 <= v <= n for w in words for v in w):
                raise ValueError(f"term {words} uses a variable outside 1..{n}")
            if c:
                clean[words] = clean.get(words, 0) + c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def monomial(cls, words, n: int | None = None, coef=1) -> "TensorMonomialPolynomial":
        words = tuple(tuple(w) for w in words)
        n = max((v for w in words for v in w), default=0) if n is None else n
        return cls(len(words), n, {words: coef})

    def degree_in(self, v: int) -> set[int]:
        return {sum(w.count(v) for w in words) for words in self.terms}

    def is_multilinear_in(self, variables) -> bool:
        return all(self.degree_in(v) <= {1} for v in variables)

    def __add__(self, other: "TensorMonomialPolynomial") -> "TensorMonomialPolynomial":
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError("incompatible polynomials")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return TensorMonomialPolynomial(self.k, self.n, out)

    def scale(self, c) -> "TensorMonomialPolynomial":
        return TensorMonomialPolynomial(self.k, self.n, {w: c * v for w, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorMonomialPolynomial):
            return NotImplemented
        return (self.k, self.n) == (other.k, other.n) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"TensorMonomialPolynomial(k={self.k}, n={self.n}, terms={len(self.terms)})"


def _word_product(word, X: MatrixTuple) -> Matrix:
    if not word:
        return Matrix.identity(X.d)
    M = X[word[0] - 1]
    for v in word[1:]:
        M = M @ X[v - 1]
    return M


def evaluate(p: TensorMonomialPolynomial, X) -> TensorOperator:
    """Substitute the matrices ``X`` for the variables of ``p``."""
    X = _as_tuple(X)
    if len(X) != p.n:
        raise ValueError(f"polynomial has {p.n} variables, got {len(X)} matrices")
    out = TensorOperator.zero(X.d, p.k)
    for words, c in p.terms.items():
        out = out + TensorOperator.kron(_word_product(w, X) for w in words).scale(c)
    return out


def alternate(p: TensorMonomialPolynomial, variables: Sequence[int] | None = None) -> TensorMonomialPolynomial:
    """``sum_sigma eps(sigma) p(x_sigma(.))`` over permutations of
    ``variables`` (all variables by default), without ``1/m!``."""
    variables = list(range(1, p.n + 1)) if variables is None else list(variables)
    if len(set(variables)) != len(variables):
        raise ValueError("repeated variable in alternation")
    if not p.is_multilinear_in(variables):
        raise ValueError("alternation needs a polynomial multilinear in the alternated variables")
    out: dict = defaultdict(int)
    for perm in itertools.permutations(range(len(variables))):
        sign = Permutation._raw(x + 1 for x in perm).sign
        sub = {variables[i]: variables[perm[i]] for i in range(len(variables))}
        for words, c in p.terms.items():
            new = tuple(tuple(sub.get(v, v) for v in w) for w in words)
            out[new] += sign * c
    return TensorMonomialPolynomial(p.k, p.n, out)


def standard_polynomial(m: int) -> TensorMonomialPolynomial:
    """``St_m = sum eps(sigma) x_sigma(1) ... x_sigma(m)`` with ``k = 1``."""
    return alternate(TensorMonomialPolynomial.monomial([tuple(range(1, m + 1))], m))


# --- subset dynamic programs --------------------------------------------------


def _higher(mask: int, v: int) -> int:
    return bin(mask >> (v + 1)).count("1")


def _alt_trace_product(Y: MatrixTuple, block_sizes: Sequence[int]):
    """``Alt_Y prod_b tr(product of the variables of block b)``."""
    n = len(Y)
    if sum(block_sizes) != n:
        raise ValueError("block sizes must add up to the number of variables")
    ends = set(itertools.accumulate(block_sizes))
    starts = {0} | ends
    # state: mask -> {(i, j) or None: coefficient}; None marks a block start
    layer: dict = {0: {None: Fraction(1)}}
    for pos in range(n):
        nxt: dict = defaultdict(lambda: defaultdict(int))
        for mask, partial in layer.items():
            for v in range(n):
                if mask >> v & 1:
                    continue
                sign = -1 if _higher(mask, v) % 2 else 1
                target = nxt[mask | 1 << v]
                ents = Y[v].entries
                if pos in starts:
                    base = partial[None]
                    for (i, j), y in ents.items():
                        target[(i, j)] += sign * base * y
                else:
                    for (i, j), c in partial.items():
                        for (jj, l), y in ents.items():
                            if jj == j:
                                target[(i, l)] += sign * c * y
        layer = {}
        for mask, partial in nxt.items():
            if pos + 1 in ends:
                s = sum((c for (i, j), c in partial.items() if i == j), Fraction(0))
                if s:
                    layer[mask] = {None: s}
            else:
                part = {key: c for key, c in partial.items() if c}
                if part:
                    layer[mask] = part
    return layer.get((1 << n) - 1, {None: Fraction(0)})[None]


def t_odd(i: int, Y) -> Fraction:
    """``T_{2i-1}(Y) = tr(St_{2i-1}(Y_1, ..., Y_{2i-1}))``."""
    Y = _as_tuple(Y)
    if len(Y) != 2 * i - 1:
        raise ValueError(f"T_{2 * i - 1} takes {2 * i - 1} matrices, got {len(Y)}")
    return _alt_trace_product(Y, [2 * i - 1])


def _block_sizes(d: int) -> list[int]:
    return [2 * i - 1 for i in range(1, d + 1)]


def _check_square_count(Y: MatrixTuple) -> int:
    d = Y.d
    if len(Y) != d * d:
        raise ValueError(f"need {d * d} matrices of size {d}, got {len(Y)}")
    return d


def script_T_d(Y) -> Fraction:
    """``T_1 ^ T_3 ^ ... ^ T_{2d-1}`` at ``d^2`` matrices of size ``d``,
    i.e. ``Alt_Y prod_i tr(m_i(Y))``."""
    Y = _as_tuple(Y)
    d = _check_square_count(Y)
    if d > 4:
        raise CapacityError("script_T_d supports d <= 4")
    return _alt_trace_product(Y, _block_sizes(d))


def script_T_d_wedge(Y) -> Fraction:
    """The same invariant as a literal normalized wedge product:
    ``1/prod (2i-1)! * sum_sigma eps(sigma) prod_i T_{2i-1}(block i of Y_sigma)``.
    Brute force; ``d <= 2`` only."""
    Y = _as_tuple(Y)
    d = _check_square_count(Y)
    if d > 2:
        raise CapacityError("the literal wedge route supports d <= 2")
    sizes = _block_sizes(d)
    norm = math.prod(math.factorial(s) for s in sizes)
    total = Fraction(0)
    for perm in all_permutations(d * d):
        val = Fraction(perm.sign)
        start = 0
        for i, s in enumerate(sizes, start=1):
            val *= _literal_t_odd([Y[perm[start + t] - 1] for t in range(s)])
            start += s
            if not val:
                break
        total += val
    return total / norm


def _literal_t_odd(mats) -> Fraction:
    m = len(mats)
    total = Fraction(0)
    for perm in all_permutations(m):
        M = mats[perm[0] - 1]
        for x in perm[1:]:
            M = M @ mats[x - 1]
        total += perm.sign * M.trace()
    return total


def determinant_of_matrices(Y) -> Fraction:
    """``det(Y_1, ..., Y_{d^2})`` with each ``Y_v`` flattened row by row
    into a column of a ``d^2 x d^2`` matrix."""
    Y = _as_tuple(Y)
    d = _check_square_count(Y)
    n = d * d
    rows = [[QQ(0)] * n for _ in range(n)]
    for v, M in enumerate(Y):
        for (i, j), c in M.entries.items():
            c = Fraction(c)
            rows[i * d + j][v] = QQ(c.numerator, c.denominator)
    det = DomainMatrix(rows, (n, n), QQ).det()
    return Fraction(int(det.numerator), int(det.denominator))


def c_d_magnitude(d: int) -> int:
    """``1! 3! ... (2d-1)! / (1! 2! ... (d-1)!)``."""
    num = math.prod(math.factorial(2 * i - 1) for i in range(1, d + 1))
    den = math.prod(math.factorial(i) for i in range(1, d))
    return num // den


def constant_C_d(d: int) -> Fraction:
    """``T_d(Y) / det(Y)`` at the elementary tuple, sign included."""
    E = elementary_tuple(d)
    return script_T_d(E) / determinant_of_matrices(E)


# --- G_d ----------------------------------------------------------------------


def g_d(Y) -> TensorOperator:
    """``G_d(Y) = Alt_Y (m_1(Y) (x) ... (x) m_d(Y))`` on ``V^{(x)d}``."""
    Y = _as_tuple(Y)
    d = _check_square_count(Y)
    if d > MAX_FORMANEK_D:
        raise CapacityError(f"g_d supports d <= {MAX_FORMANEK_D}")
    n = d * d
    ends = set(itertools.accumulate(_block_sizes(d)))
    # state: mask -> {(rows, cols, current (i, j) or None): coefficient}
    layer: dict = {0: {((), (), None): Fraction(1)}}
    for pos in range(n):
        nxt: dict = defaultdict(lambda: defaultdict(int))
        for mask, partial in layer.items():
            for v in range(n):
                if mask >> v & 1:
                    continue
                sign = -1 if _higher(mask, v) % 2 else 1
                target = nxt[mask | 1 << v]
                ents = Y[v].entries
                for (rows, cols, cur), c in partial.items():
                    for (a, b), y in ents.items():
                        if cur is None:
                            target[(rows, cols, (a, b))] += sign * c * y
                        elif cur[1] == a:
                            target[(rows, cols, (cur[0], b))] += sign * c * y
        layer = {}
        for mask, partial in nxt.items():
            closed: dict = defaultdict(int)
            for (rows, cols, cur), c in partial.items():
                if not c:
                    continue
                if pos + 1 in ends:
                    closed[(rows + (cur[0],), cols + (cur[1],), None)] += c
                else:
                    closed[(rows, cols, cur)] += c
            closed = {key: c for key, c in closed.items() if c}
            if closed:
                layer[mask] = closed
    final = layer.get((1 << n) - 1, {})
    return TensorOperator(d, d, {(r, c): v for (r, c, _), v in final.items()})


@dataclass
class ForgzReport:
    d: int
    T: Fraction
    G: TensorOperator
    expected: TensorOperator
    phi_is_T_times_one: bool

    @property
    def passed(self) -> bool:
        return self.G == self.expected and self.phi_is_T_times_one


def verify_forgz(d: int, Y=None) -> ForgzReport:
    """Check ``G_d(Y) = T_d(Y) Wg(d, d)`` as operators and
    ``Phi(G_d(Y)) = T_d(Y) * 1`` (elementary tuple by default)."""
    from .algebra import GroupAlgebraElement
    from .integrals import phi_map

    if d > MAX_FORMANEK_D:
        raise CapacityError(f"verify_forgz supports d <= {MAX_FORMANEK_D}")
    Y = elementary_tuple(d) if Y is None else _as_tuple(Y)
    T = script_T_d(Y)
    G = g_d(Y)
    wg = wg_characters(d, d)
    expected = TensorOperator.from_group_algebra(wg.element(), d).scale(T)
    phi_ok = phi_map(G) == GroupAlgebraElement.identity(d, T) if T else not phi_map(G)
    return ForgzReport(d, T, G, expected, phi_ok)


def immo_values(d: int, Y=None) -> dict:
    """``Alt_Y tr(sigma^{-1} o m_1 (x) ... (x) m_d)`` for each ``sigma`` in
    ``S_d``; expected ``T_d(Y)`` at the identity and 0 elsewhere."""
    Y = elementary_tuple(d) if Y is None else _as_tuple(Y)
    G = g_d(Y)
    return {
        s: TensorOperator.from_permutation(s.inverse(), d).compose(G).trace()
        for s in all_permutations(d)
    }


# --- Formanek ------------------------------------------------------------------


def formanek_F(X, Y) -> Matrix:
    """``Alt_X Alt_Y (m_1(X) m_1(Y) m_2(X) m_2(Y) ... m_d(X) m_d(Y))``."""
    X, Y = _as_tuple(X), _as_tuple(Y)
    d = _check_square_count(X)
    if _check_square_count(Y) != d:
        raise ValueError("X and Y have different sizes")
    if d > MAX_FORMANEK_D:
        raise CapacityError(f"formanek_F supports d <= {MAX_FORMANEK_D}")
    n = d * d
    # slot schedule: X block 1, Y block 1, X block 2, ...
    schedule = []
    for s in _block_sizes(d):
        schedule += [0] * s + [1] * s
    mats = (X, Y)
    # state: (maskX, maskY) -> {(i, j) or None: coefficient}
    layer: dict = {(0, 0): {None: Fraction(1)}}
    for who in schedule:
        nxt: dict = defaultdict(lambda: defaultdict(int))
        for masks, partial in layer.items():
            mask = masks[who]
            for v in range(n):
                if mask >> v & 1:
                    continue
                sign = -1 if _higher(mask, v) % 2 else 1
                new = list(masks)
                new[who] = mask | 1 << v
                target = nxt[tuple(new)]
                ents = mats[who][v].entries
                for cur, c in partial.items():
                    for (a, b), y in ents.items():
                        if cur is None:
                            target[(a, b)] += sign * c * y
                        elif cur[1] == a:
                            target[(cur[0], b)] += sign * c * y
        layer = {}
        for masks, partial in nxt.items():
            part = {key: c for key, c in partial.items() if c}
            if part:
                layer[masks] = part
    full = (1 << n) - 1
    return Matrix(d, layer.get((full, full), {}))


def formanek_coefficient(d: int) -> Fraction:
    """``(-1)^{d-1} / ((d!)^2 (2d-1))``."""
    return Fraction((-1) ** (d - 1), math.factorial(d) ** 2 * (2 * d - 1))


@dataclass
class FormanekReport:
    d: int
    F: Matrix
    T_X: Fraction
    T_Y: Fraction
    coefficient: Fraction
    expected_scalar: Fraction
    computed_scalar: Fraction | None
    trace: Fraction
    expected_trace: Fraction
    C_d: Fraction

    @property
    def passed(self) -> bool:
        return (
            self.computed_scalar is not None
            and self.computed_scalar == self.expected_scalar
            and self.trace == self.expected_trace
        )


def formanek_verify(d: int, X=None, Y=None) -> FormanekReport:
    """Evaluate ``F(X, Y)`` (elementary tuples by default) and compare with
    ``(-1)^{d-1} / ((d!)^2 (2d-1)) T_d(X) T_d(Y) Id``."""
    if d > MAX_FORMANEK_D:
        raise CapacityError(f"formanek_verify supports d <= {MAX_FORMANEK_D}")
    X = elementary_tuple(d) if X is None else _as_tuple(X)
    Y = elementary_tuple(d) if Y is None else _as_tuple(Y)
    F = formanek_F(X, Y)
    tx, ty = script_T_d(X), script_T_d(Y)
    coef = formanek_coefficient(d)
    expected = coef * tx * ty
    diag = {F.entries.get((i, i), 0) for i in range(d)}
    off = any(i != j for (i, j) in F.entries)
    computed = Fraction(diag.pop()) if len(diag) == 1 and not off else None
    return FormanekReport(
        d=d,
        F=F,
        T_X=tx,
        T_Y=ty,
        coefficient=coef,
        expected_scalar=expected,
        computed_scalar=computed,
        trace=Fraction(F.trace()),
        expected_trace=d * expected,
        C_d=constant_C_d(d),
    )
