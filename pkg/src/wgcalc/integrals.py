"""Haar-unitary monomial integrals.

For ``u = (u_{ab})`` Haar distributed in ``U(d)``::

    int prod_l u_{j_l h_l} conj(u_{i_l p_l}) du
        = sum_{gamma, sigma in S_k} [j_l = i_{gamma(l)}] [h_l = p_{sigma(l)}]
          Wg(d, gamma sigma^{-1})

The integral vanishes unless there are as many barred as unbarred factors.
Indices of :class:`MonomialSpec` are 1-based, as in matrix notation.

The Monte Carlo oracle at the bottom is the only floating-point code in the
package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import GroupAlgebraElement, ga_multiply
from .linalg import TensorOperator
from .partitions import CapacityError
from .permutations import Permutation, all_permutations
from .ratfunc import RationalFunction
from .weingarten import wg_characters

__all__ = [
    "MonomialSpec",
    "MCEstimate",
    "monomial_integral",
    "matching_permutations",
    "phi_map",
    "projection_E",
    "wg_via_monomial",
    "trace_of_twisted",
    "cycle_trace_product",
    "haar_unitary",
    "haar_mc_oracle",
    "MAX_PAIRS",
]

# Upper bound on the number of (gamma, sigma) pairs summed exactly.
MAX_PAIRS = 5_000_000


@dataclass(frozen=True)
class MonomialSpec:
    """``prod u_{j_l h_l} * prod conj(u_{i_l p_l})``.

    ``u`` lists the ``(j, h)`` pairs of the plain factors and ``ubar`` the
    ``(i, p)`` pairs of the conjugated ones. ``d`` may be an integer or the
    symbol :data:`wgcalc.ratfunc.D`.
    """

    d: object
    u: tuple
    ubar: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(tuple(int(x) for x in pr) for pr in self.u))
        object.__setattr__(self, "ubar", tuple(tuple(int(x) for x in pr) for pr in self.ubar))
        symbolic = isinstance(self.d, RationalFunction)
        if not symbolic and (not isinstance(self.d, int) or self.d < 1):
            raise ValueError("d must be a positive integer or the symbol D")
        for pr in self.u + self.ubar:
            if len(pr) != 2:
                raise ValueError(f"index pair {pr} must have two entries")
            for x in pr:
                if x < 1 or (not symbolic and x > self.d):
                    raise ValueError(f"index {x} outside 1..{self.d}")

    @classmethod
    def parse(cls, d, u: str, ubar: str) -> "MonomialSpec":
        """Parse ``"1,1 2,2"`` style index lists."""

        def pairs(text):
            return tuple(tuple(int(x) for x in tok.split(",")) for tok in text.split())

        return cls(d, pairs(u), pairs(ubar))

    @classmethod
    def from_tuples(cls, d, j, h, i, p) -> "MonomialSpec":
        return cls(d, tuple(zip(j, h)), tuple(zip(i, p)))

    @property
    def k(self) -> int:
        return len(self.u)

    @property
    def balanced(self) -> bool:
        return len(self.u) == len(self.ubar)

    def relabel(self, tau: Permutation) -> "MonomialSpec":
        """Permute the factors of both kinds by the same ``tau``."""
        return MonomialSpec(
            self.d,
            tuple(self.u[tau(l) - 1] for l in range(1, self.k + 1)),
            tuple(self.ubar[tau(l) - 1] for l in range(1, self.k + 1)),
        )


def matching_permutations(target: Sequence[int], source: Sequence[int]) -> list[Permutation]:
    """All ``g`` with ``source[g(l)] == target[l]`` for every ``l``.

    Built by backtracking, so only the matching coset is visited.
    """
    k = len(target)
    positions: dict[int, list[int]] = {}
    for m, x in enumerate(source, start=1):
        positions.setdefault(x, []).append(m)
    if sorted(target) != sorted(source):
        return []
    out = []
    img = [0] * k
    used = [False] * (k + 1)

    def rec(l):
        if l == k:
            out.append(Permutation._raw(img))
            return
        for m in positions.get(target[l], ()):
            if not used[m]:
                used[m] = True
                img[l] = m
                rec(l + 1)
                used[m] = False

    rec(0)
    return out


def monomial_integral(spec: MonomialSpec):
    """Exact value of the Haar integral described by ``spec``."""
    if not spec.balanced:
        return Fraction(0)
    k = spec.k
    if k == 0:
        return Fraction(1)
    j = [a for a, _ in spec.u]
    h = [b for _, b in spec.u]
    i = [a for a, _ in spec.ubar]
    p = [b for _, b in spec.ubar]
    gammas = matching_permutations(j, i)
    sigmas = matching_permutations(h, p)
    if not gammas or not sigmas:
        return Fraction(0)
    if len(gammas) * len(sigmas) > MAX_PAIRS:
        raise CapacityError(f"{len(gammas) * len(sigmas)} permutation pairs exceed {MAX_PAIRS}")
    wg = wg_characters(k, spec.d)
    counts: dict = {}
    for s in sigmas:
        s_inv = s.inverse()
        for g in gammas:
            mu = (g * s_inv).cycle_type()
            counts[mu] = counts.get(mu, 0) + 1
    return sum((n * wg.values[mu] for mu, n in counts.items()), Fraction(0))


def wg_via_monomial(d: int, tau: Permutation):
    """``Wg(d, tau)`` as the integral with ``i = h = p = (1..k)`` and
    ``j_l = tau(l)``."""
    k = len(tau)
    if k > d:
        raise ValueError(f"need k <= d, got k={k}, d={d}")
    ident = list(range(1, k + 1))
    return monomial_integral(MonomialSpec.from_tuples(d, list(tau), ident, ident, ident))


# --- Phi and the equivariant projection ---------------------------------------


def phi_map(A: TensorOperator) -> GroupAlgebraElement:
    """``Phi(A) = sum_sigma tr(A o sigma^{-1}) sigma``."""
    k = A.k
    terms = {}
    for sigma in all_permutations(k):
        # tr(A o sigma^-1) = sum_c A[c, c o sigma]
        tot = 0
        for (r, c), v in A.entries.items():
            if all(c[l] == r[sigma[l] - 1] for l in range(k)):
                tot += v
        if tot:
            terms[sigma] = tot
    return GroupAlgebraElement(k, terms)


def projection_E(A: TensorOperator) -> GroupAlgebraElement:
    """``E(A) = Wg * Phi(A)``, the Haar average of ``U A U^{-1}``.

    For ``d < k`` the Weingarten element is the restricted one, so the
    result is one representative modulo the kernel of the action on
    ``V^{(x)k}``.
    """
    wg = wg_characters(A.k, A.d)
    return ga_multiply(wg.element(), phi_map(A))


def trace_of_twisted(sigma: Permutation, matrices) -> object:
    """``tr(sigma^{-1} o X_1 (x) ... (x) X_k)`` computed on the tensor space."""
    matrices = list(matrices)
    d = matrices[0].d
    op = TensorOperator.from_permutation(sigma.inverse(), d).compose(TensorOperator.kron(matrices))
    return op.trace()


def cycle_trace_product(sigma: Permutation, matrices) -> object:
    """``prod over cycles (i_1 .. i_r) of tr(X_{i_1} X_{i_2} ... X_{i_r})``
    with ``sigma(i_t) = i_{t+1}``."""
    matrices = list(matrices)
    total = 1
    for cyc in sigma.cycles():
        M = matrices[cyc[0] - 1]
        for x in cyc[1:]:
            M = M @ matrices[x - 1]
        total *= M.trace()
    return total


# --- Monte Carlo oracle ---------------------------------------------------------


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    stderr: float
    samples: int

    def within(self, exact, n_sigma: float = 4.0) -> bool:
        return abs(self.mean - float(exact)) <= n_sigma * self.stderr + 1e-12


def haar_unitary(d: int, rng: np.random.Generator, size: int | None = None) -> np.ndarray:
    """Haar unitaries from the QR decomposition of complex Ginibre matrices,
    with the phases of ``R``'s diagonal moved into ``Q``."""
    shape = (d, d) if size is None else (size, d, d)
    z = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r, axis1=-2, axis2=-1)
    phase = diag / np.abs(diag)
    return q * phase[..., None, :]


def haar_mc_oracle(spec: MonomialSpec, samples: int, seed: int = 0,
                   chunk: int = 20_000) -> MCEstimate:
    """Sample mean and standard error of the monomial over Haar unitaries."""
    if isinstance(spec.d, RationalFunction):
        raise ValueError("Monte Carlo needs an integer d")
    if samples < 2:
        raise ValueError("need at least two samples")
    rng = np.random.default_rng(seed)
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < samples:
        n = min(chunk, samples - done)
        U = haar_unitary(spec.d, rng, n)
        val = np.ones(n, dtype=complex)
        for a, b in spec.u:
            val *= U[:, a - 1, b - 1]
        for a, b in spec.ubar:
            val *= np.conj(U[:, a - 1, b - 1])
        re = val.real
        total += re.sum()
        total_sq += (re * re).sum()
        done += n
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    return MCEstimate(float(mean), float(np.sqrt(var / samples)), samples)
