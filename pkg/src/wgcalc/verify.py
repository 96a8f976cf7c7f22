"""Acceptance criteria as callable checks.

Each check returns a :class:`CriterionResult`. ``level`` selects the scale:
``smoke`` runs reduced ranges, ``desk`` the full acceptance ranges, ``deep``
adds the stretch targets (Formanek at ``d = 3``, table scan to 12).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from sympy import Rational, integrate, symbols

from . import reference
from .algebra import ClassFunction, GroupAlgebraElement, class_collect
from .characters import (
    character_table,
    dim_irrep,
    orthogonality_defect,
    r_lambda,
    schur_dim,
)
from .connection import (
    brute_force_class_product,
    class_product,
    verify_collins_multiplicativity,
    top_coefficients,
)
from .integrals import MonomialSpec, haar_mc_oracle, monomial_integral, wg_via_monomial
from .partitions import Partition, partitions_of
from .permutations import all_permutations
from .ratfunc import D
from .tableaux import (
    good_permutations,
    longest_decreasing,
    rsk,
    rsk_inverse,
    straighten,
)
from .linalg import TensorOperator
from .tensorpoly import (
    c_d_magnitude,
    constant_C_d,
    formanek_verify,
    immo_values,
    verify_forgz,
)
from .weingarten import (
    conjecture_scan,
    elementary_jucys,
    jucys_factorization_check,
    novak_sign_check,
    scaled_table,
    wg_characters,
    wg_full_cycle,
    wg_oracle_linear,
)

__all__ = ["CriterionResult", "CRITERIA", "run_criterion", "run_all", "LEVELS", "MC_SPECS", "u2_analytic"]

LEVELS = ("smoke", "desk", "deep")


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    details: list = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} criterion {self.number}: {self.name}"


def _fail(details: list, msg: str) -> None:
    details.append(msg)


def _check_tables(level: str) -> list:
    out = []
    top = 5 if level == "smoke" else 8
    for d in range(2, top + 1):
        if scaled_table(d) != reference.SCALED_TABLES[d]:
            _fail(out, f"scaled table d={d} differs")
    return out


def _check_full_cycle(level: str) -> list:
    out = []
    top = 5 if level == "smoke" else 8
    for k in range(2, top + 1):
        sym = wg_characters(k, D)
        if sym[[k]] != wg_full_cycle(k):
            _fail(out, f"symbolic full cycle k={k}")
        scaled = math.factorial(k) ** 2 * wg_characters(k, k)[[k]]
        if scaled != Fraction((-1) ** (k + 1) * k, 2 * k - 1):
            _fail(out, f"d!^2 Wg(d,(d)) at d={k}: {scaled}")
    return out


def _check_oracle(level: str) -> list:
    out = []
    top = 5 if level == "smoke" else 8
    for k in range(1, top + 1):
        for d in (k, k + 3):
            if wg_characters(k, d).values != wg_oracle_linear(k, d).values:
                _fail(out, f"routes differ at k={k}, d={d}")
    return out


def _check_jucys(level: str) -> list:
    out = []
    top = 5 if level == "smoke" else 7
    for k in range(2, top + 1):
        if not jucys_factorization_check(k, D):
            _fail(out, f"factorization fails at k={k}")
        for i in range(k):
            cf = class_collect(elementary_jucys(k, i))
            want = {mu: 1 for mu in partitions_of(k) if mu.length == i}
            if cf.values != want:
                _fail(out, f"e_{i}(J) at k={k}")
    return out


def _check_top(level: str) -> list:
    out = []
    top = 6 if level == "smoke" else 8
    for k in range(1, top + 1):
        rep = verify_collins_multiplicativity(k)
        for m in rep.mismatches:
            _fail(out, f"k={k}: {m}")
    for k, ref in ((4, reference.TOP_S4), (5, reference.TOP_S5)):
        tc = top_coefficients(k)
        for mu, v in ref.items():
            if tc[mu] != v:
                _fail(out, f"C[{Partition(mu)}] = {tc[mu]}, expected {v}")
    return out


def _check_connection(level: str) -> list:
    out = []
    for (a, b), want in reference.S4_CONNECTION.items():
        got = class_product(a, b)
        if got != ClassFunction(4, want):
            _fail(out, f"S_4 product {a} * {b}: {got}")
    classes = [mu for mu in partitions_of(5) if mu.length > 0]
    for a in classes:
        for b in classes:
            want = reference.S5_TOP_PRODUCTS.get((tuple(a), tuple(b)))
            if want is None:
                want = reference.S5_TOP_PRODUCTS.get((tuple(b), tuple(a)), {})
            got = class_product(a, b, degenerate=True)
            if got != ClassFunction(5, want):
                _fail(out, f"S_5 top product {a} * {b}: {got}")
    top = 4 if level == "smoke" else 6
    for k in range(1, top + 1):
        for a in partitions_of(k):
            for b in partitions_of(k):
                if class_product(a, b) != brute_force_class_product(a, b):
                    _fail(out, f"character vs brute force at {a} * {b}")
    return out


def _check_signs(level: str) -> list:
    out = []
    top = 5 if level == "smoke" else 7
    for k in range(1, top + 1):
        for d in range(k, k + 5):
            rep = novak_sign_check(k, d)
            for v in rep.violations:
                _fail(out, f"sign at k={k}, d={d}: {v}")
            wg = wg_characters(k, d)
            one = wg[[1] * k]
            for mu, v in wg.values.items():
                if mu.length and not abs(v) < one:
                    _fail(out, f"|Wg({mu})| >= Wg(1) at k={k}, d={d}")
    return out


def _check_conjecture(level: str) -> list:
    top = {"smoke": 7, "desk": 10, "deep": 12}[level]
    rep = conjecture_scan(top)
    out = []
    for e in rep.entries:
        if not e.passed:
            _fail(out, f"d={e.d}: decreasing={e.decreasing}, divisibility={e.denominators_divide}")
    return out


def u2_analytic(spec: MonomialSpec) -> Fraction:
    """Integral over ``U(2)`` written as ``[[a, b], [-e^{it} conj b, e^{it} conj a]]``
    with ``|a|^2 = s`` uniform on ``[0, 1]`` and independent uniform phases.

    A monomial whose phases do not cancel integrates to 0.
    """
    if spec.d != 2 or not spec.balanced:
        raise ValueError("u2_analytic handles balanced monomials at d = 2")
    s = symbols("s")
    # entry -> (phase exponents of (arg a, arg b, t), sign)
    table = {
        (1, 1): ((1, 0, 0), 1),
        (1, 2): ((0, 1, 0), 1),
        (2, 1): ((0, -1, 1), -1),
        (2, 2): ((-1, 0, 1), 1),
    }
    weight = {1: 0, 2: 0}  # powers of |a| and |b| in the modulus
    phase = [0, 0, 0]
    sign = 1
    for conj, pairs in ((1, spec.u), (-1, spec.ubar)):
        for pr in pairs:
            ph, sg = table[pr]
            weight[1 if pr in ((1, 1), (2, 2)) else 2] += 1
            phase = [x + conj * y for x, y in zip(phase, ph)]
            sign *= sg
    if any(phase):
        return Fraction(0)
    expr = sign * s ** Rational(weight[1], 2) * (1 - s) ** Rational(weight[2], 2)
    val = integrate(expr, (s, 0, 1))
    return Fraction(int(val.p), int(val.q))


# fixed Monte Carlo specs at d = 2 and d = 3
MC_SPECS = [
    (2, "1,1", "1,1"),
    (2, "1,1 1,1", "1,1 1,1"),
    (2, "1,1 2,2", "1,2 2,1"),
    (2, "1,1 1,2", "1,1 1,2"),
    (2, "1,1 2,2", "1,1 2,2"),
    (3, "1,1", "1,1"),
    (3, "1,1 2,2", "1,1 2,2"),
    (3, "1,1 2,2", "1,2 2,1"),
    (3, "1,2 2,3 3,1", "1,2 2,3 3,1"),
    (3, "1,1 1,1 2,2", "1,1 1,1 2,2"),
]


def _check_haar(level: str) -> list:
    out = []
    worked = [
        ("1,1 2,2", "1,1 2,2", Fraction(1, 3)),
        ("1,1 1,2", "1,1 1,2", Fraction(1, 6)),
        ("1,1 2,2", "1,2 2,1", Fraction(-1, 6)),
        ("1,1", "1,1", Fraction(1, 2)),
    ]
    for u, ubar, value in worked:
        spec = MonomialSpec.parse(2, u, ubar)
        exact = monomial_integral(spec)
        if exact != value or u2_analytic(spec) != value:
            _fail(out, f"U(2) case {u} | {ubar}: exact {exact}, analytic {u2_analytic(spec)}")
    samples = 10_000 if level == "smoke" else 100_000
    for seed, (d, u, ubar) in enumerate(MC_SPECS):
        spec = MonomialSpec.parse(d, u, ubar)
        exact = monomial_integral(spec)
        est = haar_mc_oracle(spec, samples, seed=seed)
        if not est.within(exact, 4.0):
            _fail(out, f"MC {u} | {ubar} at d={d}: {est.mean} +- {est.stderr} vs {exact}")
    return out


def _check_wg_via_monomial(level: str) -> list:
    out = []
    for k in (2, 3):
        wg = wg_characters(k, 3)
        for tau in all_permutations(k):
            if wg_via_monomial(3, tau) != wg.of(tau):
                _fail(out, f"tau={tau} in S_{k}")
    return out


def _check_formanek(level: str) -> list:
    out = []
    dims = (1, 2, 3) if level == "deep" else (1, 2)
    for d in dims:
        c = constant_C_d(d)
        if abs(c) != c_d_magnitude(d):
            _fail(out, f"|C_{d}| = {abs(c)}, expected {c_d_magnitude(d)}")
        rep = formanek_verify(d)
        if not rep.passed:
            _fail(out, f"Formanek d={d}: F={rep.F}, expected scalar {rep.expected_scalar}")
        if not verify_forgz(d).passed:
            _fail(out, f"G_d = T_d Wg fails at d={d}")
        vals = immo_values(d)
        T = rep.T_Y
        for s, v in vals.items():
            if v != (T if s.is_identity() else 0):
                _fail(out, f"Alt tr(sigma^-1 o m) at sigma={s}: {v}")
    if formanek_verify(2).computed_scalar != -3:
        _fail(out, "F at d=2 is not -3 Id")
    return out


def _check_tableaux(level: str) -> list:
    out = []
    top = 5 if level == "smoke" else 7
    for n in range(1, top + 1):
        for s in all_permutations(n):
            P, Q = rsk(s)
            if rsk_inverse(P, Q) != s:
                _fail(out, f"RSK roundtrip fails at {s}")
            if P.shape.height != longest_decreasing(s):
                _fail(out, f"Schensted fails at {s}")
    for k in range(1, top + 1):
        for d in range(1, 5):
            count = len(good_permutations(k, d + 1))
            want = sum(dim_irrep(l) ** 2 for l in partitions_of(k) if l.height <= d)
            if count != want:
                _fail(out, f"basis count k={k}, d={d}: {count} vs {want}")
    import random

    rng = random.Random(7)
    perms = all_permutations(3)
    for _ in range(5):
        a = GroupAlgebraElement(3, {p: rng.randint(-4, 4) for p in perms})
        s = straighten(a, 2)
        if TensorOperator.from_group_algebra(a, 2) != TensorOperator.from_group_algebra(s, 2):
            _fail(out, f"straightening changes the operator for {a}")
    return out


def _check_characters(level: str) -> list:
    out = []
    top = 6 if level == "smoke" else 8
    for k in range(1, top + 1):
        if orthogonality_defect(k):
            _fail(out, f"orthogonality fails at k={k}")
        if sum(dim_irrep(l) ** 2 for l in partitions_of(k)) != math.factorial(k):
            _fail(out, f"sum of squared dimensions at k={k}")
        ct = character_table(k)
        for d in range(1, top + 1):
            for mu in ct.partitions:
                rhs = sum(
                    (schur_dim(l, d) * ct[l, mu] for l in ct.partitions if l.height <= d),
                    Fraction(0),
                )
                if rhs != d ** mu.height:
                    _fail(out, f"power-sum identity at k={k}, d={d}, mu={mu}")
        for lam in ct.partitions:
            lhs = schur_dim(lam, D) * math.factorial(k) / dim_irrep(lam)
            if lhs != r_lambda(lam, D):
                _fail(out, f"content identity at {lam}")
    return out


CRITERIA: dict[int, tuple[str, Callable[[str], list]]] = {
    1: ("scaled tables d=2..8", _check_tables),
    2: ("full-cycle closed form", _check_full_cycle),
    3: ("character route equals center linear system", _check_oracle),
    4: ("Jucys factorization and elementary symmetric functions", _check_jucys),
    5: ("top coefficients and Catalan products", _check_top),
    6: ("connection coefficient tables", _check_connection),
    7: ("sign pattern and dominance of Wg(d,1)", _check_signs),
    8: ("decreasing tables and common denominators", _check_conjecture),
    9: ("Haar monomial integrals", _check_haar),
    10: ("Wg from a monomial integral", _check_wg_via_monomial),
    11: ("Formanek central polynomial", _check_formanek),
    12: ("tableaux suite", _check_tableaux),
    13: ("character infrastructure", _check_characters),
}


def run_criterion(number: int, level: str = "desk") -> CriterionResult:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    name, fn = CRITERIA[number]
    t0 = time.perf_counter()
    details = fn(level)
    return CriterionResult(number, name, not details, details, time.perf_counter() - t0)


def run_all(level: str = "desk") -> list[CriterionResult]:
    return [run_criterion(n, level) for n in CRITERIA]
