"""``wgcalc`` command line.

Every subcommand prints one report, JSON by default (``--text`` for a
readable layout). JSON is canonical: sorted keys, rationals as ``"p/q"``
strings. Exit codes: 0 success, 1 a requested check failed, 2 bad input,
3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .characters import character, character_table, dim_irrep
from .connection import catalan_product, class_product, top_coefficients
from .integrals import MonomialSpec, haar_mc_oracle, monomial_integral
from .partitions import CapacityError, Partition, partitions_of, sort_table_order
from .permutations import Permutation
from .ratfunc import D, RationalFunction
from .tableaux import good_permutations, rsk
from .tensorpoly import formanek_verify
from .verify import LEVELS, run_all
from .weingarten import conjecture_scan, wg_characters

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


def fmt(x) -> str:
    """Canonical string for an exact value."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, RationalFunction):
        return str(x)
    return str(x)


class Report:
    def __init__(self, command: str, parameters: dict):
        self.command = command
        self.parameters = parameters
        self.result: object = None
        self.passed: bool | None = None
        self.text: list[str] = []
        self.seconds = 0.0

    def envelope(self, timing: bool) -> dict:
        env = {"command": self.command, "parameters": self.parameters, "result": self.result}
        if self.passed is not None:
            env["passed"] = self.passed
        if timing:
            env["timing"] = {"seconds": round(self.seconds, 6)}
        return env


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _aligned(rows: list[tuple[str, str]]) -> list[str]:
    if not rows:
        return []
    w = max(len(a) for a, _ in rows)
    v = max(len(b) for _, b in rows)
    return [f"{a:<{w}}  {b:>{v}}" for a, b in rows]


# --- commands ----------------------------------------------------------------


def cmd_wg(args) -> Report:
    if args.symbolic == (args.d is not None):
        raise ValueError("give exactly one of --d and --symbolic")
    d = D if args.symbolic else args.d
    rep = Report("wg", {"k": args.k, "d": "d" if args.symbolic else args.d, "scaled": args.scaled})
    if args.scaled and args.symbolic:
        raise ValueError("--scaled needs an integer --d")
    wg = wg_characters(args.k, d)
    values = dict(wg.table_rows(scaled=args.scaled))
    order = sort_table_order(values)
    rep.result = {str(mu): fmt(values[mu]) for mu in order}
    rep.parameters["order"] = [str(mu) for mu in order]
    if wg.restricted:
        rep.parameters["restricted"] = True
    label = "d!^2 Wg" if args.scaled else "Wg"
    rep.text = [f"{label}(d={rep.parameters['d']}, mu), k={args.k}"]
    rep.text += _aligned([(str(mu), fmt(values[mu])) for mu in order])
    return rep


def cmd_char(args) -> Report:
    rep = Report("char", {"k": args.k})
    if args.lam is not None or args.mu is not None:
        if args.lam is None or args.mu is None:
            raise ValueError("--lam and --mu go together")
        value = character(args.lam, args.mu)
        rep.parameters.update(lam=str(args.lam), mu=str(args.mu))
        rep.result = value
        rep.text = [f"chi_{args.lam}({args.mu}) = {value}"]
        return rep
    ct = character_table(args.k)
    rep.result = ct.to_json()
    parts = ct.partitions
    width = max(len(str(p)) for p in parts)
    rep.text = [" " * width + "  " + " ".join(f"{str(m):>{width}}" for m in parts)]
    for lam in parts:
        rep.text.append(f"{str(lam):<{width}}  " + " ".join(f"{ct[lam, m]:>{width}}" for m in parts))
    return rep


def cmd_integrate(args) -> Report:
    d = D if args.symbolic else args.d
    if d is None:
        raise ValueError("give --d or --symbolic")
    spec = MonomialSpec.parse(d, args.u, args.ubar)
    rep = Report("integrate", {"d": "d" if args.symbolic else args.d, "u": args.u, "ubar": args.ubar})
    exact = monomial_integral(spec)
    result = {"exact": fmt(exact)}
    rep.text = [f"exact: {fmt(exact)}"]
    if args.samples:
        if args.symbolic:
            raise ValueError("Monte Carlo needs an integer --d")
        est = haar_mc_oracle(spec, args.samples, seed=args.seed)
        result["mc"] = {"mean": est.mean, "stderr": est.stderr, "samples": est.samples}
        rep.parameters.update(samples=args.samples, seed=args.seed)
        rep.passed = est.within(exact)
        rep.text.append(f"mc:    {est.mean:.6f} +- {est.stderr:.6f} ({est.samples} samples)")
    rep.result = result
    return rep


def cmd_connection(args) -> Report:
    a, b = args.classes
    rep = Report("connection", {"classes": [str(a), str(b)], "degenerate": args.degenerate})
    prod = class_product(a, b, degenerate=args.degenerate)
    rep.parameters["k"] = a.size
    rep.result = {str(mu): c for mu, c in prod.items()}
    terms = " + ".join(f"{c}*C{mu}" for mu, c in prod.items()) or "0"
    rep.text = [f"C{a} * C{b} = {terms}"]
    return rep


def _catalan_string(mu: Partition) -> str:
    factors = [f"{'-' if (a - 1) % 2 else ''}Cat_{a - 1}" for a in mu if a > 1]
    return " * ".join(factors) if factors else "1"


def cmd_topcoef(args) -> Report:
    rep = Report("topcoef", {"k": args.k})
    tc = top_coefficients(args.k)
    order = sort_table_order(tc.values)
    rep.result = {
        "values": {str(mu): tc[mu] for mu in order},
        "factorization": {str(mu): _catalan_string(mu) for mu in order},
    }
    rep.passed = all(tc[mu] == catalan_product(mu) for mu in order)
    rep.text = [f"{a}   = {_catalan_string(mu)}" for a, mu in zip(_aligned([(str(mu), str(tc[mu])) for mu in order]), order)]
    return rep


def cmd_formanek(args) -> Report:
    rep = Report("formanek", {"d": args.d})
    r = formanek_verify(args.d)
    rep.passed = r.passed
    rep.result = {
        "computed_scalar": None if r.computed_scalar is None else fmt(r.computed_scalar),
        "expected_scalar": fmt(r.expected_scalar),
        "coefficient": fmt(r.coefficient),
        "T_X": fmt(r.T_X),
        "T_Y": fmt(r.T_Y),
        "C_d": fmt(r.C_d),
        "trace": fmt(r.trace),
        "expected_trace": fmt(r.expected_trace),
    }
    rep.text = [
        f"F(X,Y) at elementary tuples, d={args.d}",
        f"computed scalar: {rep.result['computed_scalar']}",
        f"expected scalar: {rep.result['expected_scalar']}  "
        f"(= {fmt(r.coefficient)} * {fmt(r.T_X)} * {fmt(r.T_Y)})",
        f"C_d = {fmt(r.C_d)}",
        "PASS" if r.passed else "FAIL",
    ]
    return rep


def cmd_rsk(args) -> Report:
    if (args.word is None) == (args.perm is None):
        raise ValueError("give exactly one of --word and --perm")
    word = Permutation.parse(args.perm) if args.perm is not None else args.word
    P, Q = rsk(word)
    rep = Report("rsk", {"word": args.word} if args.perm is None else {"perm": args.perm})
    rep.result = {
        "P": [[str(x) for x in r] for r in P.rows],
        "Q": [list(r) for r in Q.rows],
        "shape": str(P.shape),
    }
    rep.text = ["P:", str(P), "Q:", str(Q), f"shape: {P.shape}"]
    return rep


def cmd_goodbasis(args) -> Report:
    rep = Report("goodbasis", {"k": args.k, "d": args.d})
    good = good_permutations(args.k, args.d + 1)
    expected = sum(dim_irrep(l) ** 2 for l in partitions_of(args.k) if l.height <= args.d)
    result = {"count": len(good), "expected": expected}
    if not args.count:
        result["permutations"] = [str(p) for p in good]
    rep.result = result
    rep.passed = len(good) == expected
    rep.text = [f"{args.d + 1}-good permutations in S_{args.k}: {len(good)} (sum of chi(1)^2 over ht <= {args.d}: {expected})"]
    if not args.count:
        rep.text += [str(p) for p in good]
    return rep


def cmd_conjecture(args) -> Report:
    rep = Report("conjecture", {"d_min": args.d_min, "d_max": args.d_max})
    scan = conjecture_scan(args.d_max, args.d_min)
    entries = {}
    for e in scan.entries:
        entries[str(e.d)] = {
            "decreasing": e.decreasing,
            "denominators_divide": e.denominators_divide,
            "counterexamples": [[str(a), str(b)] for a, b in e.counterexamples],
            "largest_denominator": max(v.denominator for _, v in e.rows),
        }
        flag = "PASS" if e.passed else "FAIL"
        rep.text.append(
            f"{flag} d={e.d}: decreasing={e.decreasing} divisibility={e.denominators_divide}"
        )
        for a, b in e.counterexamples:
            rep.text.append(f"     |{a}| <= |{b}|")
    rep.result = entries
    rep.passed = scan.passed
    return rep


def cmd_verify_all(args) -> Report:
    rep = Report("verify-all", {"level": args.level})
    results = run_all(args.level)
    rep.result = {
        str(r.number): {"name": r.name, "passed": r.passed, "details": r.details} for r in results
    }
    rep.passed = all(r.passed for r in results)
    rep.text = [r.line() for r in results]
    for r in results:
        rep.text += [f"    {m}" for m in r.details]
    return rep


# --- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
    out.add_argument("--text", dest="fmt", action="store_const", const="text", help="readable output")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")

    parser = argparse.ArgumentParser(prog="wgcalc", description="Exact Weingarten calculus toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wg", parents=[common], help="Weingarten function of S_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--symbolic", action="store_true", help="rational functions in d")
    p.add_argument("--scaled", action="store_true", help="multiply by d!^2")
    p.set_defaults(func=cmd_wg)

    p = sub.add_parser("char", parents=[common], help="character table of S_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--table", action="store_true", help="full table (the default)")
    p.add_argument("--lam", type=_partition)
    p.add_argument("--mu", type=_partition)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("integrate", parents=[common], help="Haar-unitary monomial integral")
    p.add_argument("--d", type=int)
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--u", required=True, help='plain factors, e.g. "1,1 2,2"')
    p.add_argument("--ubar", required=True, help='conjugated factors, e.g. "1,2 2,1"')
    p.add_argument("--samples", type=int, default=0, help="Monte Carlo samples (0: none)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("connection", parents=[common], help="product of two class sums")
    p.add_argument("--k", type=int)
    p.add_argument("--classes", nargs=2, type=_partition, required=True)
    p.add_argument("--degenerate", action="store_true", help="length-additive part only")
    p.set_defaults(func=cmd_connection)

    p = sub.add_parser("topcoef", parents=[common], help="top coefficients C[mu]")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_topcoef)

    p = sub.add_parser("formanek", parents=[common], help="Formanek polynomial at elementary tuples")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_formanek)

    p = sub.add_parser("rsk", parents=[common], help="RSK of a word or permutation")
    p.add_argument("--word")
    p.add_argument("--perm", help='one-line "3 1 2" or cycles "(1 3 2)"')
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("goodbasis", parents=[common], help="(d+1)-good permutations of S_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--count", action="store_true", help="only the count")
    p.set_defaults(func=cmd_goodbasis)

    p = sub.add_parser("conjecture", parents=[common], help="scan the d = k scaled tables")
    p.add_argument("--d-max", type=int, default=10)
    p.add_argument("--d-min", type=int, default=2)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("verify-all", parents=[common], help="run the acceptance checks")
    p.add_argument("--level", choices=LEVELS, default="desk")
    p.set_defaults(func=cmd_verify_all)
    return parser


def _validate(args, parser) -> None:
    if getattr(args, "k", None) is not None and args.k < 1:
        parser.error("--k must be positive")
    if args.command == "connection":
        a, b = args.classes
        if a.size != b.size or (args.k is not None and a.size != args.k):
            parser.error("classes must be partitions of the same k")
    if args.command == "char" and args.lam is not None and args.lam.size != args.k:
        parser.error("--lam must be a partition of --k")
    if args.command == "char" and args.mu is not None and args.mu.size != args.k:
        parser.error("--mu must be a partition of --k")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    t0 = time.perf_counter()
    try:
        rep = args.func(args)
    except CapacityError as exc:
        print(f"wgcalc: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValueError, ZeroDivisionError) as exc:
        print(f"wgcalc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep.seconds = time.perf_counter() - t0
    if args.fmt == "text":
        lines = list(rep.text)
        if args.timing:
            lines.append(f"time: {rep.seconds:.3f} s")
        print("\n".join(lines))
    else:
        print(json.dumps(rep.envelope(args.timing), sort_keys=True, indent=2))
    return EXIT_FAIL if rep.passed is False else EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
