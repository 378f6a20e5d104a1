"""Command-line front end: verification suites and individual computations
with text or JSON output.

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 term budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import CuspLabError, TermBudgetExceeded
from .exactnum import abs_squared, as_fourth_root, ray_equiv
from .genchars import all_orbit_reps, cuspidal_count, orbit_count
from .hecke import b0_gl1, b0_gl2n, b1_gl1, b1_gl2n_full
from .jordan import SimpleCuspidalData, jordan_set
from .residue import Fq, delta, gauss_sum
from .verify import SUITES, run_suite


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cusplab",
        description="exact verification of the character-sum, lattice and "
        "Hecke-coefficient computations for simple cuspidals of Sp(2N)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument(
        "--suite",
        default="all",
        choices=sorted(SUITES) + ["all"],
        help="which suite to run (default: all)",
    )
    v.add_argument("--qmax", type=int, default=7, help="largest residue cardinality")
    v.add_argument("--nmax", type=int, default=3, help="largest rank N")
    v.add_argument("--seed", type=int, default=42, help="seed for sampled checks")
    v.add_argument("--json", action="store_true")

    j = sub.add_parser("jordan", help="the Jordan set of a simple cuspidal")
    j.add_argument("--n", type=int, required=True)
    j.add_argument("--q", type=int, required=True)
    j.add_argument("--chi", default="+1", choices=["+1", "-1"])
    j.add_argument("--json", action="store_true")

    h = sub.add_parser("hecke", help="one Hecke coefficient sum")
    h.add_argument(
        "--case",
        required=True,
        choices=["gl1-b0", "gl1-b1", "gl2n-b0", "gl2n-b1"],
    )
    h.add_argument("--q", type=int, required=True)
    h.add_argument("--n", type=int, default=1)
    h.add_argument("--delta", default="quadratic", choices=["quadratic", "trivial"])
    h.add_argument("--chi", default="+1", choices=["+1", "-1"])
    h.add_argument("--budget", type=int, default=10**8)
    h.add_argument("--json", action="store_true")

    c = sub.add_parser("classify", help="orbits of affine generic characters")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--json", action="store_true")

    g = sub.add_parser("gauss", help="the Gauss sum and its normalization")
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--a", type=int, default=1, help="additive character twist")
    g.add_argument("--json", action="store_true")
    return ap


def _field(q: int) -> Fq:
    return Fq(q)


def _emit(payload: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    workers = int(os.environ.get("CUSPLAB_THREADS", "1") or "1")
    if workers > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(
                pool.map(lambda n: run_suite(n, args.qmax, args.nmax, args.seed), names)
            )
    else:
        reports = [run_suite(n, args.qmax, args.nmax, args.seed) for n in names]
    reports.sort(key=lambda r: r.suite)
    payload = {"reports": [r.to_dict() for r in reports]}
    lines = []
    for r in reports:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{r.suite:<9} {status}  {r.cases} cases  {r.wall_time:.2f}s")
        for f in r.failures:
            lines.append(f"  FAIL {f}")
    _emit(payload, args.json, lines)
    return 0 if all(r.ok for r in reports) else 1


def _cmd_jordan(args) -> int:
    data = SimpleCuspidalData(args.n, _field(args.q), 1 if args.chi == "+1" else -1)
    js = jordan_set(data)
    payload = js.to_dict()
    lines = [
        f"Jord(pi) for N={args.n}, q={args.q}, chi(-1)={args.chi}:",
        f"  eps1 on norms of F[beta]: {payload['eps1_on_norms']}",
        f"  tau(beta) = {payload['tau_beta']}",
        f"  reducibility points: {payload['reducibility_points']}",
        f"  eps-factor product: {payload['eps_product']}",
    ]
    _emit(payload, args.json, lines)
    return 0


def _cmd_hecke(args) -> int:
    F = _field(args.q)
    chi = 1 if args.chi == "+1" else -1
    G = gauss_sum(F)
    q = args.q
    if args.case == "gl1-b0":
        value = b0_gl1(F)
        closed = G * (q - 1)
        ray = "G"
        reduction = ray_equiv(value, G)
    elif args.case == "gl1-b1":
        value = b1_gl1(F)
        d = delta(F, F.neg(1))
        closed = G * ((q - 1) * d)
        ray = "delta(-1) G"
        reduction = ray_equiv(value, G * d)
    elif args.case == "gl2n-b0":
        from .exactnum import CycNum

        value = b0_gl2n(F, chi)
        d = delta(F, F.neg(F.from_int(2)))
        closed = CycNum.rational(q, (q - 1) * chi * d)
        ray = "chi(-1) delta(-2)"
        reduction = value == closed
    else:
        value = b1_gl2n_full(F, args.n, args.delta, term_budget=args.budget)
        if args.delta == "trivial":
            payload = {
                "case": args.case,
                "q": q,
                "n": args.n,
                "delta": args.delta,
                "value": repr(value),
                "note": "no reducibility at 1",
                "reduction": value.is_zero(),
            }
            _emit(
                payload,
                args.json,
                [f"{args.case}: 0", "note: no reducibility at 1 (trivial delta)"],
            )
            return 0 if value.is_zero() else 1
        closed = G * (q**args.n * (q - 1))
        ray = "xi"
        reduction = ray_equiv(value, G)
    ok = reduction and value == closed
    fr = as_fourth_root(value, abs_squared(value)) if not value.is_rational() else None
    payload = {
        "case": args.case,
        "q": q,
        "n": args.n,
        "value": repr(value),
        "closed_form": repr(closed),
        "ray_class": str(fr) if fr else ("+1" if value.rational_value() > 0 else "-1"),
        "paper_reduction": ray,
        "reduction_pass": bool(ok),
    }
    lines = [
        f"value      = {value!r}",
        f"closed     = {closed!r}",
        f"ray class  = {payload['ray_class']}  (paper: {ray})",
        f"reduction  {'PASS' if ok else 'FAIL'}",
    ]
    _emit(payload, args.json, lines)
    return 0 if ok else 1


def _cmd_classify(args) -> int:
    F = _field(args.q)
    reps = all_orbit_reps(F, args.n)
    payload = {
        "q": args.q,
        "n": args.n,
        "orbit_count": orbit_count(F, args.n),
        "cuspidal_count": cuspidal_count(F, args.n),
        "representatives": [list(r.params()) for r in reps],
    }
    lines = [
        f"orbits: {payload['orbit_count']}  (2(q-1) = {2 * (args.q - 1)})",
        f"simple cuspidals: {payload['cuspidal_count']}  (4(q-1) = {4 * (args.q - 1)})",
        "orbit representatives (alpha_1..alpha_N; alpha'_2N):",
    ] + [f"  {list(r.params())}" for r in reps]
    _emit(payload, args.json, lines)
    return 0


def _cmd_gauss(args) -> int:
    F = _field(args.q)
    G = gauss_sum(F, args.a)
    x = as_fourth_root(G, F.q)
    payload = {
        "q": args.q,
        "a": args.a,
        "gauss_sum": repr(G),
        "abs_squared": str(abs_squared(G)),
        "xi": str(x),
        "xi_squared": x.square_sign(),
    }
    lines = [
        f"G(delta, psi^{args.a}) = {G!r}",
        f"|G|^2 = {abs_squared(G)}",
        f"xi = {x}  with xi^2 = {x.square_sign()}",
    ]
    _emit(payload, args.json, lines)
    return 0


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "jordan":
            return _cmd_jordan(args)
        if args.command == "hecke":
            return _cmd_hecke(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "gauss":
            return _cmd_gauss(args)
    except TermBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CuspLabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
