"""Command-line front end: ``ncomm <subcommand> ...`` (or ``python -m ncomm``).

Exit codes: 0 success, 1 failed verification or disagreeing routes, 2 usage error.
JSON output always carries ``"schema": "v1"``; big integers are decimal strings.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from ncomm import bench, combinatorics, identities, lambdas, superalg
from ncomm.weyl import ParseError, Polynomial, wronskian

SCHEMA = "v1"
CHECKS = ("s-zero", "wronskian", "closure", "lcom", "rcom", "hanlon", "rtol", "rank", "simplicity")


class UsageError(Exception):
    pass


def _emit(args, obj, text: str) -> None:
    out = json.dumps({"schema": SCHEMA, **obj}) if args.format == "json" else text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000.0, 3)


# -- lambda --------------------------------------------------------------------


def cmd_lambda(args) -> int:
    p = args.p
    methods = lambdas.applicable_methods(p) if args.method == "all" else [args.method]
    if args.method != "all" and args.method not in lambdas.applicable_methods(p):
        raise UsageError(f"method {args.method} supports p <= {lambdas.method_ceiling(args.method)}")
    routes = []
    for m in methods:
        t0 = time.perf_counter()
        try:
            v = lambdas.lambda_by(m, p)
            err = None
        except lambdas.FormulaError as exc:
            v, err = None, str(exc)
        routes.append({"method": m, "value": None if v is None else str(v),
                       "elapsed_ms": _ms(t0), **({"error": err} if err else {})})
    values = {r["value"] for r in routes}
    agree = len(values) == 1 and None not in values
    if args.method != "all":
        r = routes[0]
        obj = {"p": p, "method": r["method"], "value": r["value"], "elapsed_ms": r["elapsed_ms"]}
        if "error" in r:
            obj["error"] = r["error"]
        text = f"lambda_{p} = {r['value']}  [{r['method']}, {r['elapsed_ms']} ms]"
        _emit(args, obj, text if "error" not in r else f"{text}  error: {r['error']}")
        return 0 if "error" not in r else 1
    lines = [f"{r['method']:<12} {r['value']}  ({r['elapsed_ms']} ms)" for r in routes]
    lines.append(f"lambda_{p} = {routes[0]['value']}" if agree else "DISAGREEMENT")
    obj = {"p": p, "method": "all", "value": routes[0]["value"] if agree else None,
           "agree": agree, "routes": routes,
           "elapsed_ms": round(sum(r["elapsed_ms"] for r in routes), 3)}
    _emit(args, obj, "\n".join(lines))
    return 0 if agree else 1


# -- power ---------------------------------------------------------------------


def cmd_power(args) -> int:
    if args.p < 1 or args.k < 0:
        raise UsageError("need --p >= 1 and --k >= 0")
    X = superalg.power(args.p, args.k)
    _emit(args, {"p": args.p, "k": args.k, **X.to_json_obj()}, str(X))
    return 0


# -- verify --------------------------------------------------------------------


def _need_p(args, lo=1, hi=None):
    if args.p is None:
        raise UsageError(f"--check {args.check} needs --p")
    if args.p < lo or (hi is not None and args.p > hi):
        raise UsageError(f"--check {args.check} supports {lo} <= p <= {hi}")
    return args.p


def _run_check(args) -> list[identities.CheckResult]:
    c = args.check
    seed, threads = args.seed, args.threads
    if c == "s-zero":
        p = _need_p(args)
        ns = [args.N] if args.N is not None else [2 * p + 1, 2 * p + 2]
        if any(n <= 2 * p for n in ns):
            raise UsageError("s-zero needs N > 2p")
        return [identities.check_sN_zero(p, n, args.trials or 50, seed, threads) for n in ns]
    if c == "wronskian":
        p = _need_p(args, 1, 3)
        return [identities.check_wronskian(p, args.trials or 50, seed, threads)]
    if c == "closure":
        p = _need_p(args, 2)
        ns = [args.N] if args.N is not None else list(range(2, 2 * p))
        if any(not 2 <= n < 2 * p for n in ns):
            raise UsageError("closure needs 2 <= N < 2p")
        return [identities.check_closure(p, n) for n in ns]
    if c in ("lcom", "rcom", "hanlon"):
        p = _need_p(args, 1, 2)
        trials = args.trials or (50 if p == 1 else 10)
        return [identities.check_named_identity(p, c, trials, seed, threads)]
    if c == "rtol":
        # --N is the bracket arity n here; --p is not used
        ns = [args.N] if args.N is not None else [2, 3]
        if any(n not in (2, 3) for n in ns):
            raise UsageError("rtol supports arity N in {2, 3}")
        return [identities.rtol_ltor_check(n, args.trials or 10, seed, threads) for n in ns]
    if c == "rank":
        p = _need_p(args, 1, 2)
        ds = [args.N] if args.N is not None else list(range(2, min(2 * p, 4) + 1))
        if any(not 1 <= d <= 4 for d in ds):
            raise UsageError("rank supports degree N <= 4")
        return [identities.check_rank(p, d, seed) for d in ds]
    if c == "simplicity":
        p = _need_p(args, 1, 3)
        if args.N is not None:
            if not 0 <= args.N <= 2 * p + 4:
                raise UsageError("simplicity supports 0 <= N <= 2p+4")
            ok = identities.simplicity_generation_check(p, args.N)
            return [identities.CheckResult("simplicity", {"p": p, "s": args.N}, ok)]
        return [identities.check_simplicity(p)]
    raise UsageError(f"unknown check {c!r}")


def cmd_verify(args) -> int:
    if args.threads < 1:
        raise UsageError("--threads must be positive")
    if args.trials is not None and args.trials < 1:
        raise UsageError("--trials must be positive")
    t0 = time.perf_counter()
    try:
        results = _run_check(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok = all(results)
    obj = {"check": args.check, "verdict": "pass" if ok else "fail",
           "results": [r.to_json_obj() for r in results]}
    if args.timing:
        obj["elapsed_ms"] = _ms(t0)
    lines = []
    for r in results:
        params = " ".join(f"{k}={v}" for k, v in r.params.items())
        line = f"{'PASS' if r else 'FAIL'}  {r.check}  {params}"
        if r.detail:
            line += "  " + json.dumps(r.detail)
        if r.counterexample is not None:
            line += "\n      counterexample: " + json.dumps(r.counterexample)
        lines.append(line)
    _emit(args, obj, "\n".join(lines))
    return 0 if ok else 1


# -- mu-table ------------------------------------------------------------------


def cmd_mu_table(args) -> int:
    p = args.p
    if p < 1:
        raise UsageError("need --p >= 1")
    rows = []
    for k in range(1, 2 * p + 1):
        rows.append({"k": k, "delta": list(combinatorics.delta_closed(p, k - 1)),
                     "mu": superalg.mu(p, k), "mu_closed": combinatorics.mu_closed(p, k)})
    ok = all(r["mu"] == r["mu_closed"] for r in rows)
    lines = [f"{'k':>3}  {'delta(k-1)':<{6 * p}}  mu_k"]
    for r in rows:
        d = "(" + ",".join(map(str, r["delta"])) + ")"
        lines.append(f"{r['k']:>3}  {d:<{6 * p}}  {r['mu']}")
    _emit(args, {"p": p, "rows": rows, "agree": ok}, "\n".join(lines))
    return 0 if ok else 1


# -- enumerate -----------------------------------------------------------------


def cmd_enumerate(args) -> int:
    s = args.set
    if s == "E":
        if args.k is None or args.weight is None:
            raise UsageError("--set E needs --k and --weight")
        items = combinatorics.enumerate_E(args.k, args.weight, args.zero_first)
        params = {"k": args.k, "weight": args.weight, "zero_first": args.zero_first}
    elif s == "G":
        if args.k is None:
            raise UsageError("--set G needs --k")
        items = combinatorics.enumerate_G(args.k)
        params = {"k": args.k}
    else:
        if args.p is None or not 1 <= args.p <= 4:
            raise UsageError("--set Mp needs 1 <= --p <= 4")
        items = lambdas.enumerate_Mp(args.p)
        params = {"p": args.p}
    items = [[list(r) for r in m] if s == "Mp" else list(m) for m in items]
    text = "\n".join(json.dumps(m, separators=(",", ":")) for m in items)
    _emit(args, {"set": s, **params, "count": len(items), "items": items}, text)
    return 0


# -- wronskian -----------------------------------------------------------------


def cmd_wronskian(args) -> int:
    try:
        polys = [Polynomial.parse(t) for t in args.polys]
    except ParseError as exc:
        raise UsageError(str(exc)) from exc
    W = wronskian(polys)
    _emit(args, {"polys": [str(u) for u in polys], "value": W.to_json_obj(), "text": str(W)}, str(W))
    return 0


# -- bench ---------------------------------------------------------------------


def cmd_bench(args) -> int:
    rows = bench.SUITES[args.suite](repeat=args.repeat)
    ok = all(r.get("agree", True) for r in rows)
    lines = [json.dumps(r) for r in rows]
    _emit(args, {"suite": args.suite, "rows": rows, "agree": ok}, "\n".join(lines))
    return 0 if ok else 1


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help="write to this file instead of standard output")

    ap = argparse.ArgumentParser(prog="ncomm", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("lambda", parents=[common], help="compute lambda_p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--method", choices=lambdas.METHODS + ("all",), default="all")
    sp.set_defaults(fn=cmd_lambda)

    sp = sub.add_parser("power", parents=[common], help="expand (a d^p)^k")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(fn=cmd_power)

    sp = sub.add_parser("verify", parents=[common], help="run an identity check")
    sp.add_argument("--check", choices=CHECKS, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--N", type=int, help="N for s-zero/closure, degree for rank, s for simplicity, arity for rtol")
    sp.add_argument("--trials", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--timing", action="store_true", help="include elapsed time (breaks byte-identical output)")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("mu-table", parents=[common], help="delta(k-1) and mu_k for k = 1..2p")
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(fn=cmd_mu_table)

    sp = sub.add_parser("enumerate", parents=[common], help="list E_k(l), G_k or M_p")
    sp.add_argument("--set", choices=("E", "G", "Mp"), required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--weight", type=int)
    sp.add_argument("--zero-first", action="store_true")
    sp.add_argument("--p", type=int)
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("wronskian", parents=[common], help="Wronskian of polynomials")
    sp.add_argument("--polys", nargs="+", required=True)
    sp.set_defaults(fn=cmd_wronskian)

    sp = sub.add_parser("bench", parents=[common], help="naive vs fast timings")
    sp.add_argument("--suite", choices=tuple(bench.SUITES), required=True)
    sp.add_argument("--repeat", type=int, default=1)
    sp.set_defaults(fn=cmd_bench)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"ncomm {args.cmd}: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"ncomm {args.cmd}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
