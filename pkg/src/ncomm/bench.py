"""Timing harnesses behind ``ncomm bench`` and ``benchmarks/``."""
from __future__ import annotations

import random
import time

from ncomm import kernels
from ncomm.lambdas import lambda_perm_dp, lambda_perm_naive
from ncomm.standard import DIFFOP_RING, s_eval_dp, s_eval_naive
from ncomm.weyl import DiffOp, Polynomial


def _timed(fn, *args, repeat=1):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return out, best * 1000.0


def suite_perm(max_p: int = 4, repeat: int = 1) -> list[dict]:
    """Naive (2p)! permutation sum against the subset DP."""
    rows = []
    for p in range(1, max_p + 1):
        a, ta = _timed(lambda_perm_naive, p, repeat=repeat)
        b, tb = _timed(lambda_perm_dp, p, repeat=repeat)
        rows.append({"p": p, "value": str(b), "agree": a == b,
                     "naive_ms": round(ta, 3), "dp_ms": round(tb, 3)})
    return rows


def _dp_inputs(n: int, seed: int) -> list[DiffOp]:
    rng = random.Random(f"bench-dp/{seed}/{n}")
    return [DiffOp({2: Polynomial({d: rng.randint(-5, 5) for d in range(3)}), 1: {1: rng.randint(-3, 3)}})
            for _ in range(n)]


def suite_dp(max_n: int = 6, repeat: int = 1, seed: int = 0) -> list[dict]:
    """s_N by all N! orderings against the subset recurrence (generic and kernel)."""
    rows = []
    for n in range(2, max_n + 1):
        xs = _dp_inputs(n, seed)
        a, ta = _timed(s_eval_naive, DIFFOP_RING, xs, repeat=repeat)
        b, tb = _timed(lambda v: s_eval_dp(DIFFOP_RING, v, accelerate=False), xs, repeat=repeat)
        c, tc = _timed(s_eval_dp, DIFFOP_RING, xs, repeat=repeat)
        rows.append({"N": n, "agree": a == b == c, "naive_ms": round(ta, 3),
                     "dp_ms": round(tb, 3), "kernel_ms": round(tc, 3)})
    return rows


def _monomial_ops(p: int) -> list:
    # x^i d^p, i < 2p: the Weyl tuple with the factorials cleared
    return [[(p, i, 1)] for i in range(2 * p)]


def _random_ops(n: int, p: int, seed: int = 0) -> list:
    rng = random.Random(f"bench-kernels/{seed}/{n}/{p}")
    return [[(p, d, rng.randint(-5, 5)) for d in range(2 * p + 3)] for _ in range(n)]


def suite_kernels(repeat: int = 1) -> list[dict]:
    """Compiled core against its pure-Python twin on the two hot kernels."""
    backends = kernels.backends()
    cases = [
        ("standard_int", "x^i d^3, N=6", (_monomial_ops(3),)),
        ("standard_int", "random d^2, N=6", (_random_ops(6, 2),)),
        ("standard_int", "random d^3, N=7", (_random_ops(7, 3),)),
        ("standard_int", "random d^3, N=8", (_random_ops(8, 3),)),
        ("mp_sums", "M_3", (3,)),
    ]
    if "compiled" in backends:
        cases.append(("mp_sums", "M_4", (4,)))
    rows = []
    for name, label, args in cases:
        row = {"kernel": name, "case": label}
        results = {}
        for bname in ("python", "compiled"):
            mod = backends.get(bname)
            if mod is None:
                row[f"{bname}_ms"] = None
                continue
            if bname == "python" and label == "M_4":
                row["python_ms"] = None  # minutes in pure Python
                continue
            try:
                res, t = _timed(getattr(mod, name), *args, repeat=repeat)
            except OverflowError:
                row[f"{bname}_ms"] = None
                row["overflow"] = True
                continue
            results[bname] = res
            row[f"{bname}_ms"] = round(t, 3)
        row["agree"] = len(set(map(repr, results.values()))) <= 1
        rows.append(row)
    return rows


SUITES = {"perm": suite_perm, "dp": suite_dp, "kernels": suite_kernels}

__all__ = ["SUITES", "suite_perm", "suite_dp", "suite_kernels"]
