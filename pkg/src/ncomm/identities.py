"""Randomised and exhaustive checks of the identities satisfied by s_N on A_1^(p).

Every statement checked here is an exact polynomial identity, so one nonzero
evaluation refutes it; checks return a :class:`CheckResult` carrying the first
counterexample found.  Trials draw from ``random.Random(f"{tag}/{seed}/{trial}")``,
which makes the outcome independent of how trials are spread over threads.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial, prod
from typing import Any, Callable, Sequence

from ncomm.combinatorics import sort_and_sign
from ncomm.lambdas import lambda_perm_dp
from ncomm.standard import DIFFOP_RING, s_eval_dp
from ncomm.weyl import DiffOp, Polynomial, wronskian

__all__ = [
    "CheckResult",
    "ExhaustionError",
    "random_poly",
    "random_order_p_op",
    "check_sN_zero",
    "wronskian_formula_check",
    "check_wronskian",
    "closure_witness",
    "check_closure",
    "shuffles",
    "SkewBracket",
    "Vector",
    "standard_bracket",
    "random_bracket",
    "lcom_eval",
    "rcom_eval",
    "hanlon_eval",
    "rcom1_eval",
    "lcom1_eval",
    "check_named_identity",
    "rtol_ltor_check",
    "multilinear_identity_rank",
    "check_rank",
    "simplicity_generation_check",
    "check_simplicity",
]


class ExhaustionError(RuntimeError):
    """A scan that must succeed ran out of candidates."""


@dataclass
class CheckResult:
    check: str
    params: dict
    passed: bool
    counterexample: Any = None
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json_obj(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "verdict": "pass" if self.passed else "fail",
            "counterexample": self.counterexample,
            "detail": self.detail,
        }


def _rng(tag: str, seed: int, trial: int) -> random.Random:
    return random.Random(f"{tag}/{seed}/{trial}")


def _run_trials(fn: Callable[[int], Any], trials: int, threads: int) -> list:
    if threads <= 1 or trials <= 1:
        return [fn(t) for t in range(trials)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, range(trials)))


def random_poly(rng: random.Random, max_degree: int, lo: int = -5, hi: int = 5) -> Polynomial:
    deg = rng.randint(0, max_degree)
    return Polynomial({d: rng.randint(lo, hi) for d in range(deg + 1)})


def random_order_p_op(rng: random.Random, p: int, max_degree: int | None = None) -> DiffOp:
    """``u d^p`` with integer coefficients in [-5, 5], ``deg u <= max_degree`` (default 2p+2)."""
    if max_degree is None:
        max_degree = 2 * p + 2
    return DiffOp.term(random_poly(rng, max_degree), p)


def _ops_text(ops) -> list[str]:
    return [str(X) for X in ops]


# -- s_N = 0 for N > 2p --------------------------------------------------------


def check_sN_zero(p: int, N: int, trials: int = 50, seed: int = 0, threads: int = 1) -> CheckResult:
    if N <= 2 * p:
        raise ValueError(f"s_N = 0 is only claimed for N > 2p (p={p}, N={N})")

    def one(t):
        rng = _rng("s-zero", seed, t)
        ops = [random_order_p_op(rng, p) for _ in range(N)]
        out = s_eval_dp(DIFFOP_RING, ops)
        return None if not out else {"trial": t, "args": _ops_text(ops), "value": str(out)}

    bad = [r for r in _run_trials(one, trials, threads) if r]
    return CheckResult("s-zero", {"p": p, "N": N, "trials": trials, "seed": seed}, not bad,
                       bad[0] if bad else None)


# -- Wronskian formula ---------------------------------------------------------


def wronskian_formula_check(p: int, polys: Sequence[Polynomial], lam: int | None = None) -> bool:
    """``s_2p(u_1 d^p, ..., u_2p d^p) == lambda_p W(u) d^p``."""
    if len(polys) != 2 * p:
        raise ValueError(f"need {2 * p} polynomials")
    if lam is None:
        lam = lambda_perm_dp(p)
    lhs = s_eval_dp(DIFFOP_RING, [DiffOp.term(u, p) for u in polys])
    rhs = DiffOp.term(wronskian(polys) * lam, p)
    return lhs == rhs


def check_wronskian(p: int, trials: int = 50, seed: int = 0, threads: int = 1,
                    max_degree: int = 6) -> CheckResult:
    lam = lambda_perm_dp(p)

    def one(t):
        rng = _rng("wronskian", seed, t)
        polys = [random_poly(rng, max_degree) for _ in range(2 * p)]
        if wronskian_formula_check(p, polys, lam):
            return None
        return {"trial": t, "polys": [str(u) for u in polys]}

    bad = [r for r in _run_trials(one, trials, threads) if r]
    return CheckResult("wronskian", {"p": p, "trials": trials, "seed": seed}, not bad,
                       bad[0] if bad else None, {"lambda": str(lam)})


# -- non-closure for N < 2p ------------------------------------------------------


@dataclass
class Witness:
    p: int
    degrees: tuple[int, ...]
    value: DiffOp

    @property
    def high_part(self) -> DiffOp:
        """Components of order above p."""
        return DiffOp.from_raw({k: u for k, u in self.value.raw().items() if k > self.p})


def closure_witness(p: int, N: int) -> Witness:
    """First ``(x^{i_1} d^p, ..., x^{i_N} d^p)``, ``i_1 < ... < i_N <= 2p``, whose
    ``s_N`` has a component of order above p."""
    if not 2 <= N < 2 * p:
        raise ValueError(f"need 2 <= N < 2p, got p={p}, N={N}")
    for degs in combinations(range(2 * p + 1), N):
        ops = [DiffOp.term(Polynomial.monomial(i), p) for i in degs]
        out = s_eval_dp(DIFFOP_RING, ops)
        if out and out.max_order > p:
            return Witness(p, degs, out)
    raise ExhaustionError(f"no monomial tuple leaves A_1^({p}) under s_{N}")


def check_closure(p: int, N: int) -> CheckResult:
    params = {"p": p, "N": N}
    try:
        w = closure_witness(p, N)
    except ExhaustionError as exc:
        return CheckResult("closure", params, False, {"error": str(exc)})
    args = [str(DiffOp.term(Polynomial.monomial(i), p)) for i in w.degrees]
    return CheckResult("closure", params, True, None,
                       {"witness": args, "value": str(w.value), "max_order": w.value.max_order})


# -- n-ary brackets and shuffle identities --------------------------------------


def shuffles(n: int, kind: str = "all") -> list[tuple[tuple[int, ...], int]]:
    """(n-1, n)-shuffles of 1..2n-1 with their signs.

    ``kind="lcom"`` keeps those with sigma(2n-1) = 2n-1, ``kind="rcom"`` those with
    sigma(1) = 1.
    """
    if n < 2:
        raise ValueError("arity must be at least 2")
    m = 2 * n - 1
    out = []
    for head in combinations(range(1, m + 1), n - 1):
        tail = tuple(i for i in range(1, m + 1) if i not in head)
        sigma = head + tail
        if kind == "lcom" and sigma[-1] != m:
            continue
        if kind == "rcom" and sigma[0] != 1:
            continue
        if kind not in ("all", "lcom", "rcom"):
            raise ValueError(f"unknown shuffle kind {kind!r}")
        out.append((sigma, sort_and_sign(sigma)[1]))
    return out


@dataclass(frozen=True)
class SkewBracket:
    arity: int
    fn: Callable[..., Any]
    zero: Any
    carrier: str = ""

    def __call__(self, *args):
        if len(args) != self.arity:
            raise ValueError(f"bracket takes {self.arity} arguments")
        return self.fn(*args)


def standard_bracket(p: int) -> SkewBracket:
    """``s_2p`` on order-p operators."""
    return SkewBracket(2 * p, lambda *xs: s_eval_dp(DIFFOP_RING, xs), DiffOp.zero(), f"s_{2 * p}")


class Vector:
    """Element of Q^dim with the linear operations the shuffle sums need."""

    __slots__ = ("c",)

    def __init__(self, coords):
        self.c = tuple(coords)

    @classmethod
    def zero(cls, dim):
        return cls((0,) * dim)

    def __add__(self, o):
        return Vector(a + b for a, b in zip(self.c, o.c))

    def __sub__(self, o):
        return Vector(a - b for a, b in zip(self.c, o.c))

    def __neg__(self):
        return Vector(-a for a in self.c)

    def __mul__(self, k):
        return Vector(a * k for a in self.c)

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, Vector) and self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return f"Vector({list(self.c)})"


def _det(rows) -> Any:
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        s = sort_and_sign(perm)[1]
        total += s * prod(rows[i][perm[i]] for i in range(n))
    return total


def random_bracket(n: int, dim: int, rng: random.Random, lo: int = -3, hi: int = 3) -> SkewBracket:
    """Alternating n-linear map Q^dim -> Q^dim with random structure constants.

    ``psi(v_1..v_n) = sum_I det(v[I]) c_I`` over increasing index sets I, which is
    alternating by construction.
    """
    index_sets = list(combinations(range(dim), n))
    consts = [tuple(rng.randint(lo, hi) for _ in range(dim)) for _ in index_sets]

    def psi(*vs):
        out = [0] * dim
        for I, c in zip(index_sets, consts):
            d = _det([[v.c[i] for v in vs] for i in I])
            if d:
                for k in range(dim):
                    out[k] += d * c[k]
        return Vector(out)

    return SkewBracket(n, psi, Vector.zero(dim), f"random(dim={dim})")


def _shuffle_sum(psi: SkewBracket, args: Sequence, kind: str):
    n = psi.arity
    if len(args) != 2 * n - 1:
        raise ValueError(f"need {2 * n - 1} arguments for arity {n}")
    total = psi.zero
    for sigma, sign in shuffles(n, kind):
        t = [args[i - 1] for i in sigma]
        inner = psi(*t[n - 1:])
        term = psi(*t[: n - 1], inner)
        total = total + term if sign > 0 else total - term
    return total


def lcom_eval(psi: SkewBracket, args: Sequence):
    """Sum over shuffles with sigma(2n-1) = 2n-1 of ``sign psi(.., psi(.., t_{2n-1}))``."""
    return _shuffle_sum(psi, args, "lcom")


def rcom_eval(psi: SkewBracket, args: Sequence):
    """Sum over shuffles with sigma(1) = 1 of ``sign psi(t_1, .., psi(..))``."""
    return _shuffle_sum(psi, args, "rcom")


def hanlon_eval(psi: SkewBracket, args: Sequence):
    """Full shuffle sum; the Jacobi sum when n = 2."""
    return _shuffle_sum(psi, args, "all")


def rcom1_eval(psi: SkewBracket, args: Sequence):
    n = psi.arity
    m = 2 * n - 1
    t = list(args)
    total = psi.zero
    for i in range(2, m + 1):
        moved = t[: i - 1] + t[i:] + [t[i - 1]]
        v = lcom_eval(psi, moved)
        total = total + v if (i + 1) % 2 == 0 else total - v
    return total - lcom_eval(psi, t[1:] + [t[0]]) * (n - 1)


def lcom1_eval(psi: SkewBracket, args: Sequence):
    n = psi.arity
    m = 2 * n - 1
    t = list(args)
    total = psi.zero
    for i in range(1, m):
        moved = [t[i - 1]] + t[: i - 1] + t[i:]
        v = rcom_eval(psi, moved)
        total = total + v if (i + 1) % 2 == 0 else total - v
    return total - rcom_eval(psi, [t[-1]] + t[:-1]) * (n - 2)


_NAMED = {"lcom": lcom_eval, "rcom": rcom_eval, "hanlon": hanlon_eval}


def check_named_identity(p: int, which: str, trials: int = 10, seed: int = 0,
                         threads: int = 1) -> CheckResult:
    """Does the shuffle sum ``which`` vanish for ``psi = s_2p`` on A_1^(p)?"""
    if which not in _NAMED:
        raise ValueError(f"unknown identity {which!r}")
    if not 1 <= p <= 2:
        raise ValueError("named identities are checked for p <= 2")
    psi = standard_bracket(p)
    ev = _NAMED[which]

    def one(t):
        rng = _rng(which, seed, t)
        args = [random_order_p_op(rng, p) for _ in range(2 * psi.arity - 1)]
        out = ev(psi, args)
        # a trial only tests something if some nested bracket survives
        live = bool(psi(*args[: psi.arity - 1], psi(*args[psi.arity - 1:])))
        return live, (None if not out else {"trial": t, "args": _ops_text(args), "value": str(out)})

    runs = _run_trials(one, trials, threads)
    bad = [r for _, r in runs if r]
    return CheckResult(which, {"p": p, "trials": trials, "seed": seed}, not bad,
                       bad[0] if bad else None, {"nondegenerate": sum(live for live, _ in runs)})


def rtol_ltor_check(n: int, trials: int = 10, seed: int = 0, threads: int = 1) -> CheckResult:
    """``n rcom = rcom_1`` and ``(n-1) lcom = lcom_1`` for random alternating brackets."""
    if n not in (2, 3):
        raise ValueError("rtol/ltor are checked for n in {2, 3}")

    def one(t):
        rng = _rng("rtol", seed, t)
        dim = rng.randint(4, 6)
        psi = random_bracket(n, dim, rng)
        args = [Vector(rng.randint(-5, 5) for _ in range(dim)) for _ in range(2 * n - 1)]
        bad = {}
        if rcom_eval(psi, args) * n != rcom1_eval(psi, args):
            bad["rtol"] = True
        if lcom_eval(psi, args) * (n - 1) != lcom1_eval(psi, args):
            bad["ltor"] = True
        if not bad:
            return None
        return {"trial": t, "dim": dim, "failed": sorted(bad), "args": [list(a.c) for a in args]}

    out = [r for r in _run_trials(one, trials, threads) if r]
    return CheckResult("rtol", {"n": n, "trials": trials, "seed": seed}, not out,
                       out[0] if out else None)


# -- no identities of low degree -------------------------------------------------


def _reduce(row: list, basis: dict[int, list]) -> list:
    row = list(row)
    for col, piv in basis.items():
        c = row[col]
        if c:
            row = [a - c * b for a, b in zip(row, piv)]
    return row


def _insert(row: list, basis: dict[int, list]) -> bool:
    row = _reduce(row, basis)
    lead = next((i for i, v in enumerate(row) if v), None)
    if lead is None:
        return False
    inv = Fraction(1, 1) / row[lead]
    row = [v * inv for v in row]
    for col, piv in list(basis.items()):
        c = piv[lead]
        if c:
            basis[col] = [a - c * b for a, b in zip(piv, row)]
    basis[lead] = row
    return True


def multilinear_identity_rank(p: int, d: int, seed: int = 0, patience: int = 4,
                              max_tuples: int = 200) -> int:
    """Rank of the evaluation matrix of the d! multilinear monomials on A_1^(p).

    Columns are the products ``t_sigma(1) ... t_sigma(d)``; each random tuple adds
    one row per (order, degree) coordinate.  Tuples are drawn until the rank
    reaches d! or fails to grow for ``patience`` tuples in a row.
    """
    if d < 1 or d > 4 or p < 1 or p > 2:
        raise ValueError("rank check supports 1 <= d <= 4 and 1 <= p <= 2")
    perms = list(permutations(range(d)))
    full = len(perms)
    basis: dict[int, list] = {}
    stale = 0
    for t in range(max_tuples):
        rng = _rng("rank", seed, t)
        ts = [random_order_p_op(rng, p) for _ in range(d)]
        cols = []
        for sigma in perms:
            acc = ts[sigma[0]]
            for i in sigma[1:]:
                acc = acc * ts[i]
            cols.append(acc.raw())
        keys = sorted({(k, e) for c in cols for k, u in c.items() for e in u})
        grew = False
        for k, e in keys:
            row = [c.get(k, {}).get(e, 0) for c in cols]
            if any(row) and _insert(row, basis):
                grew = True
                if len(basis) == full:
                    return full
        stale = 0 if grew else stale + 1
        if stale >= patience:
            break
    return len(basis)


def check_rank(p: int, d: int, seed: int = 0) -> CheckResult:
    r = multilinear_identity_rank(p, d, seed)
    return CheckResult("rank", {"p": p, "d": d, "seed": seed}, r == factorial(d), None,
                       {"rank": r, "expected": factorial(d)})


# -- simplicity ----------------------------------------------------------------


def _mono_op(i: int, p: int, c=1) -> DiffOp:
    return DiffOp.term(Polynomial.monomial(i, c), p)


def simplicity_generation_check(p: int, s: int, eta: int | Fraction = 3) -> bool:
    """The two generation identities used to show every nonzero ideal is everything.

    For ``s >= 2p-1``: ``s_2p(d^p, x d^p, .., x^{2p-2} d^p, x^s d^p)`` equals
    ``lambda_p C(s, 2p-1) prod_{i<2p} i! x^{s-2p+1} d^p``, and the same with the
    first slot scaled by ``eta``.  For ``0 <= s < 2p-1``: putting ``u d^p`` with
    ``deg u = s`` into slot s of ``(x^i d^p)_{i<2p}`` gives ``lc(u) lambda_p prod i! d^p``.
    """
    if not 1 <= p <= 3 or not 0 <= s <= 2 * p + 4:
        raise ValueError("simplicity check supports p <= 3, 0 <= s <= 2p+4")
    lam = lambda_perm_dp(p)
    fac = prod(factorial(i) for i in range(2 * p))
    if s >= 2 * p - 1:
        l = s - 2 * p + 1
        base = [_mono_op(i, p) for i in range(2 * p - 1)]
        want = _mono_op(l, p, lam * comb(s, 2 * p - 1) * fac)
        if s_eval_dp(DIFFOP_RING, base + [_mono_op(s, p)]) != want:
            return False
        scaled = [_mono_op(0, p, eta)] + base[1:] + [_mono_op(l + 2 * p - 1, p)]
        return s_eval_dp(DIFFOP_RING, scaled) == want * eta
    args = [_mono_op(i, p) for i in range(2 * p)]
    args[s] = _mono_op(s, p)
    if s_eval_dp(DIFFOP_RING, args) != _mono_op(0, p, lam * fac):
        return False
    # lower-degree tail of u is killed by alternation against the other slots
    lead = 2
    u = Polynomial({s: lead, **{j: j + 1 for j in range(s)}})
    args[s] = DiffOp.term(u, p)
    return s_eval_dp(DIFFOP_RING, args) == _mono_op(0, p, lead * lam * fac)


def check_simplicity(p: int, s_max: int | None = None) -> CheckResult:
    if s_max is None:
        s_max = 2 * p + 4
    bad = [s for s in range(s_max + 1) if not simplicity_generation_check(p, s)]
    return CheckResult("simplicity", {"p": p, "s_max": s_max}, not bad,
                       {"s": bad[0]} if bad else None)
