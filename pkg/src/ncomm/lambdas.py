"""The constant lambda_p, by several independent routes.

* ``super``: the single surviving term of ``(a d^p)^{2p}``;
* ``weyl``: ``s_{2p}(d^p, x d^p, x^2/2! d^p, ..., x^{2p-1}/(2p-1)! d^p) = lambda_p d^p``;
* ``perm`` / ``perm-dp``: a signed sum over Sym_{2p} of powered prefix-sum products;
* ``matrix-rows`` / ``matrix-cols``: signed sums over the matrix set M_p.

Every route returns an exact ``int`` and raises :class:`FormulaError` if the
underlying identity fails to produce one.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations
from math import factorial, prod
from typing import Sequence

from ncomm import kernels
from ncomm.combinatorics import sort_and_sign
from ncomm.standard import DIFFOP_RING, s_eval_dp
from ncomm.superalg import power
from ncomm.weyl import DiffOp, Polynomial

__all__ = [
    "FormulaError",
    "METHODS",
    "method_ceiling",
    "lambda_super",
    "lambda_weyl",
    "lambda_perm_naive",
    "lambda_perm_dp",
    "enumerate_Mp",
    "lambda_matrix_rows",
    "lambda_matrix_cols",
    "lambda_by",
    "f_eval",
    "f_constancy_check",
    "f_symmetry_check",
    "f_degree_check",
]


class FormulaError(ArithmeticError):
    """A route produced something other than a single exact integer."""


# largest p each route accepts; beyond this the enumeration is out of reach
_CEILING = {
    "super": None,
    "weyl": None,
    "perm": 4,
    "perm-dp": 6,
    "matrix-rows": 4,
    "matrix-cols": 4,
}
METHODS = tuple(_CEILING)


def method_ceiling(method: str) -> int | None:
    return _CEILING[method]


def _guard(p: int, method: str) -> None:
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"p must be a positive integer, got {p!r}")
    top = _CEILING[method]
    if top is not None and p > top:
        raise ValueError(f"{method} route supports p <= {top}")


def _exact_int(q, what: str) -> int:
    q = Fraction(q)
    if q.denominator != 1:
        raise FormulaError(f"{what}: {q} is not an integer")
    return q.numerator


def lambda_super(p: int) -> int:
    _guard(p, "super")
    terms = power(p, 2 * p).terms()
    want = (tuple(range(2 * p)), p)
    if len(terms) != 1 or (terms[0].alpha, terms[0].order) != want:
        raise FormulaError(f"(a d^{p})^{2 * p} is not a single term: {terms}")
    return terms[0].coeff


def weyl_tuple(p: int) -> list[DiffOp]:
    """``x^i / i! d^p`` for ``i = 0..2p-1``."""
    return [DiffOp.term(Polynomial.monomial(i, Fraction(1, factorial(i))), p) for i in range(2 * p)]


def lambda_weyl(p: int) -> int:
    _guard(p, "weyl")
    out = s_eval_dp(DIFFOP_RING, weyl_tuple(p))
    if out.orders() != [p] or out[p].degree != 0:
        raise FormulaError(f"s_{2 * p} of the Weyl tuple is not a multiple of d^{p}: {out}")
    return _exact_int(out[p].coeff(0), "weyl")


def _vandermonde(xs: Sequence) -> object:
    n = len(xs)
    return prod(xs[i] - xs[j] for i in range(n) for j in range(i + 1, n))


def _perm_sign(seq) -> int:
    return sort_and_sign(seq)[1]


def lambda_perm_naive(p: int) -> int:
    """Literal (2p)!-term sum; only for small p."""
    _guard(p, "perm")
    n = 2 * p
    num = 0
    for sigma in permutations(range(1, n + 1)):
        acc = 1
        run = 0
        for v in sigma[:-1]:
            run += v
            acc *= run
        num += _perm_sign(sigma) * acc**p
    den = _vandermonde(range(1, n + 1))
    if num % den:
        raise FormulaError(f"permutation sum {num} not divisible by {den}")
    return num // den


def _prefix_dp(xs: Sequence, s: int):
    """``sum_sigma sign(sigma) (prod_{t<n} (x_sigma(1) + ... + x_sigma(t)))^s``.

    The running sum after placing a set S depends on S alone, so the sum over
    orderings collapses to a DP over subsets.  Appending ``i`` after S adds
    ``#{j in S : j > i}`` inversions.
    """
    n = len(xs)
    full = (1 << n) - 1
    sums = [0] * (1 << n)
    for S in range(1, 1 << n):
        low = (S & -S).bit_length() - 1
        sums[S] = sums[S & (S - 1)] + xs[low]
    F = [0] * (1 << n)
    F[0] = 1
    for S in range(1 << n):
        f = F[S]
        if not f:
            continue
        for i in range(n):
            bit = 1 << i
            if S & bit:
                continue
            T = S | bit
            term = f if T == full else f * sums[T] ** s
            if (S >> (i + 1)).bit_count() & 1:
                F[T] -= term
            else:
                F[T] += term
    return F[full]


def lambda_perm_dp(p: int) -> int:
    _guard(p, "perm-dp")
    n = 2 * p
    num = _prefix_dp(list(range(1, n + 1)), p)
    den = _vandermonde(range(1, n + 1))
    if num % den:
        raise FormulaError(f"permutation sum {num} not divisible by {den}")
    return num // den


def enumerate_Mp(p: int) -> list[tuple[tuple[int, ...], ...]]:
    """All members of M_p, row-major lexicographic order."""
    _guard(p, "matrix-rows")
    return list(kernels.iter_mp(p))


def column_sums(M) -> tuple[int, ...]:
    return tuple(sum(col) for col in zip(*M))


def lambda_matrix_rows(p: int) -> int:
    _guard(p, "matrix-rows")
    _, rows, _ = kernels.mp_sums(p)
    return rows


def lambda_matrix_cols(p: int) -> int:
    _guard(p, "matrix-cols")
    _, _, cols = kernels.mp_sums(p)
    pre = Fraction(factorial(p) ** (2 * p - 1), prod(factorial(j) for j in range(1, 2 * p)))
    return _exact_int(pre * cols, "matrix-cols")


_ROUTES = {
    "super": lambda_super,
    "weyl": lambda_weyl,
    "perm": lambda_perm_naive,
    "perm-dp": lambda_perm_dp,
    "matrix-rows": lambda_matrix_rows,
    "matrix-cols": lambda_matrix_cols,
}


def lambda_by(method: str, p: int) -> int:
    try:
        fn = _ROUTES[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return fn(p)


def applicable_methods(p: int) -> list[str]:
    return [m for m in METHODS if _CEILING[m] is None or p <= _CEILING[m]]


def f_eval(p: int, s: int, point: Sequence) -> Fraction:
    """``f_s`` at a point of 2p pairwise distinct rationals."""
    if p < 1 or s < p:
        raise ValueError("need p >= 1 and s >= p")
    xs = [Fraction(v) for v in point]
    if len(xs) != 2 * p:
        raise ValueError(f"f_s takes {2 * p} coordinates, got {len(xs)}")
    if len(set(xs)) != len(xs):
        raise ValueError("coordinates must be pairwise distinct")
    return Fraction(_prefix_dp(xs, s)) / _vandermonde(xs)


def _random_point(rng: random.Random, n: int, lo: int = -50, hi: int = 50) -> list[int]:
    return rng.sample(range(lo, hi + 1), n)


def f_constancy_check(p: int, points: int = 20, seed: int = 0) -> bool:
    """``f_p`` equals lambda_p at random distinct integer points."""
    lam = lambda_perm_dp(p)
    rng = random.Random(f"f-const/{p}/{seed}")
    return all(f_eval(p, p, _random_point(rng, 2 * p)) == lam for _ in range(points))


def f_symmetry_check(p: int, s: int, trials: int = 10, seed: int = 0) -> bool:
    rng = random.Random(f"f-sym/{p}/{s}/{seed}")
    for _ in range(trials):
        pt = _random_point(rng, 2 * p)
        shuffled = pt[:]
        rng.shuffle(shuffled)
        if f_eval(p, s, pt) != f_eval(p, s, shuffled):
            return False
    return True


def _newton_coeffs(ts, ys):
    c = list(ys)
    n = len(ts)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            c[i] = (c[i] - c[i - 1]) / (ts[i] - ts[i - j])
    return c


def f_degree_on_line(p: int, s: int, seed: int = 0, extra: int = 3) -> int:
    """Degree in t of ``f_s(t d + c)`` for a random line, by exact interpolation.

    Uses ``(2p-1)(s-p) + 1 + extra`` samples, so any degree up to
    ``(2p-1)(s-p) + extra`` would be seen.
    """
    rng = random.Random(f"f-deg/{p}/{s}/{seed}")
    n = 2 * p
    d = _random_point(rng, n, -9, 9)
    c = _random_point(rng, n, -30, 30)
    need = (2 * p - 1) * (s - p) + 1 + extra
    ts, ys = [], []
    t = 0
    while len(ts) < need:
        pt = [t * di + ci for di, ci in zip(d, c)]
        if len(set(pt)) == n:
            ts.append(Fraction(t))
            ys.append(f_eval(p, s, pt))
        t += 1
    coeffs = _newton_coeffs(ts, ys)
    nz = [i for i, v in enumerate(coeffs) if v]
    return nz[-1] if nz else -1


def f_degree_check(p: int, s: int, seed: int = 0) -> bool:
    return f_degree_on_line(p, s, seed) <= (2 * p - 1) * (s - p)
