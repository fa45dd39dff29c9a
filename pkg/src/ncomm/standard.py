"""The standard polynomial s_N over a caller-supplied associative ring.

    s_N(X_1, ..., X_N) = sum_{sigma in Sym_N} sign(sigma) X_sigma(1) ... X_sigma(N)

:func:`s_eval_naive` enumerates all N! orderings and is the oracle;
:func:`s_eval_dp` runs the subset recurrence

    T({i}) = X_i,
    T(S)   = sum_{i in S} (-1)^{#{j in S : j > i}} T(S - {i}) X_i,

in ``O(2^N N)`` ring products.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Any, Callable, Sequence

from ncomm import kernels
from ncomm.weyl import DiffOp

__all__ = [
    "Ring",
    "ArithmeticRing",
    "DIFFOP_RING",
    "Matrix",
    "matrix_ring",
    "permutation_sign",
    "s_eval_naive",
    "s_eval_dp",
]


@dataclass(frozen=True)
class Ring:
    """Associative ring contract: ``zero``, ``add``, ``neg``, ``mul``.

    ``fast_standard`` is an optional hook returning s_N for a whole argument list
    (or ``None`` when it does not apply); :func:`s_eval_dp` tries it first.
    """

    zero: Any
    add: Callable[[Any, Any], Any] = operator.add
    neg: Callable[[Any], Any] = operator.neg
    mul: Callable[[Any, Any], Any] = operator.mul
    fast_standard: Callable[[Sequence[Any]], Any] | None = None


def ArithmeticRing(zero, fast_standard=None) -> Ring:
    """Ring whose elements implement ``+``, unary ``-`` and ``*``."""
    return Ring(zero=zero, fast_standard=fast_standard)


def _diffop_standard(xs):
    if not all(isinstance(x, DiffOp) for x in xs):
        return None
    # s_N is multilinear: clear denominators per slot, divide once at the end
    scale = 1
    ops = []
    for X in xs:
        den = 1
        for u in X._t.values():
            for c in u.values():
                den = lcm(den, c.denominator)
        scale *= den
        ops.append([(k, d, int(c * den)) for k, u in X._t.items() for d, c in u.items()])
    raw: dict[int, dict[int, Any]] = {}
    for k, d, c in kernels.standard_int(ops):
        q = Fraction(c, scale) if scale != 1 else c
        if isinstance(q, Fraction) and q.denominator == 1:
            q = q.numerator
        raw.setdefault(k, {})[d] = q
    return DiffOp.from_raw(raw)


DIFFOP_RING = ArithmeticRing(DiffOp.zero(), fast_standard=_diffop_standard)


class Matrix:
    """Small square matrix over exact scalars; test scaffolding for s_N."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def zero(cls, n):
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n(self):
        return len(self.rows)

    def __add__(self, other):
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            cols = list(zip(*other.rows))
            return Matrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])
        return Matrix([[a * other for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __bool__(self):
        return any(a for r in self.rows for a in r)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]})"


def matrix_ring(n: int) -> Ring:
    return ArithmeticRing(Matrix.zero(n))


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of a sequence of distinct values read as a permutation."""
    inv = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inv & 1 else 1


def s_eval_naive(ring: Ring, xs: Sequence[Any]):
    """Signed sum over all orderings, in lexicographic permutation order.

    Products are formed left to right; a prefix product is shared by every
    ordering that starts with it, which is what lexicographic DFS gives for free.
    """
    n = len(xs)
    if n < 1:
        raise ValueError("s_N needs N >= 1")
    terms = []

    def walk(prefix_prod, remaining, sign):
        if not remaining:
            terms.append(prefix_prod if sign > 0 else ring.neg(prefix_prod))
            return
        for pos, i in enumerate(remaining):
            # placing i next: remaining elements smaller than i become inversions
            s = -sign if pos & 1 else sign
            prod = xs[i] if prefix_prod is None else ring.mul(prefix_prod, xs[i])
            walk(prod, remaining[:pos] + remaining[pos + 1:], s)

    walk(None, tuple(range(n)), 1)
    total = ring.zero
    for t in terms:
        total = ring.add(total, t)
    return total


def s_eval_dp(ring: Ring, xs: Sequence[Any], *, accelerate: bool = True):
    """Same value as :func:`s_eval_naive` via the subset recurrence.

    With ``accelerate`` the ring's ``fast_standard`` hook runs first (for integer
    Weyl operators that is the compiled kernel, which implements this same
    recurrence).
    """
    n = len(xs)
    if n < 1:
        raise ValueError("s_N needs N >= 1")
    if accelerate and ring.fast_standard is not None:
        out = ring.fast_standard(xs)
        if out is not None:
            return out
    layer = {1 << i: xs[i] for i in range(n)}
    for size in range(2, n + 1):
        nxt = {}
        for idx in combinations(range(n), size):
            S = 0
            for i in idx:
                S |= 1 << i
            acc = ring.zero
            for i in idx:
                term = ring.mul(layer[S & ~(1 << i)], xs[i])
                if (S >> (i + 1)).bit_count() & 1:
                    term = ring.neg(term)
                acc = ring.add(acc, term)
            nxt[S] = acc
        layer = nxt
    return layer[(1 << n) - 1]
