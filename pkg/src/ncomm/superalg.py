"""Grassmann algebra on odd generators d^i(a) and super differential operators.

A monomial ``a^alpha = d^{alpha_1}(a) ... d^{alpha_k}(a)`` with ``alpha`` strictly
increasing is stored as the bitmask ``sum 2^alpha_i``.  Public functions accept
and return plain tuples; the masks are an internal detail.

Products of odd generators anticommute, so multiplying two monomials costs a
sign equal to the parity of the interleaving, and ``d`` acts as an even
derivation with ``d(d^i(a)) = d^{i+1}(a)``.
"""
from __future__ import annotations

import json
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, NamedTuple

from ncomm.combinatorics import delta_closed as delta, delta_max_oracle

__all__ = [
    "to_mask",
    "to_alpha",
    "mono_mul",
    "SuperElement",
    "SuperOp",
    "SuperTerm",
    "super_derive",
    "super_compose",
    "super_apply",
    "power",
    "leader",
    "nu",
    "mu",
    "gamma",
]


def to_mask(alpha: Iterable[int]) -> int:
    """Bitmask of a strictly increasing index sequence."""
    mask = 0
    prev = -1
    for i in alpha:
        if i < 0 or i <= prev:
            raise ValueError(f"not strictly increasing and non-negative: {tuple(alpha)}")
        mask |= 1 << i
        prev = i
    return mask


def to_alpha(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _mul_masks(A: int, B: int) -> int:
    """Sign of a^A a^B as a merged monomial (0 when they share a generator)."""
    if A & B:
        return 0
    inv = 0
    b = B
    while b:
        low = b & -b
        inv += (A & ~((low << 1) - 1)).bit_count()
        b ^= low
    return -1 if inv & 1 else 1


def mono_mul(alpha, beta) -> tuple[int, tuple[int, ...] | None]:
    """``a^alpha a^beta`` as ``(sign, merged)``; ``(0, None)`` if they collide."""
    A, B = to_mask(alpha), to_mask(beta)
    sign = _mul_masks(A, B)
    if sign == 0:
        return 0, None
    return sign, to_alpha(A | B)


@lru_cache(maxsize=1 << 16)
def _derive_mask(mask: int, r: int) -> tuple[tuple[int, int], ...]:
    # d^r(a^mask) as sorted (mask, coeff) pairs
    cur = {mask: 1}
    for _ in range(r):
        nxt: dict[int, int] = {}
        for m, c in cur.items():
            rest = m
            while rest:
                low = rest & -rest
                rest ^= low
                if m & (low << 1):
                    continue  # raised index collides with its neighbour
                t = m ^ low ^ (low << 1)
                nxt[t] = nxt.get(t, 0) + c
        cur = {m: c for m, c in nxt.items() if c}
    return tuple(sorted(cur.items()))


def _mono_key(mask: int):
    # order on monomials: shorter first, then lexicographic on the sequence
    return (mask.bit_count(), to_alpha(mask))


def _format_alpha(alpha) -> str:
    return "a(" + ",".join(map(str, alpha)) + ")"


class SuperElement:
    """Integer combination of Grassmann monomials (an element of U)."""

    __slots__ = ("_c",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for alpha, c in items:
            m = to_mask(alpha)
            acc[m] = acc.get(m, 0) + int(c)
        self._c = {m: c for m, c in acc.items() if c}

    @classmethod
    def _wrap(cls, masks: dict[int, int]) -> "SuperElement":
        out = cls.__new__(cls)
        out._c = {m: c for m, c in masks.items() if c}
        return out

    @classmethod
    def monomial(cls, alpha=(), coeff=1) -> "SuperElement":
        return cls([(tuple(alpha), coeff)])

    def coeff(self, alpha) -> int:
        return self._c.get(to_mask(alpha), 0)

    def items(self):
        """``(alpha, coeff)`` pairs in increasing monomial order."""
        return [(to_alpha(m), self._c[m]) for m in sorted(self._c, key=_mono_key)]

    def grades(self) -> set[tuple[int, int]]:
        """The set of (length, weight) pairs occurring."""
        return {(m.bit_count(), sum(to_alpha(m))) for m in self._c}

    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        return isinstance(other, SuperElement) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "SuperElement") -> "SuperElement":
        out = dict(self._c)
        for m, c in other._c.items():
            out[m] = out.get(m, 0) + c
        return SuperElement._wrap(out)

    def __neg__(self):
        return SuperElement._wrap({m: -c for m, c in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SuperElement._wrap({m: c * other for m, c in self._c.items()})
        if not isinstance(other, SuperElement):
            return NotImplemented
        out: dict[int, int] = {}
        for A, a in self._c.items():
            for B, b in other._c.items():
                s = _mul_masks(A, B)
                if s:
                    out[A | B] = out.get(A | B, 0) + s * a * b
        return SuperElement._wrap(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{c} {_format_alpha(a)}" for a, c in self.items())

    def __repr__(self):
        return f"SuperElement({self.items()!r})"


def super_derive(u: SuperElement, r: int = 1) -> SuperElement:
    """``d^r(u)`` with d the even derivation raising one index at a time."""
    if r < 0:
        raise ValueError("r must be non-negative")
    out: dict[int, int] = {}
    for m, c in u._c.items():
        for t, k in _derive_mask(m, r):
            out[t] = out.get(t, 0) + c * k
    return SuperElement._wrap(out)


class SuperTerm(NamedTuple):
    coeff: int
    alpha: tuple[int, ...]
    order: int

    def __str__(self):
        return f"{self.coeff} {_format_alpha(self.alpha)} d^{self.order}"


class SuperOp:
    """Finite sum of ``c a^alpha d^i`` (an element of L)."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for key, c in items:
            alpha, order = key
            if order < 0:
                raise ValueError("negative order")
            k = (to_mask(alpha), order)
            acc[k] = acc.get(k, 0) + int(c)
        self._t = {k: c for k, c in acc.items() if c}

    @classmethod
    def _wrap(cls, terms: dict[tuple[int, int], int]) -> "SuperOp":
        out = cls.__new__(cls)
        out._t = {k: c for k, c in terms.items() if c}
        return out

    @classmethod
    def term(cls, alpha=(), order=0, coeff=1) -> "SuperOp":
        return cls([((tuple(alpha), order), coeff)])

    @classmethod
    def identity(cls) -> "SuperOp":
        return cls.term((), 0, 1)

    def coeff(self, alpha, order) -> int:
        return self._t.get((to_mask(alpha), order), 0)

    def terms(self) -> list[SuperTerm]:
        """Terms by decreasing order, then increasing monomial."""
        keys = sorted(self._t, key=lambda k: (-k[1], _mono_key(k[0])))
        return [SuperTerm(self._t[k], to_alpha(k[0]), k[1]) for k in keys]

    def orders(self) -> list[int]:
        return sorted({k[1] for k in self._t})

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def __eq__(self, other):
        return isinstance(other, SuperOp) and self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __add__(self, other: "SuperOp") -> "SuperOp":
        out = dict(self._t)
        for k, c in other._t.items():
            out[k] = out.get(k, 0) + c
        return SuperOp._wrap(out)

    def __neg__(self):
        return SuperOp._wrap({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SuperOp._wrap({k: c * other for k, c in self._t.items()})
        if isinstance(other, SuperOp):
            return super_compose(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __str__(self):
        if not self._t:
            return "0"
        return " + ".join(str(t) for t in self.terms())

    def __repr__(self):
        return f"SuperOp({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "SuperOp":
        """Inverse of ``str``: ``"90 a(0,1,2) d^3 + -2 a() d^0"``."""
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for chunk in text.split(" + "):
            parts = chunk.split()
            if len(parts) != 3 or not parts[1].startswith("a(") or not parts[2].startswith("d^"):
                raise ValueError(f"bad super term {chunk!r}")
            inner = parts[1][2:-1]
            alpha = tuple(int(v) for v in inner.split(",")) if inner else ()
            terms.append(((alpha, int(parts[2][2:])), int(parts[0])))
        return cls(terms)

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"alpha": list(t.alpha), "order": t.order, "coeff": str(t.coeff)}
                for t in self.terms()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "SuperOp":
        return cls(
            ((tuple(t["alpha"]), int(t["order"])), int(t["coeff"])) for t in obj["terms"]
        )

    @classmethod
    def from_json(cls, text: str) -> "SuperOp":
        return cls.from_json_obj(json.loads(text))


def super_compose(X: SuperOp, Y: SuperOp) -> SuperOp:
    """``u d^k . v d^l = sum_s C(k, s) u d^s(v) d^(k+l-s)``, extended bilinearly."""
    out: dict[tuple[int, int], int] = {}
    for (A, k), a in X._t.items():
        for (B, l), b in Y._t.items():
            ab = a * b
            for s in range(k + 1):
                der = _derive_mask(B, s)
                if not der:
                    break
                f = comb(k, s) * ab
                tgt_order = k + l - s
                for D, d in der:
                    sign = _mul_masks(A, D)
                    if sign:
                        key = (A | D, tgt_order)
                        out[key] = out.get(key, 0) + sign * f * d
    return SuperOp._wrap(out)


def super_apply(X: SuperOp, u: SuperElement) -> SuperElement:
    """Act on u: each term ``c a^alpha d^i`` contributes ``c a^alpha d^i(u)``."""
    out: dict[int, int] = {}
    for (A, i), c in X._t.items():
        for m, e in u._c.items():
            for D, d in _derive_mask(m, i):
                sign = _mul_masks(A, D)
                if sign:
                    out[A | D] = out.get(A | D, 0) + sign * c * e * d
    return SuperElement._wrap(out)


def _times_a_dp(T: dict[tuple[int, int], int], p: int) -> dict[tuple[int, int], int]:
    # T . (a d^p): only d^s(a) = a^{(s)} appears, so no derivative cache is needed
    out: dict[tuple[int, int], int] = {}
    for (A, k), c in T.items():
        for s in range(k + 1):
            bit = 1 << s
            if A & bit:
                continue
            sign = -1 if (A >> (s + 1)).bit_count() & 1 else 1
            key = (A | bit, k + p - s)
            out[key] = out.get(key, 0) + sign * comb(k, s) * c
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=128)
def _power_cached(p: int, k: int) -> SuperOp:
    if k == 0:
        return SuperOp.identity()
    prev = _power_cached(p, k - 1)
    return SuperOp._wrap(_times_a_dp(prev._t, p))


def power(p: int, k: int) -> SuperOp:
    """``(a d^p)^k``; ``k = 0`` is the identity operator."""
    if p < 1:
        raise ValueError("p must be positive")
    if k < 0:
        raise ValueError("k must be non-negative")
    return _power_cached(p, k)


def leader(X: SuperOp) -> SuperTerm:
    """Greatest-monomial term among the terms of least d-order."""
    if not X:
        raise ValueError("leader of the zero operator is undefined")
    low = min(k[1] for k in X._t)
    A = max((m for m, i in X._t if i == low), key=_mono_key)
    return SuperTerm(X._t[(A, low)], to_alpha(A), low)


def _check_k(p, k, lo, hi, name):
    if p < 1 or not lo <= k <= hi:
        raise ValueError(f"{name}(p={p}, k={k}) out of range {lo}..{hi}")


def nu(p: int, k: int) -> int:
    """Coefficient of ``a^{delta(k-1)}`` in ``(a d^p)^{k-1}`` applied to ``a``."""
    _check_k(p, k, 1, 2 * p, "nu")
    u = super_apply(power(p, k - 1), SuperElement.monomial((0,)))
    return u.coeff(delta(p, k - 1))


def mu(p: int, k: int) -> int:
    """Coefficient of ``a^{delta(k-1)}`` in ``a d^p (a^{delta(k-2)})``; ``mu_1 = 1``."""
    _check_k(p, k, 1, 2 * p, "mu")
    if k == 1:
        return 1
    u = super_apply(SuperOp.term((0,), p), SuperElement.monomial(delta(p, k - 2)))
    return u.coeff(delta(p, k - 1))


def gamma(p: int, k: int) -> int:
    """``p`` times the coefficient of ``a^{delta_1(k-1)}`` in ``a d^{p-1}(a^{delta(k-2)})``."""
    _check_k(p, k, 2, 2 * p - 1, "gamma")
    u = super_apply(SuperOp.term((0,), p - 1), SuperElement.monomial(delta(p, k - 2)))
    return p * u.coeff(delta_max_oracle(p, k - 1, 1))
