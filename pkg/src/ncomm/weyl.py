"""Univariate polynomials over Q and the first Weyl algebra A_1.

A :class:`DiffOp` is a finite sum ``u_k(x) d^k`` acting on ``Q[x]``; the product
is composition of operators,

    u d^k . v d^l = sum_s C(k, s) u d^s(v) d^(k + l - s).

Coefficients are Python ``int`` or :class:`fractions.Fraction`; both are exact and
compare/hash consistently, so the canonical form only has to drop zeros.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Mapping, Sequence

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "as_rational",
    "format_rational",
    "Polynomial",
    "DiffOp",
    "poly_derive",
    "op_compose",
    "homogeneous_part",
    "wronskian",
    "ParseError",
]


class ParseError(ValueError):
    """Malformed textual or JSON input."""


def as_rational(value) -> int | Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to an exact scalar.

    Integral values come back as ``int`` so integer-only data stays on the fast path.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            value = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {value!r}") from exc
    elif isinstance(value, Rational):
        value = Fraction(value)
    else:
        raise TypeError(f"not an exact rational: {value!r}")
    return value.numerator if value.denominator == 1 else value


def format_rational(c) -> str:
    return str(Fraction(c))


def _fmt_coeff(c) -> str:
    q = Fraction(c)
    return str(q.numerator) if q.denominator == 1 else f"({q})"


def _falling(d: int, s: int) -> int:
    out = 1
    for t in range(d - s + 1, d + 1):
        out *= t
    return out


def _raw_derive(u: dict, r: int) -> dict:
    if r == 0:
        return u
    return {d - r: c * _falling(d, r) for d, c in u.items() if d >= r}


def _raw_clean(u: dict) -> dict:
    return {d: c for d, c in u.items() if c}


class Polynomial:
    """Sparse polynomial in ``x``: degree -> exact coefficient, no stored zeros."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | Iterable[tuple[int, object]] | None = None):
        c: dict[int, object] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for d, v in items:
                d = int(d)
                if d < 0:
                    raise ValueError("negative degree")
                c[d] = c.get(d, 0) + as_rational(v)
        self._c = _raw_clean(c)
        self._hash = None

    @classmethod
    def _wrap(cls, raw: dict) -> "Polynomial":
        obj = cls.__new__(cls)
        obj._c = raw
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        return cls({degree: coeff})

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({0: c})

    # -- structure ---------------------------------------------------------
    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return max(self._c) if self._c else None

    def coeff(self, d: int):
        return self._c.get(d, 0)

    def items(self):
        """(degree, coefficient) pairs in descending degree."""
        return sorted(self._c.items(), reverse=True)

    def raw(self) -> dict:
        return dict(self._c)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c.values())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for d, v in other._c.items():
            c[d] = c.get(d, 0) + v
        return Polynomial._wrap(_raw_clean(c))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap({d: -v for d, v in self._c.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out: dict[int, object] = {}
            for d1, c1 in self._c.items():
                for d2, c2 in other._c.items():
                    out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
            return Polynomial._wrap(_raw_clean(out))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return Polynomial()
            return Polynomial._wrap({d: v * other for d, v in self._c.items()})
        return NotImplemented

    __rmul__ = __mul__

    def derive(self, r: int = 1) -> "Polynomial":
        return poly_derive(self, r)

    def __call__(self, x):
        acc = 0
        for d, c in self._c.items():
            acc += c * x**d
        return acc

    # -- text --------------------------------------------------------------
    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for d, c in self.items():
            parts.append(_fmt_coeff(c) if d == 0 else f"{_fmt_coeff(c)}*x^{d}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        p = _Parser(text)
        out = p.poly()
        p.expect_end()
        return out

    def to_json_obj(self) -> list:
        return [[d, format_rational(c)] for d, c in self.items()]

    @classmethod
    def from_json_obj(cls, obj) -> "Polynomial":
        try:
            return cls((int(d), as_rational(c)) for d, c in obj)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad polynomial JSON {obj!r}") from exc


def _as_poly(v):
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return Polynomial({0: v})
    return None


def poly_derive(u: Polynomial, r: int) -> Polynomial:
    """``d^r(u)`` with ``d(x^n) = n x^(n-1)``."""
    if r < 0:
        raise ValueError("derivative order must be non-negative")
    return Polynomial._wrap(_raw_derive(u._c, r))


class DiffOp:
    """Element of A_1: order -> :class:`Polynomial`, no zero components.

    Internally the components are plain ``{degree: coeff}`` dicts; they are never
    mutated after construction.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        t: dict[int, dict] = {}
        if terms:
            for k, u in terms.items():
                k = int(k)
                if k < 0:
                    raise ValueError("negative order")
                if not isinstance(u, Polynomial):
                    u = Polynomial(u) if isinstance(u, Mapping) else Polynomial.constant(u)
                if u:
                    t[k] = dict(u._c)
        self._t = t
        self._hash = None

    @classmethod
    def _wrap(cls, raw: dict) -> "DiffOp":
        obj = cls.__new__(cls)
        obj._t = raw
        obj._hash = None
        return obj

    @classmethod
    def from_raw(cls, raw: Mapping[int, Mapping[int, object]]) -> "DiffOp":
        out = {}
        for k, u in raw.items():
            u = _raw_clean(dict(u))
            if u:
                out[k] = u
        return cls._wrap(out)

    @classmethod
    def zero(cls) -> "DiffOp":
        return cls._wrap({})

    @classmethod
    def identity(cls) -> "DiffOp":
        return cls._wrap({0: {0: 1}})

    @classmethod
    def term(cls, u, order: int) -> "DiffOp":
        """``u d^order`` for a polynomial (or scalar) ``u``."""
        return cls({order: u})

    # -- structure ---------------------------------------------------------
    def orders(self) -> list[int]:
        return sorted(self._t)

    @property
    def min_order(self) -> int:
        if not self._t:
            raise ValueError("zero operator has no order")
        return min(self._t)

    @property
    def max_order(self) -> int:
        if not self._t:
            raise ValueError("zero operator has no order")
        return max(self._t)

    def __getitem__(self, k: int) -> Polynomial:
        return Polynomial._wrap(dict(self._t.get(k, {})))

    def items(self):
        """(order, Polynomial) pairs in descending order."""
        return [(k, Polynomial._wrap(dict(self._t[k]))) for k in sorted(self._t, reverse=True)]

    def raw(self) -> dict:
        return {k: dict(u) for k, u in self._t.items()}

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for u in self._t.values() for c in u.values())

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((k, frozenset(u.items())) for k, u in self._t.items()))
        return self._hash

    # -- arithmetic --------------------------------------------------------
    def _combine(self, other: "DiffOp", sign: int) -> "DiffOp":
        out = {k: dict(u) for k, u in self._t.items()}
        for k, v in other._t.items():
            tgt = out.setdefault(k, {})
            for d, c in v.items():
                tgt[d] = tgt.get(d, 0) + sign * c
        return DiffOp.from_raw(out)

    def __add__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return DiffOp._wrap({k: {d: -c for d, c in u.items()} for k, u in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, DiffOp):
            return op_compose(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return DiffOp.zero()
            return DiffOp._wrap({k: {d: c * other for d, c in u.items()} for k, u in self._t.items()})
        if isinstance(other, Polynomial):
            return op_compose(self, DiffOp({0: other}))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        if isinstance(other, Polynomial):
            return op_compose(DiffOp({0: other}), self)
        return NotImplemented

    def apply(self, u: Polynomial) -> Polynomial:
        """Act on a polynomial: ``sum_k u_k d^k(u)``."""
        acc = Polynomial()
        for k, coeff in self._t.items():
            acc = acc + Polynomial._wrap(coeff) * poly_derive(u, k)
        return acc

    # -- text / JSON -------------------------------------------------------
    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for k in sorted(self._t, reverse=True):
            u = Polynomial._wrap(self._t[k])
            body = str(u)
            if len(self._t[k]) > 1:
                body = f"({body})"
            parts.append(f"{body} d^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"DiffOp({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "DiffOp":
        p = _Parser(text)
        out = p.operator()
        p.expect_end()
        return out

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"order": k, "poly": Polynomial._wrap(self._t[k]).to_json_obj()}
                for k in sorted(self._t, reverse=True)
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "DiffOp":
        try:
            terms = obj["terms"]
            acc = DiffOp.zero()
            for t in terms:
                acc = acc + DiffOp({int(t["order"]): Polynomial.from_json_obj(t["poly"])})
            return acc
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad operator JSON {obj!r}") from exc

    @classmethod
    def from_json(cls, text: str) -> "DiffOp":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc
        return cls.from_json_obj(obj)


def op_compose(X: DiffOp, Y: DiffOp) -> DiffOp:
    """Composition ``X . Y`` in A_1."""
    out: dict[int, dict] = {}
    derivs: dict[tuple[int, int], dict] = {}
    for k, u in X._t.items():
        for l, v in Y._t.items():
            for s in range(k + 1):
                dv = derivs.get((l, s))
                if dv is None:
                    dv = derivs[(l, s)] = _raw_derive(v, s)
                if not dv:
                    break
                b = comb(k, s)
                tgt = out.setdefault(k + l - s, {})
                for d1, c1 in u.items():
                    bc = b * c1
                    for d2, c2 in dv.items():
                        tgt[d1 + d2] = tgt.get(d1 + d2, 0) + bc * c2
    return DiffOp.from_raw(out)


def homogeneous_part(X: DiffOp, k: int) -> DiffOp:
    u = X._t.get(k)
    return DiffOp._wrap({k: dict(u)}) if u else DiffOp.zero()


def wronskian(polys: Sequence[Polynomial]) -> Polynomial:
    """Determinant of ``[d^j(u_i)]`` (row j, column i), exact.

    Laplace expansion along the bottom row with the minors memoised by column
    subset, so the cost is ``O(2^m m)`` polynomial products.
    """
    m = len(polys)
    if m < 1:
        raise ValueError("wronskian needs at least one polynomial")
    rows = [[poly_derive(u, j) for u in polys] for j in range(m)]
    minors: dict[int, Polynomial] = {1 << i: rows[0][i] for i in range(m)}
    for size in range(2, m + 1):
        r = size - 1
        nxt: dict[int, Polynomial] = {}
        for S, _ in _subsets_of_size(m, size):
            acc = Polynomial()
            for i in range(m):
                if not S >> i & 1:
                    continue
                entry = rows[r][i]
                if not entry:
                    continue
                sub = minors[S & ~(1 << i)]
                if not sub:
                    continue
                term = sub * entry
                acc = acc - term if (S >> (i + 1)).bit_count() & 1 else acc + term
            nxt[S] = acc
        minors = nxt
    return minors[(1 << m) - 1]


def _subsets_of_size(n: int, k: int):
    from itertools import combinations

    for idx in combinations(range(n), k):
        S = 0
        for i in idx:
            S |= 1 << i
        yield S, idx


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(d\^?)|(x)|([()+\-*/^]))")


class _Parser:
    """Recursive-descent parser for the textual polynomial/operator forms."""

    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str]] = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character at {pos} in {self.text!r}")
            num, dee, ex, sym = m.groups()
            if num is not None:
                self.toks.append(("int", num))
            elif dee is not None:
                self.toks.append(("d", dee))
            elif ex is not None:
                self.toks.append(("x", ex))
            else:
                self.toks.append((sym, sym))
            pos = m.end()
        self.i = 0

    def peek(self, off: int = 0):
        j = self.i + off
        return self.toks[j][0] if j < len(self.toks) else None

    def take(self, kind: str) -> str:
        if self.peek() != kind:
            raise ParseError(f"expected {kind!r} in {self.text!r}")
        val = self.toks[self.i][1]
        self.i += 1
        return val

    def expect_end(self):
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")

    def _paren_coeff_ahead(self) -> bool:
        j = 1
        if self.peek(j) == "-":
            j += 1
        if self.peek(j) != "int":
            return False
        j += 1
        if self.peek(j) == "/":
            if self.peek(j + 1) != "int":
                return False
            j += 2
        return self.peek(j) == ")"

    def coeff(self):
        if self.peek() == "(":
            self.take("(")
            neg = self.peek() == "-"
            if neg:
                self.take("-")
            val = self._ratio()
            self.take(")")
            return -val if neg else val
        return self._ratio()

    def _ratio(self):
        num = int(self.take("int"))
        if self.peek() == "/":
            self.take("/")
            den = int(self.take("int"))
            if den == 0:
                raise ParseError("zero denominator")
            return as_rational(Fraction(num, den))
        return num

    def _xpow(self) -> int:
        self.take("x")
        if self.peek() == "^":
            self.take("^")
            return int(self.take("int"))
        return 1

    def mono(self) -> Polynomial:
        if self.peek() == "x":
            return Polynomial({self._xpow(): 1})
        c = self.coeff()
        if self.peek() == "*":
            self.take("*")
            return Polynomial({self._xpow(): c})
        if self.peek() == "x":
            return Polynomial({self._xpow(): c})
        return Polynomial({0: c})

    def signed_mono(self) -> Polynomial:
        neg = False
        while self.peek() == "-":
            self.take("-")
            neg = not neg
        m = self.mono()
        return -m if neg else m

    def poly(self) -> Polynomial:
        acc = self.signed_mono()
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())
            m = self.signed_mono()
            acc = acc + m if op == "+" else acc - m
        return acc

    def _order(self) -> int:
        tok = self.take("d")
        if tok == "d^":
            return int(self.take("int"))
        return 1

    def op_term(self) -> DiffOp:
        neg = False
        while self.peek() == "-":
            self.take("-")
            neg = not neg
        if self.peek() == "(" and not self._paren_coeff_ahead():
            self.take("(")
            u = self.poly()
            self.take(")")
        elif self.peek() == "d":
            u = Polynomial({0: 1})
        else:
            u = self.mono()
        term = DiffOp({self._order(): u})
        return -term if neg else term

    def operator(self) -> DiffOp:
        if self.peek() == "int" and self.toks[self.i][1] == "0" and self.peek(1) is None:
            self.take("int")
            return DiffOp.zero()
        acc = self.op_term()
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())
            t = self.op_term()
            acc = acc + t if op == "+" else acc - t
        return acc
