"""Index combinatorics behind the positivity argument for lambda_p.

Sequences are plain tuples of non-negative ints.  ``E_k(l)`` is the set of
strictly increasing k-tuples of weight l; ``E_{k,0}(l)`` the ones starting with 0.
"""
from __future__ import annotations

from math import comb, factorial
from typing import Iterable, Sequence

__all__ = [
    "enumerate_E",
    "delta_closed",
    "delta_max_oracle",
    "sort_and_sign",
    "enumerate_G",
    "compute_M",
    "multinomial",
    "lemma_a1_set",
    "lemma_a2_check",
    "lemma_aaa1_check",
    "lemma_a3_sum",
    "lemma_a3_check",
    "mu_closed",
]


def enumerate_E(k: int, weight: int, zero_first: bool = False) -> list[tuple[int, ...]]:
    """Strictly increasing k-tuples of the given weight, lexicographically sorted."""
    if k < 0 or weight < 0:
        raise ValueError("k and weight must be non-negative")
    out: list[tuple[int, ...]] = []

    def rec(prefix, lo, left, slots):
        if slots == 0:
            if left == 0:
                out.append(prefix)
            return
        # the remaining slots take at least x, x+1, ..., x+slots-1
        x = lo
        while slots * x + slots * (slots - 1) // 2 <= left:
            rec(prefix + (x,), x + 1, left - x, slots - 1)
            x += 1

    if zero_first:
        if k > 0:
            rec((0,), 1, weight, k - 1)
    else:
        rec((), 0, weight, k)
    return out


def delta_closed(p: int, k: int) -> tuple[int, ...]:
    """Closed form of the lexicographic maximum of ``E_{k+1,0}(pk)``, ``0 <= k <= 2p-1``."""
    if p < 1 or not 0 <= k <= 2 * p - 1:
        raise ValueError(f"delta needs p >= 1 and 0 <= k <= 2p-1, got p={p}, k={k}")
    l, odd = divmod(k, 2)
    if odd:
        return (0,) + tuple(range(p - l, p + l + 1))
    return (0,) + tuple(range(p - l, p)) + tuple(range(p + 1, p + l + 1))


def delta_max_oracle(p: int, k: int, deficit: int = 0) -> tuple[int, ...]:
    """Brute-force maximum of ``E_{k+1,0}(pk - deficit)``.

    ``deficit=0`` gives delta(k), ``deficit=1`` gives delta_1(k).
    """
    if deficit not in (0, 1):
        raise ValueError("deficit must be 0 or 1")
    if p < 1 or k < 0:
        raise ValueError("need p >= 1, k >= 0")
    members = enumerate_E(k + 1, p * k - deficit, zero_first=True) if p * k >= deficit else []
    if not members:
        raise ValueError(f"E_{{{k + 1},0}}({p * k - deficit}) is empty")
    return members[-1]


def sort_and_sign(s: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """``(sorted(s), sign)``; sign is 0 on a repeated entry, else the sorting parity."""
    s = tuple(s)
    srt = tuple(sorted(s))
    if any(a == b for a, b in zip(srt, srt[1:])):
        return srt, 0
    inv = sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])
    return srt, -1 if inv & 1 else 1


def _sign(s) -> int:
    return sort_and_sign(s)[1]


def enumerate_G(k: int) -> list[tuple[int, ...]]:
    """``G_0 = {()}``, ``G_k = {(i) + 0_{i-1} + alpha : alpha in G_{k-i}, 1 <= i <= k}``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    table: list[list[tuple[int, ...]]] = [[()]]
    for n in range(1, k + 1):
        row = []
        for i in range(1, n + 1):
            head = (i,) + (0,) * (i - 1)
            row.extend(head + a for a in table[n - i])
        table.append(sorted(row))
    return table[k]


def compute_M(alpha: Sequence[int], beta: Sequence[int]) -> list[tuple[int, ...]]:
    """All ``gamma`` in ``Z_{>=0}^k`` with ``sort(alpha + gamma) = beta[1:]``.

    ``beta`` must have one more entry than ``alpha`` and start with 0.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    if len(beta) != len(alpha) + 1 or not beta or beta[0] != 0:
        raise ValueError("beta must start with 0 and be one longer than alpha")
    bar = beta[1:]
    k = len(alpha)
    out = []
    if sum(bar) < sum(alpha):
        return out
    # alpha + gamma is a rearrangement of bar: assign a distinct target to every slot
    used = [False] * k
    gam = [0] * k

    def rec(i):
        if i == k:
            out.append(tuple(gam))
            return
        seen = set()
        for j, t in enumerate(bar):
            if used[j] or t < alpha[i] or t in seen:
                continue
            seen.add(t)
            used[j] = True
            gam[i] = t - alpha[i]
            rec(i + 1)
            used[j] = False

    rec(0)
    return sorted(set(out))


def multinomial(s: Iterable[int]) -> int:
    s = tuple(s)
    if any(v < 0 for v in s):
        raise ValueError("negative part")
    out = factorial(sum(s))
    for v in s:
        out //= factorial(v)
    return out


def lemma_a1_set(p: int, k: int) -> list[tuple[int, ...]]:
    """The G-set description of ``M(delta(k-1), delta(k))``, sorted, ``1 <= k <= 2p-1``."""
    if p < 1 or not 1 <= k <= 2 * p - 1:
        raise ValueError(f"need 1 <= k <= 2p-1, got p={p}, k={k}")
    out = []
    if k % 2:
        l = (k + 1) // 2
        for i in range(1, l + 1):
            head = (p - l + i,) + (0,) * (i - 1)
            out.extend(head + a + (0,) * (l - 1) for a in enumerate_G(l - i))
    else:
        l = k // 2
        head = (p - l,) + (0,) * (l - 1)
        out.extend(head + a for a in enumerate_G(l))
    return sorted(out)


def lemma_a2_check(k: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    base = tuple(range(k))
    total = sum(
        _sign(tuple(a + b for a, b in zip(alpha, base))) * multinomial(alpha)
        for alpha in enumerate_G(k)
    )
    return total == 1


def lemma_aaa1_check(p: int, l: int) -> bool:
    if not 1 <= l <= p:
        raise ValueError("need 1 <= l <= p")
    lhs = sum((-1) ** i * comb(p, i) for i in range(l))
    return lhs == (-1) ** (l - 1) * comb(p - 1, l - 1)


def lemma_a3_sum(p: int, k: int) -> int:
    """Signed sum of ``sign(Gamma) * multinomial`` over ``lemma_a1_set(p, k)``.

    ``Gamma = gamma + delta(k-1)`` for each ``gamma`` in the set, which is the
    coefficient of ``a^{delta(k)}`` in ``a d^p (a^{delta(k-1)})``.
    """
    base = delta_closed(p, k - 1)
    return sum(
        _sign(tuple(g + b for g, b in zip(gam, base))) * multinomial(gam)
        for gam in lemma_a1_set(p, k)
    )


def lemma_a3_check(p: int, k: int) -> bool:
    """``C(p-1, l-1)`` for ``k = 2l-1``, ``C(p, l)`` for ``k = 2l``."""
    if p < 1 or not 1 <= k <= 2 * p - 1:
        raise ValueError(f"need 1 <= k <= 2p-1, got p={p}, k={k}")
    if k % 2:
        want = comb(p - 1, (k + 1) // 2 - 1)
    else:
        want = comb(p, k // 2)
    return lemma_a3_sum(p, k) == want


def mu_closed(p: int, k: int) -> int:
    if p < 1 or not 1 <= k <= 2 * p:
        raise ValueError(f"mu needs 1 <= k <= 2p, got p={p}, k={k}")
    if k % 2:
        return comb(p, (k - 1) // 2)
    return comb(p - 1, k // 2 - 1)
