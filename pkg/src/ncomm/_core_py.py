"""Pure-Python twins of the kernels in ``_core.pyx``.

Same signatures and results; Python ints never overflow, so these never raise
``OverflowError``.

Operator data is exchanged as lists of ``(order, degree, coeff)`` integer
triples; the result of :func:`standard_int` uses the same form, sorted.
"""
from math import comb, factorial


def _falling(d, s):
    out = 1
    for t in range(d - s + 1, d + 1):
        out *= t
    return out


def _compose_right(T, X):
    # T . X, both {order: {degree: coeff}}
    out = {}
    for k, u in T.items():
        for l, v in X.items():
            for s in range(k + 1):
                b = comb(k, s)
                tgt = out.setdefault(k + l - s, {})
                hit = False
                for d2, c2 in v.items():
                    if d2 < s:
                        continue
                    hit = True
                    f = b * c2 * _falling(d2, s)
                    for d1, c1 in u.items():
                        key = d1 + d2 - s
                        tgt[key] = tgt.get(key, 0) + f * c1
                if not hit:
                    break
    return out


def _accumulate(acc, X, sign):
    for k, u in X.items():
        tgt = acc.setdefault(k, {})
        for d, c in u.items():
            tgt[d] = tgt.get(d, 0) + sign * c


def _clean(X):
    out = {}
    for k, u in X.items():
        u = {d: c for d, c in u.items() if c}
        if u:
            out[k] = u
    return out


def standard_int(ops):
    """Standard polynomial ``s_N`` of integer Weyl operators by subset DP.

    ``T(S) = sum_{i in S} (-1)^{#{j in S: j > i}} T(S - {i}) . X_i``.
    """
    n = len(ops)
    if n == 0:
        raise ValueError("need at least one operator")
    xs = []
    for triples in ops:
        X = {}
        for k, d, c in triples:
            X.setdefault(k, {})
            X[k][d] = X[k].get(d, 0) + c
        xs.append(_clean(X))
    layer = {1 << i: xs[i] for i in range(n)}
    for size in range(2, n + 1):
        nxt = {}
        for S in range(1, 1 << n):
            if S.bit_count() != size:
                continue
            acc = {}
            for i in range(n):
                if not S >> i & 1:
                    continue
                prev = layer[S & ~(1 << i)]
                if not prev or not xs[i]:
                    continue
                sign = -1 if (S >> (i + 1)).bit_count() & 1 else 1
                _accumulate(acc, _compose_right(prev, xs[i]), sign)
            nxt[S] = _clean(acc)
        layer = nxt
    full = layer[(1 << n) - 1]
    return sorted((k, d, c) for k, u in full.items() for d, c in u.items())


def _perm_sign(seq):
    s = 1
    n = len(seq)
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] > seq[j]:
                s = -s
    return s


def iter_mp(p):
    """Members of M_p as tuples of row tuples, row-major lexicographic order.

    Row-by-row DFS; column ``j`` is final once row ``j`` is placed (the matrix is
    upper triangular), which is where distinctness and the ``<= 2p-1`` bound of
    the column sums get pruned.
    """
    n = 2 * p - 1
    rows_cache = {}

    def compositions(total, slots):
        key = (total, slots)
        if key not in rows_cache:
            out = []

            def rec(prefix, left, k):
                if k == 1:
                    out.append(prefix + (left,))
                    return
                for v in range(left + 1):
                    rec(prefix + (v,), left - v, k - 1)

            rec((), total, slots)
            # lexicographic on the full row: leading zeros come first
            rows_cache[key] = out
        return rows_cache[key]

    colsum = [0] * n
    used = [False] * (n + 1)
    chosen = []
    padded = {}  # shared row tuples keep enumerate_Mp(4) in memory

    def rec(i):
        if i == n:
            yield tuple(chosen)
            return
        for tail in compositions(p, n - i):
            ok = True
            for j, v in enumerate(tail):
                if colsum[i + j] + v > n:
                    ok = False
                    break
            if not ok:
                continue
            final = colsum[i] + tail[0]
            if final == 0 or used[final]:
                continue
            for j, v in enumerate(tail):
                colsum[i + j] += v
            used[final] = True
            row = padded.get((i, tail))
            if row is None:
                row = padded[(i, tail)] = (0,) * i + tail
            chosen.append(row)
            yield from rec(i + 1)
            chosen.pop()
            used[final] = False
            for j, v in enumerate(tail):
                colsum[i + j] -= v

    yield from rec(0)


def _multinomial(fact, parts):
    out = fact[sum(parts)]
    for v in parts:
        out //= fact[v]
    return out


def mp_sums(p):
    """Return ``(count, row_sum, col_sum)`` over M_p.

    ``row_sum = sum sign r(M) prod_i multinomial(p; row i)`` and
    ``col_sum = sum sign r(M) prod_j multinomial(r_j; column j)`` (without the
    ``p!^(2p-1) / prod j!`` prefactor).
    """
    n = 2 * p - 1
    fact = [factorial(i) for i in range(max(n, p) + 1)]
    count = row_sum = col_sum = 0
    for M in iter_mp(p):
        cols = [[M[i][j] for i in range(j + 1)] for j in range(n)]
        r = [sum(c) for c in cols]
        sign = _perm_sign(r)
        row_term = 1
        for row in M:
            row_term *= _multinomial(fact, row)
        col_term = 1
        for c in cols:
            col_term *= _multinomial(fact, c)
        count += 1
        row_sum += sign * row_term
        col_sum += sign * col_term
    return count, row_sum, col_sum
