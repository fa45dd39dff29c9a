# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: int64 arithmetic with explicit overflow detection.

Every multiply/add goes through the checked builtins; on overflow the kernel
raises ``OverflowError`` and ``ncomm.kernels`` re-runs the big-integer twin in
``_core_py``. Results are therefore always exact.
"""
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset

from math import comb, factorial

ctypedef long long i64

cdef extern from *:
    """
    static inline int ncomm_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int ncomm_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int ncomm_mul(i64 a, i64 b, i64 *r) nogil
    int ncomm_add(i64 a, i64 b, i64 *r) nogil

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil

cdef i64 I64_MAX = 9223372036854775807
MAX_CELLS = 1 << 26  # 512 MiB of int64 subset tables


cdef inline int popcount(unsigned int x) nogil:
    return __builtin_popcount(x)


def standard_int(ops):
    """s_N of integer Weyl operators; see ``_core_py.standard_int``."""
    cdef int n = len(ops)
    if n == 0:
        raise ValueError("need at least one operator")
    if n > 20:
        raise MemoryError("too many operators for the subset table")
    cdef int i, j, k, s, d1, t, S, prev, full
    maxo = []
    maxd = []
    terms = []
    for triples in ops:
        acc = {}
        for kk, dd, cc in triples:
            acc[(kk, dd)] = acc.get((kk, dd), 0) + cc
        lst = [(kk, dd, cc) for (kk, dd), cc in sorted(acc.items()) if cc]
        for _, _, cc in lst:
            if not (-I64_MAX <= cc <= I64_MAX):
                raise OverflowError("input coefficient exceeds int64")
        terms.append(lst)
        maxo.append(max([kk for kk, _, _ in lst], default=0))
        maxd.append(max([dd for _, dd, _ in lst], default=0))
    cdef int O = sum(maxo) + 1
    cdef int D = sum(maxd) + 1
    cdef long long cells = (<long long>1 << n) * O * D
    if cells > MAX_CELLS:
        raise MemoryError("subset table too large")

    # binom[k][s] for k < O, falling[d][s] for d < D; -1 marks int64 overflow
    cdef i64 *binom = <i64 *>malloc(O * O * sizeof(i64))
    cdef i64 *falling = <i64 *>malloc(D * D * sizeof(i64))
    cdef i64 *table = <i64 *>calloc(cells, sizeof(i64))
    cdef int *ordS = <int *>calloc(1 << n, sizeof(int))
    cdef int *degS = <int *>calloc(1 << n, sizeof(int))
    cdef int nterms_total = sum(len(t_) for t_ in terms)
    cdef int *toff = <int *>malloc((n + 1) * sizeof(int))
    cdef int *tl = <int *>malloc((nterms_total + 1) * sizeof(int))
    cdef int *td = <int *>malloc((nterms_total + 1) * sizeof(int))
    cdef i64 *tc = <i64 *>malloc((nterms_total + 1) * sizeof(i64))
    if not (binom and falling and table and ordS and degS and toff and tl and td and tc):
        free(binom); free(falling); free(table); free(ordS); free(degS)
        free(toff); free(tl); free(td); free(tc)
        raise MemoryError()

    cdef int overflow = 0
    cdef i64 v, w, cur, b, f
    cdef int l, d2, smax, kk2, dd2, sign
    cdef i64 *T
    cdef i64 *out
    try:
        for k in range(O):
            for s in range(O):
                val = comb(k, s)
                binom[k * O + s] = val if val <= I64_MAX else -1
        for k in range(D):
            for s in range(D):
                if s > k:
                    falling[k * D + s] = 0
                else:
                    val = factorial(k) // factorial(k - s)
                    falling[k * D + s] = val if val <= I64_MAX else -1
        pos = 0
        for i in range(n):
            toff[i] = pos
            for kk, dd, cc in terms[i]:
                tl[pos] = kk
                td[pos] = dd
                tc[pos] = cc
                pos += 1
        toff[n] = pos
        # singletons
        for i in range(n):
            S = 1 << i
            ordS[S] = maxo[i]
            degS[S] = maxd[i]
            T = table + <long long>S * O * D
            for j in range(toff[i], toff[i + 1]):
                T[tl[j] * D + td[j]] = tc[j]
        full = (1 << n) - 1
        with nogil:
            for S in range(1, full + 1):
                if popcount(S) < 2:
                    continue
                out = table + <long long>S * O * D
                for i in range(n):
                    if not (S >> i) & 1:
                        continue
                    prev = S & ~(1 << i)
                    if ordS[S] < ordS[prev] + ordS[1 << i]:
                        ordS[S] = ordS[prev] + ordS[1 << i]
                    if degS[S] < degS[prev] + degS[1 << i]:
                        degS[S] = degS[prev] + degS[1 << i]
                    sign = -1 if popcount(S >> (i + 1)) & 1 else 1
                    T = table + <long long>prev * O * D
                    for k in range(ordS[prev] + 1):
                        for d1 in range(degS[prev] + 1):
                            v = T[k * D + d1]
                            if v == 0:
                                continue
                            if sign < 0:
                                if v == -I64_MAX - 1:
                                    overflow = 1
                                    break
                                v = -v
                            for j in range(toff[i], toff[i + 1]):
                                l = tl[j]
                                d2 = td[j]
                                smax = k if k < d2 else d2
                                for s in range(smax + 1):
                                    b = binom[k * O + s]
                                    f = falling[d2 * D + s]
                                    if b < 0 or f < 0:
                                        overflow = 1
                                        break
                                    if ncomm_mul(b, f, &w) or ncomm_mul(w, tc[j], &w) or ncomm_mul(w, v, &w):
                                        overflow = 1
                                        break
                                    kk2 = k + l - s
                                    dd2 = d1 + d2 - s
                                    if ncomm_add(out[kk2 * D + dd2], w, &cur):
                                        overflow = 1
                                        break
                                    out[kk2 * D + dd2] = cur
                                if overflow:
                                    break
                            if overflow:
                                break
                        if overflow:
                            break
                    if overflow:
                        break
                if overflow:
                    break
        if overflow:
            raise OverflowError("int64 overflow in standard polynomial kernel")
        T = table + <long long>full * O * D
        result = []
        for k in range(O):
            for d1 in range(D):
                v = T[k * D + d1]
                if v != 0:
                    result.append((k, d1, v))
        return result
    finally:
        free(binom); free(falling); free(table); free(ordS); free(degS)
        free(toff); free(tl); free(td); free(tc)


# -- M_p enumeration ---------------------------------------------------------

cdef struct MpState:
    int p
    int n
    int *comp_off      # per slot count s: offset into comp_vals (rows of length s)
    int *comp_moff     # per slot count s: offset into comp_mult
    int *comp_cnt
    int *comp_vals
    i64 *comp_mult     # multinomial(p; row)
    i64 *fact
    int *colsum
    i64 *colden
    int *used
    int *r
    i64 count
    i64 row_sum
    i64 col_sum
    int overflow


cdef void mp_rec(MpState *st, int i, i64 rowprod, i64 colprod) nogil:
    cdef int n = st.n
    cdef int slots, c, j, v, final, inv, a, b2
    cdef int *row
    cdef i64 rp, cp, m, saved_den[32], term
    if st.overflow:
        return
    if i == n:
        inv = 0
        for a in range(n):
            for b2 in range(a + 1, n):
                if st.r[a] > st.r[b2]:
                    inv += 1
        st.count += 1
        if inv & 1:
            if ncomm_add(st.row_sum, -rowprod, &st.row_sum) or ncomm_add(st.col_sum, -colprod, &st.col_sum):
                st.overflow = 1
        else:
            if ncomm_add(st.row_sum, rowprod, &st.row_sum) or ncomm_add(st.col_sum, colprod, &st.col_sum):
                st.overflow = 1
        return
    slots = n - i
    for c in range(st.comp_cnt[slots]):
        row = st.comp_vals + st.comp_off[slots] + c * slots
        final = st.colsum[i] + row[0]
        if final == 0 or final > n or st.used[final]:
            continue
        for j in range(1, slots):
            if st.colsum[i + j] + row[j] > n:
                break
        else:
            # place the row
            for j in range(slots):
                st.colsum[i + j] += row[j]
                saved_den[j] = st.colden[i + j]
                if ncomm_mul(st.colden[i + j], st.fact[row[j]], &st.colden[i + j]):
                    st.overflow = 1
            st.used[final] = 1
            st.r[i] = final
            m = st.fact[final] // st.colden[i]
            if ncomm_mul(rowprod, st.comp_mult[st.comp_moff[slots] + c], &rp) or ncomm_mul(colprod, m, &cp):
                st.overflow = 1
            if not st.overflow:
                mp_rec(st, i + 1, rp, cp)
            st.used[final] = 0
            for j in range(slots):
                st.colsum[i + j] -= row[j]
                st.colden[i + j] = saved_den[j]
            if st.overflow:
                return


def mp_sums(int p):
    """``(count, row_sum, col_sum)`` over M_p; see ``_core_py.mp_sums``."""
    if p < 1:
        raise ValueError("p must be positive")
    cdef int n = 2 * p - 1
    if n > 31:
        raise OverflowError("p too large for the compiled enumerator")
    # all compositions of p into s slots, lexicographic, for s = 1..n
    comps = {}
    for s_ in range(1, n + 1):
        out = []

        def rec(prefix, left, k):
            if k == 1:
                out.append(prefix + (left,))
                return
            for v_ in range(left + 1):
                rec(prefix + (v_,), left - v_, k - 1)

        rec((), p, s_)
        comps[s_] = out
    offsets = {}
    moffsets = {}
    flat = []
    mult_size = 0
    for s_ in range(1, n + 1):
        offsets[s_] = len(flat)
        moffsets[s_] = mult_size
        for row_ in comps[s_]:
            flat.extend(row_)
        mult_size += len(comps[s_])
    cdef MpState st
    st.p = p
    st.n = n
    st.comp_off = <int *>calloc(n + 1, sizeof(int))
    st.comp_moff = <int *>calloc(n + 1, sizeof(int))
    st.comp_cnt = <int *>calloc(n + 1, sizeof(int))
    st.comp_vals = <int *>calloc(len(flat) + 1, sizeof(int))
    st.comp_mult = <i64 *>calloc(mult_size + 1, sizeof(i64))
    st.fact = <i64 *>calloc(n + p + 2, sizeof(i64))
    st.colsum = <int *>calloc(n + 1, sizeof(int))
    st.colden = <i64 *>calloc(n + 1, sizeof(i64))
    st.used = <int *>calloc(n + 2, sizeof(int))
    st.r = <int *>calloc(n + 1, sizeof(int))
    st.count = 0
    st.row_sum = 0
    st.col_sum = 0
    st.overflow = 0
    try:
        for k_ in range(n + p + 2):
            fv = factorial(k_)
            if fv > I64_MAX:
                st.fact[k_] = 1
                if k_ <= max(n, p):
                    raise OverflowError("factorial exceeds int64")
            else:
                st.fact[k_] = fv
        for s_ in range(1, n + 1):
            st.comp_off[s_] = offsets[s_]
            st.comp_moff[s_] = moffsets[s_]
            st.comp_cnt[s_] = len(comps[s_])
            for c_, row_ in enumerate(comps[s_]):
                mv = factorial(p)
                for v_ in row_:
                    mv //= factorial(v_)
                if mv > I64_MAX:
                    raise OverflowError("row multinomial exceeds int64")
                st.comp_mult[moffsets[s_] + c_] = mv
        for k_ in range(len(flat)):
            st.comp_vals[k_] = flat[k_]
        for k_ in range(n + 1):
            st.colden[k_] = 1
        with nogil:
            mp_rec(&st, 0, 1, 1)
        if st.overflow:
            raise OverflowError("int64 overflow in M_p enumeration")
        return st.count, st.row_sum, st.col_sum
    finally:
        free(st.comp_off); free(st.comp_moff); free(st.comp_cnt); free(st.comp_vals); free(st.comp_mult)
        free(st.fact); free(st.colsum); free(st.colden); free(st.used); free(st.r)
