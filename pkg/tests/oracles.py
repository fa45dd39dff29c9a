"""Reference implementations that share no code with the package.

Slow on purpose: cofactor determinants, itertools permutations, explicit
operator action on test polynomials, list-based Grassmann sorting.
"""
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial, prod


def inversions(seq):
    return sum(1 for i, j in combinations(range(len(seq)), 2) if seq[i] > seq[j])


def perm_sign(seq):
    return -1 if inversions(seq) % 2 else 1


def det_cofactor(m, zero=0):
    """Laplace expansion along the first row; entries need + - *."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = zero
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det_cofactor(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


# polynomials as dense coefficient lists, lowest degree first


def pl_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def pl_add(a, b):
    n = max(len(a), len(b))
    return pl_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def pl_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return pl_trim(out)


def pl_der(a, r=1):
    for _ in range(r):
        a = [i * a[i] for i in range(1, len(a))]
    return pl_trim(a)


def pl_from(poly):
    d = poly.degree
    if d is None:
        return []
    return pl_trim([poly.coeff(i) for i in range(d + 1)])


def op_act(op, f):
    """Apply a DiffOp to a dense polynomial by the definition sum u_k f^(k)."""
    out = []
    for k, u in op.items():
        out = pl_add(out, pl_mul(pl_from(u), pl_der(f, k)))
    return out


class DensePoly:
    """Minimal ring wrapper so det_cofactor can run on polynomial entries."""

    def __init__(self, c):
        self.c = pl_trim(c)

    def __add__(self, o):
        return DensePoly(pl_add(self.c, o.c))

    def __sub__(self, o):
        return DensePoly(pl_add(self.c, [-v for v in o.c]))

    def __mul__(self, o):
        return DensePoly(pl_mul(self.c, o.c))


def wronskian_oracle(polys):
    m = len(polys)
    dense = [pl_from(u) for u in polys]
    mat = [[DensePoly(pl_der(dense[i], j)) for i in range(m)] for j in range(m)]
    return det_cofactor(mat, DensePoly([])).c


def standard_oracle(xs, mul, add, neg, zero):
    total = zero
    for perm in permutations(range(len(xs))):
        prod_ = xs[perm[0]]
        for i in perm[1:]:
            prod_ = mul(prod_, xs[i])
        total = add(total, prod_ if perm_sign(perm) > 0 else neg(prod_))
    return total


def grassmann_mul(alpha, beta):
    """Sign and sorted merge of two index lists, by bubble sort."""
    seq = list(alpha) + list(beta)
    if len(set(seq)) != len(seq):
        return 0, None
    swaps = 0
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                swaps += 1
    return (-1 if swaps % 2 else 1), tuple(seq)


def grassmann_derive(terms, r=1):
    """d^r on {tuple(alpha): coeff}, Leibniz over the factors one at a time."""
    for _ in range(r):
        out = {}
        for alpha, c in terms.items():
            for i in range(len(alpha)):
                raised = list(alpha)
                raised[i] += 1
                if len(set(raised)) != len(raised):
                    continue
                s, srt = grassmann_mul(raised, ())
                out[srt] = out.get(srt, 0) + s * c
        terms = {k: v for k, v in out.items() if v}
    return terms


def strict_sequences(k, weight, zero_first):
    top = weight + 1
    out = []
    for combo in combinations(range(top), k):
        if sum(combo) == weight and (not zero_first or (combo and combo[0] == 0)):
            out.append(combo)
    return sorted(out)


def compute_M_oracle(alpha, beta):
    bar = tuple(beta[1:])
    w = sum(bar) - sum(alpha)
    if w < 0:
        return []
    out = []
    for g in product(range(w + 1), repeat=len(alpha)):
        if sum(g) == w and tuple(sorted(a + b for a, b in zip(alpha, g))) == bar:
            out.append(g)
    return sorted(out)


def lambda_perm_oracle(p):
    n = 2 * p
    num = 0
    for sigma in permutations(range(1, n + 1)):
        acc = 1
        for t in range(1, n):
            acc *= sum(sigma[:t])
        num += perm_sign(sigma) * acc**p
    den = 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            den *= i - j
    return Fraction(num, den)


def rank_oracle(rows):
    """Rank over Q by plain Gaussian elimination on a copy."""
    m = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def multinomial_oracle(parts):
    out = 1
    left = sum(parts)
    for v in parts:
        out *= comb(left, v)
        left -= v
    return out


def superfactorial(n):
    """0! 1! ... (n-1)!"""
    return prod(factorial(i) for i in range(n))
