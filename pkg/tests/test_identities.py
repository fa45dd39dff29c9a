import random
from math import factorial

import pytest

from ncomm.identities import (
    CheckResult,
    Vector,
    check_closure,
    check_named_identity,
    check_rank,
    check_sN_zero,
    check_simplicity,
    check_wronskian,
    closure_witness,
    hanlon_eval,
    lcom1_eval,
    lcom_eval,
    multilinear_identity_rank,
    random_bracket,
    random_order_p_op,
    rcom1_eval,
    rcom_eval,
    shuffles,
    simplicity_generation_check,
    standard_bracket,
    wronskian_formula_check,
)
from ncomm.standard import DIFFOP_RING, s_eval_dp
from ncomm.weyl import DiffOp, Polynomial
from oracles import det_cofactor, perm_sign

x = Polynomial.monomial(1)


def comm(a, b):
    return a * b - b * a


class TestSZero:
    @pytest.mark.parametrize("p", [1, 2])
    def test_vanishes_above_2p(self, p):
        for N in (2 * p + 1, 2 * p + 2):
            assert check_sN_zero(p, N, trials=8, seed=3)

    def test_only_above_2p(self):
        with pytest.raises(ValueError):
            check_sN_zero(2, 4)

    def test_random_ops_have_order_p(self):
        rng = random.Random(0)
        for p in (1, 2, 3):
            X = random_order_p_op(rng, p)
            assert X.orders() == [p] or not X

    def test_thread_count_does_not_change_result(self):
        a = check_sN_zero(1, 3, trials=6, seed=5, threads=1)
        b = check_sN_zero(1, 3, trials=6, seed=5, threads=3)
        assert a.to_json_obj() == b.to_json_obj()


class TestWronskian:
    @pytest.mark.parametrize("p", [1, 2])
    def test_random(self, p):
        assert check_wronskian(p, trials=6, seed=1)

    def test_monomials(self):
        polys = [Polynomial.monomial(i) for i in range(4)]
        assert wronskian_formula_check(2, polys)
        assert not wronskian_formula_check(2, polys, lam=3)


class TestClosure:
    def test_p2_n2(self):
        w = closure_witness(2, 2)
        assert w.degrees == (0, 1)
        assert w.high_part == DiffOp.term(2, 3)

    @pytest.mark.parametrize("p,N", [(2, 3), (3, 2), (3, 3), (3, 4), (3, 5)])
    def test_witness_exists(self, p, N):
        r = check_closure(p, N)
        assert r and r.detail["max_order"] > p

    def test_range(self):
        with pytest.raises(ValueError):
            closure_witness(2, 4)


class TestShuffles:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_counts(self, n):
        from math import comb

        assert len(shuffles(n)) == comb(2 * n - 1, n)
        assert len(shuffles(n, "lcom")) == comb(2 * n - 2, n - 1)
        assert len(shuffles(n, "rcom")) == comb(2 * n - 2, n - 2)

    def test_signs_and_increasing_blocks(self):
        for sigma, sign in shuffles(3):
            assert list(sigma[:2]) == sorted(sigma[:2]) and list(sigma[2:]) == sorted(sigma[2:])
            assert sign == perm_sign(sigma)

    def test_n2_lists(self):
        assert shuffles(2) == [((1, 2, 3), 1), ((2, 1, 3), -1), ((3, 1, 2), 1)]
        assert shuffles(2, "rcom") == [((1, 2, 3), 1)]

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            shuffles(2, "middle")


class TestBrackets:
    def setup_method(self):
        rng = random.Random(9)
        self.ts = [DiffOp({1: Polynomial({d: rng.randint(-4, 4) for d in range(3)})}) for _ in range(3)]

    def test_n2_hanlon_is_jacobi(self):
        psi = standard_bracket(1)
        a, b, c = self.ts
        want = comm(a, comm(b, c)) - comm(b, comm(a, c)) + comm(c, comm(a, b))
        assert hanlon_eval(psi, self.ts) == want == DiffOp.zero()

    def test_n2_rcom_single_shuffle(self):
        psi = standard_bracket(1)
        a, b, c = self.ts
        assert rcom_eval(psi, self.ts) == comm(a, comm(b, c))

    def test_n2_lcom_is_left_nested(self):
        psi = standard_bracket(1)
        a, b, c = self.ts
        assert lcom_eval(psi, self.ts) == comm(comm(a, b), c)

    def test_p1_lcom_and_rcom_do_not_vanish(self):
        # vector fields on the line: d, x d, x^2 d
        ts = [DiffOp.term(Polynomial.monomial(i), 1) for i in range(3)]
        psi = standard_bracket(1)
        assert lcom_eval(psi, ts) == DiffOp.term(2 * x, 1)
        assert rcom_eval(psi, ts) == DiffOp.term(2 * x, 1)
        assert not check_named_identity(1, "lcom", trials=5)
        assert not check_named_identity(1, "rcom", trials=5)

    def test_p1_hanlon(self):
        assert check_named_identity(1, "hanlon", trials=20)

    @pytest.mark.parametrize("which", ["lcom", "rcom", "hanlon"])
    def test_p2(self, which):
        r = check_named_identity(2, which, trials=4, seed=4)
        assert r and r.detail["nondegenerate"] > 0

    def test_repeated_argument(self):
        rng = random.Random(1)
        psi = random_bracket(3, 5, rng)
        vs = [Vector(rng.randint(-3, 3) for _ in range(5)) for _ in range(5)]
        vs[3] = vs[1]
        assert not hanlon_eval(psi, vs)

    def test_random_bracket_alternating(self):
        rng = random.Random(2)
        psi = random_bracket(3, 4, rng)
        vs = [Vector(rng.randint(-3, 3) for _ in range(4)) for _ in range(3)]
        assert psi(vs[1], vs[0], vs[2]) == -psi(*vs)
        assert not psi(vs[0], vs[0], vs[2])

    def test_random_bracket_dimension_n_is_determinant(self):
        rng = random.Random(3)
        psi = random_bracket(3, 3, rng)
        vs = [Vector(rng.randint(-3, 3) for _ in range(3)) for _ in range(3)]
        e = psi(Vector([1, 0, 0]), Vector([0, 1, 0]), Vector([0, 0, 1]))
        d = det_cofactor([[v.c[i] for v in vs] for i in range(3)])
        assert psi(*vs) == e * d

    @pytest.mark.parametrize("n", [2, 3])
    def test_rtol_ltor(self, n):
        rng = random.Random(n)
        for _ in range(3):
            dim = rng.randint(4, 6)
            psi = random_bracket(n, dim, rng)
            vs = [Vector(rng.randint(-5, 5) for _ in range(dim)) for _ in range(2 * n - 1)]
            assert rcom_eval(psi, vs) * n == rcom1_eval(psi, vs)
            assert lcom_eval(psi, vs) * (n - 1) == lcom1_eval(psi, vs)


class TestRank:
    @pytest.mark.parametrize("p,d", [(1, 2), (2, 2), (2, 3)])
    def test_full(self, p, d):
        assert multilinear_identity_rank(p, d) == factorial(d)

    def test_p1_d3_drops(self):
        # s_3 vanishes on first-order operators, so the rank is 6 - 1
        r = check_rank(1, 3)
        assert not r and r.detail["rank"] == 5

    def test_s3_vanishes_on_vector_fields(self):
        rng = random.Random(0)
        for _ in range(5):
            ts = [random_order_p_op(rng, 1) for _ in range(3)]
            assert not s_eval_dp(DIFFOP_RING, ts)


class TestSimplicity:
    @pytest.mark.parametrize("p", [1, 2])
    def test_generation(self, p):
        assert check_simplicity(p)

    def test_range(self):
        with pytest.raises(ValueError):
            simplicity_generation_check(4, 0)


def test_check_result_json():
    r = CheckResult("x", {"p": 1}, False, {"trial": 0})
    assert not r
    assert r.to_json_obj()["verdict"] == "fail"
