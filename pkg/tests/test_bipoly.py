"""Bivariate polynomials in k over Q[n] and their rational functions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from telescope.bipoly import (BiPoly, BiRatFunc, bipoly_gcd, bipoly_lcm,
                              exact_div, pseudo_divmod, ratfunc_normalize,
                              shift_common_roots)
from telescope.poly import Poly

K = BiPoly.var_k()
N = BiPoly.var_n()
ONE = BiPoly.one()


def small_bipolys():
    coeff = st.integers(-4, 4)
    inner = st.lists(coeff, min_size=0, max_size=3).map(
        lambda cs: Poly(cs, "n"))
    return st.lists(inner, min_size=0, max_size=3).map(BiPoly)


class TestBiPoly:
    def test_degrees_and_coeffs(self):
        p = K * K * N - K + 3
        assert p.degree_k == 2 and p.degree_n == 1
        assert p.coeff(0) == Poly.parse("3", "n")
        assert p.coeff(1) == Poly.parse("-1", "n")
        assert p.coeff(2) == Poly.parse("n", "n")

    def test_shift(self):
        p = K * K
        assert p.shift_k(1) == K * K + 2 * K + 1
        assert p.shift_n(2) == p
        assert (N * K).shift_n(-1) == (N - 1) * K

    def test_substitution(self):
        p = K * K * N + K - 1
        assert p.subst_k(2).evaluate(3) == p.evaluate(3, 2) == 4 * 3 + 1
        assert p.subst_n(0) == Poly.parse("k - 1", "k")

    def test_pseudo_divmod(self):
        a = K * K * N + K
        b = N * K + 1
        q, r, e = pseudo_divmod(a, b)
        lc = BiPoly.const(Poly.parse("n", "n"))
        assert lc ** e * a == q * b + r
        assert r.degree_k < b.degree_k

    def test_exact_div(self):
        a = (K + N) * (K * N - 1)
        assert exact_div(a, K + N) == K * N - 1
        with pytest.raises(ValueError):
            exact_div(K * K + 1, K + N)

    def test_gcd(self):
        a = (K + N) * (K - 1)
        b = (K + N) * (K + 2)
        g = bipoly_gcd(a, b)
        assert exact_div(g, K + N).degree_k == 0
        assert bipoly_gcd(K, K + 1) == ONE
        # content in n participates in the gcd
        assert bipoly_gcd(N * K, N * N * K) == N * K

    def test_lcm(self):
        m = bipoly_lcm(K * (K + 1), (K + 1) * (K + 2))
        assert exact_div(exact_div(m, K), (K + 1) * (K + 2)).degree_k == 0

    @given(small_bipolys(), small_bipolys())
    @settings(max_examples=60, deadline=None)
    def test_gcd_divides_both(self, a, b):
        g = bipoly_gcd(a, b)
        if g.is_zero:
            assert a.is_zero and b.is_zero
            return
        for p in (a, b):
            if not p.is_zero:
                exact_div(p, g)   # raises if not divisible


class TestShiftRoots:
    def test_known_shifts(self):
        # q = k, r = k + 2: common root after shifting r by... k+2+j = k
        # never for j >= 0; but r(k+j) vs q: gcd(k, k-2+j) nontrivial at j=2
        assert shift_common_roots(K, K - 2) == [2]
        assert shift_common_roots(K, K - 1) == [1]
        assert shift_common_roots(K, K + 1) == []
        assert shift_common_roots(K - N, K - N - 3) == [3]
        assert shift_common_roots(K, K * (K - 5)) == [0, 5]

    def test_no_shifts_for_coprime_families(self):
        assert shift_common_roots(K + N, K - N + 1) == []

    @given(st.integers(0, 6))
    def test_single_constructed_shift(self, j):
        assert shift_common_roots(K, K - j) == [j]


class TestBiRatFunc:
    def test_normalization_examples(self):
        f = ratfunc_normalize(N * K * K, N * K)
        assert f == BiRatFunc(K, ONE)
        assert ratfunc_normalize(BiPoly.zero(), K + N) == BiRatFunc.zero()
        g = ratfunc_normalize((K + 1) * (K + 2), (K + 2) * 2)
        assert g == BiRatFunc(K + 1, BiPoly.const(Poly.parse("2", "n")))

    def test_common_factor_invariance(self):
        f = BiRatFunc(K + 1, K * N + 3)
        c = K * K - N
        assert BiRatFunc((K + 1) * c, (K * N + 3) * c) == f

    def test_denominator_leading_positive(self):
        f = BiRatFunc(K, -K + N)
        lead = f.den.leading_coefficient()
        assert lead > 0

    def test_field_ops(self):
        x = BiRatFunc(K, K + 1)
        y = BiRatFunc(N, K - N)
        assert (x + y) - y == x
        assert x * y / y == x
        assert x * x.inverse() == BiRatFunc.one()
        assert x ** 3 == x * x * x
        assert x ** -2 == (x * x).inverse()

    def test_shifts(self):
        x = BiRatFunc(K, K + 1)
        assert x.shift_k(1) == BiRatFunc(K + 1, K + 2)
        y = BiRatFunc(N, K)
        assert y.shift_n(1) == BiRatFunc(N + 1, K)

    @given(small_bipolys(), small_bipolys(), small_bipolys())
    @settings(max_examples=60, deadline=None)
    def test_field_axioms(self, a, b, c):
        if c.is_zero:
            return
        x = BiRatFunc(a, ONE)
        y = BiRatFunc(b, ONE)
        z = BiRatFunc(ONE, c)
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        if not a.is_zero:
            assert x * x.inverse() == BiRatFunc.one()

    @given(small_bipolys(), small_bipolys(),
           st.integers(-8, 8), st.integers(-8, 8))
    @settings(max_examples=60, deadline=None)
    def test_evaluation_homomorphism(self, a, b, n0, k0):
        # evaluating an expression tree commutes with evaluating leaves
        if b.is_zero:
            return
        x = BiRatFunc(a, b)
        y = x * x + x - 1
        try:
            vx = x.evaluate(n0, k0)
        except ZeroDivisionError:
            return
        try:
            vy = y.evaluate(n0, k0)
        except ZeroDivisionError:
            return
        assert vy == vx * vx + vx - 1
