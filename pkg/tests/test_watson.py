"""Exact Gamma arithmetic, terminating series, Watson/Chu evaluations,
Gamma-quotient closed forms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from telescope.combinat import binomial, factorial
from telescope.hyperterm import Support, parse_summand, sum_exact
from telescope.watson import (GammaPoleError, GammaValue, HalfInt, PFQSpec,
                              SeriesError, chu_w01, closed_form_F,
                              closed_form_G, gamma_half, pfq_terminating,
                              second_identity_3f2, second_identity_spec,
                              watson_w00, watson_w00_series)

H = HalfInt          # H(t) represents t/2
HALF = H(1)


def hi(value: int) -> HalfInt:
    return HalfInt.from_int(value)


class TestHalfInt:
    def test_parse(self):
        assert HalfInt.parse("-2") == hi(-2)
        assert HalfInt.parse("1/2") == H(1)
        assert HalfInt.parse(" -3/2 ") == H(-3)
        with pytest.raises(ValueError):
            HalfInt.parse("1/3")

    def test_predicates(self):
        assert hi(-3).is_nonpositive_integer
        assert hi(0).is_nonpositive_integer
        assert not H(1).is_nonpositive_integer
        assert not hi(2).is_nonpositive_integer
        assert not H(-5).is_integer

    def test_arithmetic(self):
        assert H(1) + H(1) == hi(1)
        assert hi(2) - H(1) == H(3)
        assert H(1) + 1 == H(3)
        assert -H(1) == H(-1)
        assert H(1).as_fraction() == Fraction(1, 2)
        with pytest.raises(ValueError):
            H(3).as_int()

    def test_str(self):
        assert str(H(1)) == "1/2"
        assert str(hi(-2)) == "-2"
        assert str(H(-3)) == "-3/2"


class TestGammaHalf:
    def test_base_cases(self):
        # Gamma(1/2) = sqrt(pi); Gamma(1) = 1; Gamma(4) = 6
        assert gamma_half(H(1)) == GammaValue(Fraction(1), 1)
        assert gamma_half(hi(1)) == GammaValue(Fraction(1), 0)
        assert gamma_half(hi(4)) == GammaValue(Fraction(6), 0)

    def test_half_ladder(self):
        # Gamma(5/2) = (3/2)(1/2) sqrt(pi)
        assert gamma_half(H(5)) == GammaValue(Fraction(3, 4), 1)
        # Gamma(-1/2) = Gamma(1/2)/(-1/2)
        assert gamma_half(H(-1)) == GammaValue(Fraction(-2), 1)
        assert gamma_half(H(-3)) == GammaValue(Fraction(4, 3), 1)

    def test_poles(self):
        assert gamma_half(hi(0)).is_pole
        assert gamma_half(hi(-3)).is_pole
        assert not gamma_half(H(-5)).is_pole

    def test_pi_power_tracks_parity(self):
        assert gamma_half(H(7)).pi_half_power == 1
        assert gamma_half(hi(7)).pi_half_power == 0

    @given(st.integers(1, 40))
    def test_integer_gamma_is_factorial(self, m):
        assert gamma_half(hi(m)) == GammaValue(Fraction(factorial(m - 1)), 0)

    @given(st.integers(-15, 15))
    def test_functional_equation(self, t):
        # Gamma(x+1) = x Gamma(x) on the half-odd line (never a pole)
        x = H(2 * t + 1)
        up = gamma_half(x + 1)
        down = gamma_half(x)
        assert up.coeff == x.as_fraction() * down.coeff
        assert up.pi_half_power == down.pi_half_power == 1


class TestPfq:
    def test_termination_index(self):
        spec = PFQSpec((hi(-2), hi(-3), HALF), (H(-3), hi(2)))
        assert spec.termination_index() == 2

    def test_known_values(self):
        # 1 - 4/3 + 1
        assert pfq_terminating(PFQSpec((hi(-2), hi(-2), HALF),
                                       (H(-3), hi(1)))) == Fraction(2, 3)
        # 1 - 1
        assert pfq_terminating(PFQSpec((hi(-1), hi(-1), H(3)),
                                       (H(-1), hi(3)))) == 0
        # 1 - 1 + 1
        assert pfq_terminating(PFQSpec((hi(-2), hi(-3), HALF),
                                       (H(-3), hi(2)))) == 1

    def test_zero_upper_parameter(self):
        assert pfq_terminating(PFQSpec((hi(0), hi(7), H(-9)),
                                       (H(5), hi(3)))) == 1

    def test_nonterminating_rejected(self):
        with pytest.raises(SeriesError):
            pfq_terminating(PFQSpec((H(1), hi(2), hi(3)), (hi(1), hi(1))))

    def test_lower_pole_before_termination(self):
        # lower parameter -1 vanishes at j = 1, before the stop at j = 5
        with pytest.raises(SeriesError):
            pfq_terminating(PFQSpec((hi(-5), H(1), H(3)), (hi(-1), hi(2))))

    def test_empty_parameter_list_rejected(self):
        with pytest.raises(ValueError):
            PFQSpec((), (hi(1),))

    @given(st.integers(0, 15), st.integers(0, 12))
    @settings(deadline=None)
    def test_pochhammer_matches_gamma_quotient(self, t, j):
        # rising factorial (x)_j = Gamma(x+j)/Gamma(x) for x > 0
        x = H(2 * t + 1)
        xf = x.as_fraction()
        rising = Fraction(1)
        for i in range(j):
            rising *= xf + i
        up, down = gamma_half(x + j), gamma_half(x)
        assert up.pi_half_power == down.pi_half_power
        assert rising == up.coeff / down.coeff


class TestWatson:
    def test_known_values(self):
        assert watson_w00(hi(-2), hi(-2), HALF) == Fraction(2, 3)
        # denominator Gamma pole forces exact zero
        assert watson_w00(hi(-1), hi(-1), H(3)) == 0
        # zero upper parameter: empty series
        assert watson_w00(hi(0), hi(7), H(5)) == 1

    def test_formula_agrees_with_series(self):
        for n in range(1, 51):
            a = hi(-n)
            assert watson_w00(a, a, HALF) == watson_w00_series(a, a, HALF)

    def test_numerator_pole_is_an_error(self):
        # a+b = -1 puts Gamma(0) in the numerator
        with pytest.raises(GammaPoleError):
            watson_w00(hi(0), hi(-1), hi(1))

    def test_odd_parameter_sum_rejected(self):
        with pytest.raises(ValueError):
            watson_w00(H(-1), hi(-1), HALF)


class TestChu:
    def test_values(self):
        assert chu_w01(hi(-1), hi(-1), HALF) == Fraction(1, 2)
        assert chu_w01(hi(-2), hi(-2), HALF) == Fraction(2, 3)
        # 9 / binom(6,3)
        assert chu_w01(hi(-3), hi(-3), HALF) == Fraction(9, 20)

    def test_a_zero_trivial(self):
        assert chu_w01(hi(0), hi(-4), H(5)) == 1

    def test_degenerate_reduction_line(self):
        # 1+a+b = 0 makes the reduction denominator vanish, but the same
        # degeneracy already poles the first Watson numerator factor
        with pytest.raises(GammaPoleError):
            chu_w01(hi(-2), hi(1), HALF)

    def test_route_to_sums(self):
        term = parse_summand("(-1)^k * binom(n,k) * catalan(k)"
                             " * binom(2*n-2*k, n-k)")
        support = Support.parse("0", "n")
        for n in range(1, 51):
            a = hi(-n)
            assert binomial(2 * n, n) * chu_w01(a, a, HALF) == \
                sum_exact(term, support, n)


class TestClosedForms:
    def test_anchor_values(self):
        assert closed_form_F(0) == 1
        assert closed_form_F(2) == 4          # binom(2,1)^2
        assert closed_form_G(1) == -1         # -binom(1,0)^2
        assert closed_form_G(3) == -9

    def test_parity_violations_rejected(self):
        with pytest.raises(ValueError):
            closed_form_F(3)
        with pytest.raises(ValueError):
            closed_form_G(2)
        with pytest.raises(ValueError):
            closed_form_F(-2)

    def test_match_sums(self):
        support = Support.parse("0", "n")
        f_term = parse_summand("(-1)^k * binom(n,k) * binom(2*k,k)"
                               " * binom(2*n-2*k, n-k)")
        g_term = parse_summand("(-1)^k * binom(n,k) * binom(2*k,k+1)"
                               " * binom(2*n-2*k, n-k)")
        for m in range(0, 51):
            assert closed_form_F(2 * m) == sum_exact(f_term, support, 2 * m)
            assert closed_form_G(2 * m + 1) == \
                sum_exact(g_term, support, 2 * m + 1)

    @given(st.integers(0, 60))
    def test_f_closed_form_is_squared_binomial(self, m):
        assert closed_form_F(2 * m) == binomial(2 * m, m) ** 2

    @given(st.integers(0, 60))
    def test_g_closed_form_is_negated_square(self, m):
        assert closed_form_G(2 * m + 1) == -binomial(2 * m + 1, m) ** 2


class TestSecondIdentity:
    def test_values(self):
        assert second_identity_3f2(0) == 1
        # 3! * 2!^3 / (4! * 2)
        assert second_identity_3f2(1) == 1
        assert second_identity_3f2(2) == Fraction(
            factorial(5) * factorial(4) ** 3,
            factorial(8) * factorial(2) ** 3 * factorial(3))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            second_identity_spec(-1)
        with pytest.raises(ValueError):
            second_identity_3f2(-1)

    def test_even_argument_matches_series(self):
        for n in range(0, 26):
            assert pfq_terminating(second_identity_spec(2 * n)) == \
                second_identity_3f2(n)

    def test_odd_argument_vanishes(self):
        for m in range(0, 25):
            assert pfq_terminating(second_identity_spec(2 * m + 1)) == 0
