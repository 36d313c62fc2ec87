"""
A second, independent route: Watson's theorem
=============================================

The same sum f(n), rewritten as a terminating 3F2 at unit argument, is
one contiguous step away from Watson's classically summable series.
The two-term reduction makes the evaluation exact, with every Gamma
factor kept as a rational multiple of a sqrt(pi) power.
"""

from telescope import (HalfInt, Support, binomial, chu_w01, parse_summand,
                       sum_exact, watson_w00, watson_w00_series)

half = HalfInt(1)           # stored as twice the value: this is 1/2

# Watson's closed form against plain term-by-term summation
a = HalfInt.from_int(-4)
print(f"W(-4,-4;1/2) closed form : {watson_w00(a, a, half)}")
print(f"W(-4,-4;1/2) raw series  : {watson_w00_series(a, a, half)}")
assert watson_w00(a, a, half) == watson_w00_series(a, a, half)

# the contiguous reduction evaluates the off-line series exactly
print(f"\nW01(-3,-3;1/2) = {chu_w01(HalfInt.from_int(-3), HalfInt.from_int(-3), half)}")

# scaling by the central binomial coefficient recovers f(n)
term = parse_summand("(-1)^k * binom(n,k) * catalan(k) * binom(2*n-2*k, n-k)")
support = Support.parse("0", "n")
print("\nn    binom(2n,n) * W01(-n,-n;1/2)   f(n)")
for n in range(1, 9):
    routed = binomial(2 * n, n) * chu_w01(HalfInt.from_int(-n),
                                          HalfInt.from_int(-n), half)
    direct = sum_exact(term, support, n)
    assert routed == direct
    print(f"{n:<4} {str(routed):<30} {direct}")
print("\ntwo routes, one exact answer")
