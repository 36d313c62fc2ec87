"""
Exact evaluation of an alternating Catalan sum
==============================================

The sum under study throughout this package:

    f(n) = sum_k (-1)^k binom(n,k) C_k binom(2n-2k, n-k)

where C_k is the k-th Catalan number.  Every value is an exact integer;
the claim is f(n) = binom(n, floor(n/2))^2.
"""

from telescope import Support, binomial, parse_summand, sum_exact

# a summand is one hypergeometric term in n and k, parsed from text
term = parse_summand("(-1)^k * binom(n,k) * catalan(k) * binom(2*n-2*k, n-k)")
support = Support.parse("0", "n")

print("n    f(n)        binom(n, floor(n/2))^2")
for n in range(0, 13):
    value = sum_exact(term, support, n)
    square = binomial(n, n // 2) ** 2
    marker = "ok" if value == square else "MISMATCH"
    print(f"{n:<4} {str(value):<11} {square:<10} {marker}")

# the agreement is not a sampling artifact; push it a lot further
assert all(
    sum_exact(term, support, n) == binomial(n, n // 2) ** 2
    for n in range(0, 101))
print("\nchecked exactly for every n up to 100")
