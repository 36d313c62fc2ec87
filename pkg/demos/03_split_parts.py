"""
Splitting the sum into two parity-locked parts
==============================================

Writing C_k = binom(2k,k) - binom(2k,k+1) splits f(n) into F(n) - G(n).
Each part lives on one parity only: F vanishes at odd n, G at even n,
and each satisfies a clean two-step recurrence of its own.
"""

from telescope import (Recurrence, Support, binomial, check_recurrence_numeric,
                       parse_summand, sum_exact)

support = Support.parse("0", "n")
f_part = parse_summand("(-1)^k * binom(n,k) * binom(2*k,k)"
                       " * binom(2*n-2*k, n-k)")
g_part = parse_summand("(-1)^k * binom(n,k) * binom(2*k,k+1)"
                       " * binom(2*n-2*k, n-k)")

F = {n: sum_exact(f_part, support, n) for n in range(0, 21)}
G = {n: sum_exact(g_part, support, n) for n in range(0, 21)}

print("n    F(n)      G(n)")
for n in range(0, 11):
    print(f"{n:<4} {str(F[n]):<9} {G[n]}")

# parity structure: even indices carry F, odd indices carry G
assert all(F[2 * m + 1] == 0 for m in range(10))
assert all(G[2 * m] == 0 for m in range(10))
assert all(F[2 * m] == binomial(2 * m, m) ** 2 for m in range(10))
assert all(G[2 * m + 1] == -binomial(2 * m + 1, m) ** 2 for m in range(10))

# each part steps by two.  The sign of the trailing coefficient in the
# F recurrence is pinned by the values: binom(n, n/2)^2 > 0 forces
# F(n) = 16 (n-1)^2 / n^2 * F(n-2), never a sign alternation.
f_rec = Recurrence.from_strings(["n^2", "0", "-16*(n-1)^2"])
g_rec = Recurrence.from_strings(["(n+1)^2", "0", "-16*n^2"])
assert check_recurrence_numeric(F, f_rec, range(2, 21))
assert check_recurrence_numeric(G, g_rec, range(2, 21))
print(f"\nF satisfies  {f_rec}")
print(f"G satisfies  {g_rec}")

# and the two parts reassemble the original sum
main = parse_summand("(-1)^k * binom(n,k) * catalan(k)"
                     " * binom(2*n-2*k, n-k)")
assert all(sum_exact(main, support, n) == F[n] - G[n] for n in range(0, 21))
print("f(n) = F(n) - G(n) re-checked exactly")
