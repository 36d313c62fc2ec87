"""
Discovering a recurrence by creative telescoping
================================================

Instead of guessing the closed form, ask for a linear recurrence with
polynomial coefficients.  The discovery returns a certificate R(n,k):
a single rational function that makes the recurrence checkable by pure
algebra, independent of how it was found.
"""

from telescope import Support, parse_summand, verify_certificate, zeilberger

term = parse_summand("(-1)^k * binom(n,k) * catalan(k) * binom(2*n-2*k, n-k)")
support = Support.parse("0", "n")

# search order 1, then order 2; the first hit wins
rec, cert = zeilberger(term, max_order=2)

print("recurrence:")
print(f"  {rec}")
print("certificate R(n,k):")
print(f"  {cert.R}")

# the certificate is not taken on faith: the telescoping identity is an
# exact rational-function equation, re-checked here together with the
# recurrence on the actual sums
ok = verify_certificate(term, support, rec, cert, range(rec.order, 40))
print(f"\ncertificate verified on n = {rec.order}..39: {ok}")
assert ok
