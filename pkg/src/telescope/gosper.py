"""Gosper's algorithm for indefinite hypergeometric summation.

Given the term ratio rho(k) = t(k+1)/t(k) of an unknown hypergeometric
term t, decide whether t has a hypergeometric antidifference g with
g(k+1) - g(k) = t(k), and if so return the certificate R(k) = g(k)/t(k)
as an exact rational function.

The computation follows the classical three-step shape:

1.  Normal form.  Write rho = (p(k+1)/p(k)) * (q(k) / r(k+1)) with
    gcd(q(k), r(k+j)) = 1 for every integer j >= 1.  The offending
    shifts j are found exactly through a bivariate resultant, and each
    shared factor d is moved out of q/r into the "telescoping core" p:
    dividing q by d(k) and r(k) by d(k-j) deposits d(k-1)...d(k-j) in p.

2.  Degree bound.  Any rational antidifference forces a polynomial
    x(k) over Q(n) solving the key equation

        q(k) * x(k+1) - r(k) * x(k) = p(k),

    and the normal form pins an upper bound on deg x from the leading
    coefficients of q and r (two cases, depending on whether the top
    coefficients cancel).

3.  Linear solve.  Finding x of bounded degree is a finite linear
    system over the field of rational functions of n; no solution means
    no antidifference exists at all, which is what makes the procedure
    a decision procedure rather than a heuristic.

The certificate is R = r * x / p, so that g = R * t telescopes; the
identity R(k+1) * rho(k) - R(k) = 1 is checked structurally before the
certificate is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bipoly import (BiPoly, BiRatFunc, bipoly_gcd, exact_div,
                     shift_common_roots)
from .linalg import solve_linear
from .poly import Poly, poly_gcd
from .ratfunc import RatFunc


@dataclass(frozen=True)
class GosperForm:
    """Normal form rho = (p(k+1)/p(k)) * (q(k)/r(k+1)) with the shift
    coprimality gcd(q(k), r(k+j)) = 1 for all j >= 1."""

    p: BiPoly
    q: BiPoly
    r: BiPoly

    def ratio(self) -> BiRatFunc:
        return (BiRatFunc(self.p.shift_k(1), self.p)
                * BiRatFunc(self.q, self.r.shift_k(1)))


@dataclass(frozen=True)
class GosperCertificate:
    """Certificate R with g = R * t and g(k+1) - g(k) = t(k)."""

    R: BiRatFunc

    def telescopes(self, ratio: BiRatFunc) -> bool:
        return self.R.shift_k(1) * ratio - self.R == BiRatFunc.one()


def gosper_normal_form(ratio: BiRatFunc) -> GosperForm:
    """Factor a nonzero term ratio into Gosper normal form.

    The rational-function content of the input (in n) is folded into q
    and r, so all three parts are primitive-by-construction BiPoly
    values and reconstruct the input ratio exactly.
    """
    if ratio.is_zero:
        raise ValueError("term ratio must be nonzero")
    z_num, a = ratio.num.primitive()
    z_den, b = ratio.den.primitive()
    c = BiPoly.one()
    for j in shift_common_roots(a, b):
        if j == 0:
            continue   # the input is reduced; no shared factor at shift 0
        d = bipoly_gcd(a, b.shift_k(j))
        if d.degree_k < 1:
            continue
        a = exact_div(a, d)
        b = exact_div(b, d.shift_k(-j))
        for i in range(1, j + 1):
            c = c * d.shift_k(-i)
        # division of primitives can leave a rational unit; restore
        ca, a = a.primitive()
        cb, b = b.primitive()
        z_num = z_num * ca
        z_den = z_den * cb
    q = a.scale_poly(z_num)
    r = b.shift_k(-1).scale_poly(z_den)
    return GosperForm(p=c, q=q, r=r)


def gosper_degree_bound(q: BiPoly, r: BiPoly, p_degree: int) -> int:
    """Largest admissible deg_k x for q(k)x(k+1) - r(k)x(k) = p(k).

    Returns -1 when no nonnegative degree is admissible.  The two-case
    analysis compares the leading (and next) k-coefficients of q and r
    over Q(n).
    """
    dq, dr = q.degree_k, r.degree_k
    if dq != dr or q.lc_k() != r.lc_k():
        return p_degree - max(dq, dr)
    # leading terms cancel in the key equation
    candidates = [p_degree - dq + 1]
    lam = q.lc_k()
    u = q.coeff(dq - 1) if dq >= 1 else Poly.zero("n")
    v = r.coeff(dq - 1) if dq >= 1 else Poly.zero("n")
    shift_term = RatFunc(v - u, lam)
    if shift_term.is_constant():
        e2 = shift_term.as_fraction()
        if e2.denominator == 1 and e2 >= 0:
            candidates.append(int(e2))
    valid = [e for e in candidates if e >= 0]
    return max(valid) if valid else -1


def _phi(i: int) -> BiPoly:
    """(k+1)^i as a BiPoly."""
    return BiPoly((Poly.one("n"), Poly.one("n"))) ** i


def _monomial_k(i: int) -> BiPoly:
    return BiPoly([Poly.zero("n")] * i + [Poly.one("n")])


def solve_key_equation(q: BiPoly, r: BiPoly, p: BiPoly,
                       degree: int) -> list[RatFunc] | None:
    """Solve q x(k+1) - r x(k) = p for polynomial x of bounded degree.

    Returns the coefficients x_0..x_degree over Q(n), or None.
    """
    if degree < 0:
        return None
    columns = []
    for i in range(degree + 1):
        columns.append(q * _phi(i) - r * _monomial_k(i))
    nrows = max([col.degree_k for col in columns] + [p.degree_k]) + 1
    matrix = []
    rhs = []
    for row in range(nrows):
        matrix.append([RatFunc(col.coeff(row)) for col in columns])
        rhs.append(RatFunc(p.coeff(row)))
    return solve_linear(matrix, rhs)


def gosper_sum(ratio: BiRatFunc) -> GosperCertificate | None:
    """Decide summability of a term with the given ratio; None when no
    hypergeometric antidifference exists."""
    form = gosper_normal_form(ratio)
    degree = gosper_degree_bound(form.q, form.r, form.p.degree_k)
    solution = solve_key_equation(form.q, form.r, form.p, degree)
    if solution is None:
        return None
    x = _ratfunc_poly_to_biratfunc(solution)
    certificate = GosperCertificate(
        BiRatFunc(form.r) * x / BiRatFunc(form.p))
    if not certificate.telescopes(ratio):
        raise ArithmeticError("certificate failed the telescoping identity")
    return certificate


def _ratfunc_poly_to_biratfunc(coeffs: list[RatFunc]) -> BiRatFunc:
    """Assemble sum_i coeffs[i] * k^i into a single reduced quotient."""
    den = Poly.one("n")
    for c in coeffs:
        g = poly_gcd(den, c.den)
        den = den * c.den.exact_div(g)
    num = BiPoly.zero()
    for i, c in enumerate(coeffs):
        scaled = c.num * den.exact_div(c.den)
        num = num + _monomial_k(i).scale_poly(scaled)
    return BiRatFunc(num, BiPoly((den,)))
