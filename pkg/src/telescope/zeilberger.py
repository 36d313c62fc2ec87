"""Zeilberger's algorithm: creative telescoping for definite sums.

For a hypergeometric term f(n, k), search for polynomial coefficients
c_0(n), ..., c_J(n), not all zero, and a rational certificate R(n, k)
such that

    sum_j c_j(n) * f(n+j, k)  =  g(n, k+1) - g(n, k),
    g(n, k) = R(n, k) * f(n, k).

Summing over k then annihilates S(n) = sum_k f(n, k) up to boundary
terms, which vanish for terms with natural (binomial-style) support, so
sum_j c_j(n) S(n+j) = 0 is a recurrence for the sum itself.

The search runs Gosper's machinery with the c_j carried along as extra
unknowns: the combination t = sum_j c_j f(n+j, k) equals f times the
rational function P_c/D where D is the (c-free) common denominator of
the shift products f(n+j,k)/f(n,k) and P_c = sum_j c_j N_j.  Feeding
the c-free part of the term ratio of t through the normal form and
leaving P_c inside the key-equation polynomial p makes the whole
problem one homogeneous linear system over Q(n) in (x-coefficients,
c_j).  The order J escalates from 1, so the first hit is the minimal
telescopable order.

Conventions:

  * Recurrences are stored in backward form
    a_0(m) f(m) + a_1(m) f(m-1) + ... + a_J(m) f(m-J) = 0
    with integer, content-free coefficients, a_0 nonzero, and the
    leading coefficient of a_0 positive.  The forward coefficients
    used by the certificate identity are c_j(n) = a_{J-j}(n+J).
  * The certificate identity held by a WZCertificate, with rho_j the
    shift product f(n+j,k)/f(n,k) and rk the k-ratio of f:

        sum_j c_j(n) rho_j(n, k)  =  R(n, k+1) * rk(n, k) - R(n, k),

    an identity of reduced rational functions that is checked
    structurally, not numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .bipoly import BiPoly, BiRatFunc, bipoly_lcm, exact_div
from .gosper import gosper_degree_bound, gosper_normal_form, _monomial_k, _phi
from .hyperterm import HyperTerm, Support, sum_exact
from .linalg import nullspace
from .poly import Poly, poly_gcd
from .ratfunc import RatFunc


@dataclass(frozen=True)
class Recurrence:
    """Backward-form linear recurrence with polynomial coefficients."""

    coeffs: tuple[Poly, ...]   # a_0 .. a_J, polynomials in the recurrence variable

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0].is_zero:
            raise ValueError("a_0 must be nonzero")
        if self.coeffs[-1].is_zero and len(self.coeffs) > 1:
            raise ValueError("trailing zero coefficient; reduce the order")
        # canonical form: common polynomial factor and rational content
        # removed, leading coefficient of a_0 positive
        coeffs = tuple(self.coeffs)
        g = Poly.zero(coeffs[0].var)
        for c in coeffs:
            g = poly_gcd(g, c)
        if g.degree > 0:
            coeffs = tuple(c.exact_div(g) for c in coeffs)
        content = Fraction(0)
        for c in coeffs:
            cont, _ = c.primitive()
            content = _gcd_fraction(content, cont)
        if coeffs[0].lc() < 0:
            content = -content
        if content != 1:
            coeffs = tuple(c * (1 / content) for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def forward_coeffs(self) -> list[Poly]:
        """c_j(n) = a_{J-j}(n+J) for the telescoping identity."""
        J = self.order
        return [self.coeffs[J - j].shift(J) for j in range(J + 1)]

    def apply(self, values: Mapping[int, Fraction], m: int) -> Fraction:
        """sum_i a_i(m) values[m - i]."""
        total = Fraction(0)
        for i, a in enumerate(self.coeffs):
            total += a.evaluate(m) * values[m - i]
        return total

    def is_proportional(self, other: Recurrence) -> bool:
        """Same recurrence up to a rational-function scale."""
        if self.order != other.order:
            return False
        for i in range(len(self.coeffs)):
            for j in range(len(self.coeffs)):
                if self.coeffs[i] * other.coeffs[j] != self.coeffs[j] * other.coeffs[i]:
                    return False
        return True

    def __str__(self):
        parts = []
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            shifted = "f(n)" if i == 0 else f"f(n-{i})"
            parts.append(f"({a}) * {shifted}")
        return " + ".join(parts) + " = 0"

    @classmethod
    def from_strings(cls, coeff_texts: list[str]) -> Recurrence:
        return cls(tuple(Poly.parse(t, "n") for t in coeff_texts))


@dataclass(frozen=True)
class WZCertificate:
    """Certificate R for the recurrence produced alongside it."""

    R: BiRatFunc


class ZeilbergerError(RuntimeError):
    pass


def _shift_products(term: HyperTerm, order: int) -> tuple[list[BiPoly], BiPoly]:
    """Numerators N_j and common denominator D with
    f(n+j,k)/f(n,k) = N_j / D for j = 0..order."""
    rn = term.shift_quotient("n")
    rhos = [BiRatFunc.one()]
    for j in range(order):
        rhos.append(rhos[-1] * rn.shift_n(j))
    den = BiPoly.one()
    for rho in rhos:
        den = bipoly_lcm(den, rho.den)
    numerators = [rho.num * exact_div(den, rho.den) for rho in rhos]
    return numerators, den


def zeilberger(term: HyperTerm, max_order: int = 4
               ) -> tuple[Recurrence, WZCertificate] | None:
    """Minimal-order telescoping recurrence for sum_k term(n, k).

    Escalates the order J = 1..max_order and returns at the first J
    admitting a nontrivial (c, R); None if max_order is exhausted.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    rk = term.shift_quotient("k")
    for order in range(1, max_order + 1):
        found = _zeilberger_at_order(term, rk, order)
        if found is not None:
            return found
    return None


def _zeilberger_at_order(term: HyperTerm, rk: BiRatFunc, order: int
                         ) -> tuple[Recurrence, WZCertificate] | None:
    numerators, den = _shift_products(term, order)
    ratio0 = BiRatFunc(den * rk.num, den.shift_k(1) * rk.den)
    form = gosper_normal_form(ratio0)
    p_degree = form.p.degree_k + max(nj.degree_k for nj in numerators)
    x_degree = gosper_degree_bound(form.q, form.r, p_degree)

    # columns: unknowns x_0..x_E then c_0..c_J, homogeneous system
    columns: list[BiPoly] = []
    for i in range(max(x_degree + 1, 0)):
        columns.append(form.q * _phi(i) - form.r * _monomial_k(i))
    c_start = len(columns)
    for nj in numerators:
        columns.append(-(form.p * nj))
    nrows = max(col.degree_k for col in columns) + 1
    matrix = [[RatFunc(col.coeff(row)) for col in columns]
              for row in range(nrows)]
    basis = nullspace(matrix, "n")

    for vector in basis:
        c_part = vector[c_start:]
        if any(not c.is_zero for c in c_part):
            return _assemble(term, rk, form, den, vector[:c_start], c_part)
    return None


def _assemble(term: HyperTerm, rk: BiRatFunc, form, den: BiPoly,
              x_part: list[RatFunc], c_part: list[RatFunc]
              ) -> tuple[Recurrence, WZCertificate]:
    # effective order: highest j with c_j nonzero
    top = max(j for j, c in enumerate(c_part) if not c.is_zero)
    c_part = c_part[:top + 1]
    if c_part[0].is_zero:
        # would be a disguised lower-order recurrence, which the
        # escalation from order 1 makes impossible
        raise ZeilbergerError("telescoper with vanishing lowest coefficient")

    # scale so the c_j become integer, jointly content-free polynomials
    common_den = Poly.one("n")
    for c in c_part:
        g = poly_gcd(common_den, c.den)
        common_den = common_den * c.den.exact_div(g)
    cleared = [c.num * common_den.exact_div(c.den) for c in c_part]
    poly_content = Poly.zero("n")
    for c in cleared:
        poly_content = poly_gcd(poly_content, c)
    cleared = [c.exact_div(poly_content) for c in cleared]
    rational_content = Fraction(0)
    for c in cleared:
        cont, _ = c.primitive()
        rational_content = _gcd_fraction(rational_content, cont)
    # sign: make the backward leading coefficient lc(a_0) = lc(c_top) positive
    if cleared[top].lc() < 0:
        rational_content = -rational_content
    forward = [c * (1 / rational_content) for c in cleared]
    scale = RatFunc(common_den) / RatFunc(poly_content * rational_content)

    # certificate R = r * x / (p * D), then rescaled like the c_j
    x = BiRatFunc.zero()
    for i, xi in enumerate(x_part):
        if not xi.is_zero:
            x = x + BiRatFunc(_monomial_k(i).scale_poly(xi.num),
                              BiPoly((xi.den,)))
    R = (BiRatFunc(form.r) * x
         / BiRatFunc(form.p) / BiRatFunc(den)
         * BiRatFunc(BiPoly((scale.num,)), BiPoly((scale.den,))))

    backward = tuple(forward[top - i].shift(-top) for i in range(top + 1))
    recurrence = Recurrence(backward)
    certificate = WZCertificate(R)
    if not _certificate_identity_holds(term, rk, recurrence, certificate):
        raise ZeilbergerError("assembled certificate failed its identity")
    return recurrence, certificate


def _gcd_fraction(a: Fraction, b: Fraction) -> Fraction:
    num = math.gcd(a.numerator, b.numerator)
    den_lcm = a.denominator * b.denominator // math.gcd(a.denominator,
                                                        b.denominator)
    return Fraction(num, den_lcm)


def _certificate_identity_holds(term: HyperTerm, rk: BiRatFunc,
                                rec: Recurrence, cert: WZCertificate) -> bool:
    rn = term.shift_quotient("n")
    lhs = BiRatFunc.zero()
    rho = BiRatFunc.one()
    for j, c in enumerate(rec.forward_coeffs()):
        if j > 0:
            rho = rho * rn.shift_n(j - 1)
        if not c.is_zero:
            lhs = lhs + rho * BiPoly((c,))
    rhs = cert.R.shift_k(1) * rk - cert.R
    return lhs == rhs


def verify_certificate(term: HyperTerm, support: Support, rec: Recurrence,
                       cert: WZCertificate, n_range: range,
                       values: Mapping[int, Fraction] | None = None) -> bool:
    """Check the certificate identity structurally, then check that the
    recurrence annihilates the exact sums over the given n range (this
    second pass is what catches boundary effects the symbolic identity
    cannot see)."""
    rk = term.shift_quotient("k")
    if not _certificate_identity_holds(term, rk, rec, cert):
        return False
    for m in n_range:
        window = {m - i: (values[m - i] if values is not None
                          else sum_exact(term, support, m - i))
                  for i in range(rec.order + 1)}
        if rec.apply(window, m) != 0:
            return False
    return True


def check_recurrence_numeric(values: Mapping[int, Fraction], rec: Recurrence,
                             n_range: range) -> bool:
    """Does the recurrence annihilate the given exact sequence values on
    the range?  Requires values[m - order .. m] for every m in range."""
    for m in n_range:
        if rec.apply(values, m) != 0:
            return False
    return True
