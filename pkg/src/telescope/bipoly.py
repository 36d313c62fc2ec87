"""Bivariate polynomials and rational functions in (n, k).

A :class:`BiPoly` is a dense polynomial in k whose coefficients are
:class:`Poly` values in n (index = k-degree, trailing zeros stripped).
The variable roles are fixed package-wide: k is the summation variable,
n the free parameter.

A :class:`BiRatFunc` is a quotient of BiPoly values kept in a canonical
reduced form so that structural equality is mathematical equality:

  * gcd(num, den) over Q[n, k] is removed,
  * both parts have integer coefficients with coprime integer contents,
  * the denominator's leading coefficient is positive, where "leading"
    means the graded-lexicographic order with k ranked above n.

That same monomial order (total degree first, then k-degree) is the
canonical order used whenever a BiPoly is serialized to text.

Bivariate gcds run over the primitive parts via a pseudo-remainder
sequence; shift-root detection (which integer shifts j make
gcd(a(k), b(k+j)) nontrivial) goes through an exact bivariate resultant
evaluated on an integer grid and reassembled by Lagrange interpolation.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .linalg import det_fractions
from .poly import Poly, interpolate, poly_gcd

_N = "n"
_K = "k"


def _as_npoly(value) -> Poly:
    if isinstance(value, Poly):
        if value.var != _N:
            raise ValueError(f"BiPoly coefficients live in {_N!r}, got {value.var!r}")
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value, _N)
    raise TypeError(f"cannot coerce {type(value).__name__} to Poly in n")


class BiPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_as_npoly(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def zero(cls) -> BiPoly:
        return cls(())

    @classmethod
    def one(cls) -> BiPoly:
        return cls((Poly.one(_N),))

    @classmethod
    def const(cls, value) -> BiPoly:
        return cls((_as_npoly(value),))

    @classmethod
    def var_k(cls) -> BiPoly:
        return cls((Poly.zero(_N), Poly.one(_N)))

    @classmethod
    def var_n(cls) -> BiPoly:
        return cls((Poly.variable(_N),))

    @classmethod
    def linear(cls, a: int, b: int, c: int) -> BiPoly:
        """The linear form a*n + b*k + c."""
        return cls((Poly([c, a], _N), Poly.const(b, _N)))

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree_k(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree_n(self) -> int:
        return max((c.degree for c in self.coeffs), default=-1)

    def coeff(self, j: int) -> Poly:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Poly.zero(_N)

    def lc_k(self) -> Poly:
        if not self.coeffs:
            return Poly.zero(_N)
        return self.coeffs[-1]

    def is_constant(self) -> bool:
        return self.degree_k <= 0 and self.degree_n <= 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return BiPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return BiPoly.zero()
        out = [Poly.zero(_N)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("BiPoly exponent must be a nonnegative integer")
        result = BiPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- substitutions ----------------------------------------------------

    def shift_k(self, offset: int) -> BiPoly:
        """Substitute k -> k + offset."""
        if offset == 0 or self.is_zero:
            return self
        out = [Poly.zero(_N)] * len(self.coeffs)
        for d, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            power = 1
            for i in range(d, -1, -1):
                out[i] = out[i] + c * (math.comb(d, i) * Fraction(power))
                power *= offset
        return BiPoly(out)

    def shift_n(self, offset: int) -> BiPoly:
        """Substitute n -> n + offset."""
        if offset == 0:
            return self
        return BiPoly([c.shift(offset) for c in self.coeffs])

    def subst_k(self, value) -> Poly:
        """Evaluate at k = value (a rational), leaving a Poly in n."""
        value = Fraction(value)
        acc = Poly.zero(_N)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def subst_n(self, value) -> Poly:
        """Evaluate at n = value, leaving a Poly in k."""
        return Poly([c.evaluate(value) for c in self.coeffs], _K)

    def evaluate(self, n_value, k_value) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(k_value) + c.evaluate(n_value)
        return acc

    # -- normalization ------------------------------------------------------

    def content_poly(self) -> Poly:
        """Monic gcd over Q[n] of all k-coefficients (0 for the zero poly)."""
        acc = Poly.zero(_N)
        for c in self.coeffs:
            acc = poly_gcd(acc, c)
            if acc == Poly.one(_N):
                break
        return acc

    def rational_content(self) -> Fraction:
        """Signed rational c such that self/c is integer-primitive with
        positive leading (graded-lex) coefficient."""
        if self.is_zero:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            for f in c.coeffs:
                num = math.gcd(num, f.numerator)
                den = den * f.denominator // math.gcd(den, f.denominator)
        cont = Fraction(num, den)
        if self.leading_coefficient() < 0:
            cont = -cont
        return cont

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the graded-lex (k over n) leading monomial."""
        best = None
        for j, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            key = (j + c.degree, j)
            if best is None or key > best[0]:
                best = (key, c.lc())
        if best is None:
            return Fraction(0)
        return best[1]

    def scale(self, factor) -> BiPoly:
        factor = Fraction(factor)
        return BiPoly([c * factor for c in self.coeffs])

    def scale_poly(self, p: Poly) -> BiPoly:
        return BiPoly([c * p for c in self.coeffs])

    def primitive(self) -> tuple[Poly, BiPoly]:
        """Split off the full content: (content in Q[n], primitive part).

        content * primitive == self; the primitive part has integer
        coefficients, trivial Q[n]-content, integer content 1, and
        positive leading coefficient.  The sign and rational scale are
        carried by the content polynomial.
        """
        if self.is_zero:
            return Poly.zero(_N), self
        cont = self.content_poly()
        stripped = self if cont == Poly.one(_N) else BiPoly(
            [c.exact_div(cont) for c in self.coeffs])
        rc = stripped.rational_content()
        prim = stripped.scale(1 / rc)
        return cont * rc, prim

    # -- printing -----------------------------------------------------------

    def monomials(self):
        """Yield (k_power, n_power, coefficient) in descending canonical
        (graded-lex, k over n) order."""
        terms = []
        for j, c in enumerate(self.coeffs):
            for i in range(c.degree, -1, -1):
                f = c.coeff(i)
                if f != 0:
                    terms.append((j + i, j, i, f))
        terms.sort(key=lambda t: (t[0], t[1]), reverse=True)
        for _total, j, i, f in terms:
            yield j, i, f

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for j, i, f in self.monomials():
            pieces = []
            if j:
                pieces.append(_K if j == 1 else f"{_K}^{j}")
            if i:
                pieces.append(_N if i == 1 else f"{_N}^{i}")
            mag = abs(f)
            if mag != 1 or not pieces:
                pieces.insert(0, str(mag))
            body = "*".join(pieces)
            if not parts:
                parts.append(body if f > 0 else "-" + body)
            else:
                parts.append(("+ " if f > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"BiPoly({self})"


# -- division and gcd machinery ---------------------------------------------


def pseudo_divmod(a: BiPoly, b: BiPoly) -> tuple[BiPoly, BiPoly, int]:
    """Pseudo-division in k: lc(b)^e * a == q * b + r with deg_k r < deg_k b.

    Returns (q, r, e).  Requires b nonzero.
    """
    if b.is_zero:
        raise ZeroDivisionError("pseudo-division by zero")
    if a.degree_k < b.degree_k:
        return BiPoly.zero(), a, 0
    lead = b.lc_k()
    steps = a.degree_k - b.degree_k + 1
    quo = BiPoly.zero()
    rem = a
    e = 0
    while not rem.is_zero and rem.degree_k >= b.degree_k:
        shift = rem.degree_k - b.degree_k
        head = BiPoly([Poly.zero(_N)] * shift + [rem.lc_k()])
        quo = quo.scale_poly(lead) + head
        rem = rem.scale_poly(lead) - head * b
        e += 1
    if e < steps:
        extra = lead ** (steps - e)
        quo = quo.scale_poly(extra)
        rem = rem.scale_poly(extra)
        e = steps
    return quo, rem, e


def exact_div(a: BiPoly, b: BiPoly) -> BiPoly:
    """Exact division a / b over Q[n, k]; raises when not divisible."""
    if b.is_zero:
        raise ZeroDivisionError("division by zero BiPoly")
    if a.is_zero:
        return BiPoly.zero()
    quo, rem, e = pseudo_divmod(a, b)
    if not rem.is_zero:
        raise ValueError("BiPoly division is not exact")
    scale = b.lc_k() ** e
    out = []
    for c in quo.coeffs:
        out.append(c.exact_div(scale))
    return BiPoly(out)


def bipoly_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """Gcd over Q[n, k], normalized primitive with positive leading
    coefficient (content gcd included)."""
    if a.is_zero and b.is_zero:
        return BiPoly.zero()
    if a.is_zero:
        return _normalize_gcd(b)
    if b.is_zero:
        return _normalize_gcd(a)
    ca, pa = a.primitive()
    cb, pb = b.primitive()
    cg = poly_gcd(ca, cb)   # monic since both contents are nonzero
    if pa.degree_k < pb.degree_k:
        pa, pb = pb, pa
    # primitive PRS on the k-primitive parts
    while not pb.is_zero:
        _, rem, _ = pseudo_divmod(pa, pb)
        pa, pb = pb, (rem if rem.is_zero else rem.primitive()[1])
    prim = pa.primitive()[1]
    return _normalize_gcd(BiPoly((cg,)) * prim)


def _normalize_gcd(g: BiPoly) -> BiPoly:
    # integer coefficients, content 1, positive leading coefficient,
    # keeping any polynomial-in-n factor (it is part of the gcd)
    if g.is_zero:
        return g
    return g.scale(1 / g.rational_content())


def bipoly_lcm(a: BiPoly, b: BiPoly) -> BiPoly:
    if a.is_zero or b.is_zero:
        return BiPoly.zero()
    g = bipoly_gcd(a, b)
    return _normalize_gcd(exact_div(a * b, g))


# -- shift-root detection -----------------------------------------------------


def shift_common_roots(a: BiPoly, b: BiPoly) -> list[int]:
    """All integers j >= 0 with gcd(a(k), b(k + j)) nontrivial over Q(n).

    Found exactly: the bivariate resultant Res_k(a(k), b(k+j)) is a
    polynomial in (n, j); the wanted shifts are the nonnegative integer
    j at which it vanishes identically in n.  The resultant is computed
    through Sylvester determinants on an integer evaluation grid and
    reassembled exactly by interpolation, so no root is ever missed.
    """
    da, db = a.degree_k, b.degree_k
    if da <= 0 or db <= 0:
        return []
    deg_j = da * db
    deg_n = db * a.degree_n + da * b.degree_n
    # rows of evaluated resultants: res[j_node] = Poly in n
    sigma_points: list[list[Fraction]] = []
    for j_node in range(deg_j + 1):
        shifted = b.shift_k(j_node)
        values = []
        for n_node in range(deg_n + 1):
            pa = [a.coeff(t).evaluate(n_node) for t in range(da + 1)]
            pb = [shifted.coeff(t).evaluate(n_node) for t in range(db + 1)]
            values.append((Fraction(n_node), _sylvester_det(pa, pb)))
        res_at_j = interpolate(values, _N)
        sigma_points.append([res_at_j.coeff(i) for i in range(deg_n + 1)])
    roots: set[int] = set()
    g = Poly.zero("j")
    for i in range(deg_n + 1):
        pts = [(Fraction(j_node), sigma_points[j_node][i])
               for j_node in range(deg_j + 1)]
        g = poly_gcd(g, interpolate(pts, "j"))
        if g == Poly.one("j"):
            return []
    if g.is_zero:
        raise ArithmeticError("degenerate resultant for k-primitive inputs")
    for j in _nonnegative_integer_roots(g):
        roots.add(j)
    return sorted(roots)


def _sylvester_det(pa: list[Fraction], pb: list[Fraction]) -> Fraction:
    """Resultant of two coefficient lists (ascending degree) by the
    Sylvester determinant at their nominal degrees."""
    da = len(pa) - 1
    db = len(pb) - 1
    size = da + db
    rows = []
    rev_a = list(reversed(pa))
    rev_b = list(reversed(pb))
    for i in range(db):
        rows.append([Fraction(0)] * i + rev_a + [Fraction(0)] * (size - da - 1 - i))
    for i in range(da):
        rows.append([Fraction(0)] * i + rev_b + [Fraction(0)] * (size - db - 1 - i))
    return det_fractions(rows)


def _nonnegative_integer_roots(g: Poly) -> list[int]:
    """Nonnegative integer roots of a nonzero rational polynomial."""
    cont, prim = g.primitive()
    coeffs = [int(c) for c in prim.coeffs]
    low = 0
    while coeffs[low] == 0:
        low += 1
    roots = []
    if low > 0:
        roots.append(0)
    tail = coeffs[low:]
    const = abs(tail[0])
    for d in _divisors(const):
        if prim.evaluate(d) == 0:
            roots.append(d)
    return sorted(roots)


def _divisors(value: int) -> list[int]:
    out = []
    d = 1
    while d * d <= value:
        if value % d == 0:
            out.append(d)
            if d != value // d:
                out.append(value // d)
        d += 1
    return sorted(out)


# -- rational functions -------------------------------------------------------


class BiRatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly | None = None):
        if den is None:
            den = BiPoly.one()
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num, den = BiPoly.zero(), BiPoly.one()
        else:
            g = bipoly_gcd(num, den)
            if g.degree_k > 0 or g.degree_n > 0:
                num = exact_div(num, g)
                den = exact_div(den, g)
            cn = num.rational_content()
            cd = den.rational_content()
            # clear to integer coefficients with coprime contents,
            # denominator leading coefficient positive
            ratio = cn / cd
            num = num.scale(1 / cn)
            den = den.scale(1 / cd)
            num = num.scale(Fraction(ratio.numerator))
            den = den.scale(Fraction(ratio.denominator))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("BiRatFunc is immutable")

    @classmethod
    def zero(cls) -> BiRatFunc:
        return cls(BiPoly.zero())

    @classmethod
    def one(cls) -> BiRatFunc:
        return cls(BiPoly.one())

    @classmethod
    def constant(cls, value) -> BiRatFunc:
        return cls(BiPoly.const(value))

    @classmethod
    def from_linear(cls, a: int, b: int, c: int) -> BiRatFunc:
        return cls(BiPoly.linear(a, b, c))

    def _coerce(self, other):
        if isinstance(other, BiRatFunc):
            return other
        if isinstance(other, (int, Fraction, Poly, BiPoly)):
            return BiRatFunc(BiPoly.const(other) if not isinstance(other, BiPoly)
                             else other)
        return None

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BiRatFunc(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return BiRatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return BiRatFunc.zero()
        # cross-cancel first to keep the final gcds small
        g1 = bipoly_gcd(self.num, other.den)
        g2 = bipoly_gcd(other.num, self.den)
        a = exact_div(self.num, g1)
        d = exact_div(other.den, g1)
        c = exact_div(other.num, g2)
        b = exact_div(self.den, g2)
        return BiRatFunc(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = BiRatFunc.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> BiRatFunc:
        if self.is_zero:
            raise ZeroDivisionError("zero has no inverse")
        return BiRatFunc(self.den, self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def shift_k(self, offset: int) -> BiRatFunc:
        return BiRatFunc(self.num.shift_k(offset), self.den.shift_k(offset))

    def shift_n(self, offset: int) -> BiRatFunc:
        return BiRatFunc(self.num.shift_n(offset), self.den.shift_n(offset))

    def evaluate(self, n_value, k_value) -> Fraction:
        bottom = self.den.evaluate(n_value, k_value)
        if bottom == 0:
            raise ZeroDivisionError(
                f"denominator vanishes at (n, k) = ({n_value}, {k_value})")
        return self.num.evaluate(n_value, k_value) / bottom

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den == BiPoly.one()

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        num = self.num.coeff(0).coeff(0)
        return num / self.den.coeff(0).coeff(0)

    def __str__(self):
        if self.den == BiPoly.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"BiRatFunc({self})"


def ratfunc_normalize(num: BiPoly, den: BiPoly) -> BiRatFunc:
    """Public constructor for the canonical reduced form."""
    return BiRatFunc(num, den)
