"""Univariate polynomials over exact rationals.

A :class:`Poly` is a dense tuple of ``fractions.Fraction`` coefficients
(index = degree, trailing zeros stripped) together with a variable tag,
normally ``"n"`` or ``"k"``.  The zero polynomial has an empty tuple and
degree -1.  All arithmetic is exact; nothing here ever touches floats.

Mixing two polynomials with different variable tags raises ValueError:
the tag is how downstream code keeps "polynomial in n" and "polynomial
in k" from being confused.  Integers and Fractions coerce to constants.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .lexer import TokenStream

Rational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to a rational")


class Poly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var: str):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, var: str) -> Poly:
        return cls((), var)

    @classmethod
    def one(cls, var: str) -> Poly:
        return cls((Fraction(1),), var)

    @classmethod
    def const(cls, value, var: str) -> Poly:
        return cls((_as_fraction(value),), var)

    @classmethod
    def variable(cls, var: str) -> Poly:
        return cls((Fraction(0), Fraction(1)), var)

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.coeff(0)

    # -- coercion ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.var)
        return None

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

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
            return Poly.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Poly.one(self.var)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(self.var), self
        quo = [Fraction(0)] * (dq + 1)
        dlc = other.lc()
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] / dlc
            if c != 0:
                quo[i] = c
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Poly(quo, self.var), Poly(rem, self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        quo, rem = divmod(self, other)
        if not rem.is_zero:
            raise ValueError(f"{self} is not divisible by {other}")
        return quo

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.var)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- transforms ----------------------------------------------------

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        lead = self.lc()
        return Poly([c / lead for c in self.coeffs], self.var)

    def shift(self, offset) -> Poly:
        """Substitute var -> var + offset (exact binomial expansion)."""
        offset = _as_fraction(offset)
        if offset == 0 or self.is_zero:
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            # c*(x+offset)^d contributes c*C(d,i)*offset^(d-i) to x^i
            power = Fraction(1)
            for i in range(d, -1, -1):
                out[i] += c * math.comb(d, i) * power
                power *= offset
        return Poly(out, self.var)

    def rename(self, var: str) -> Poly:
        return Poly(self.coeffs, var)

    def evaluate(self, point) -> Fraction:
        point = _as_fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def content(self) -> Fraction:
        """Positive rational c with self/c integer-primitive; 0 for zero."""
        if self.is_zero:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> tuple[Fraction, Poly]:
        """Split into (content, primitive part), sign carried by content.

        The primitive part has integer coefficients with gcd 1 and a
        positive leading coefficient; content * primitive == self.
        """
        if self.is_zero:
            return Fraction(0), self
        cont = self.content()
        if self.lc() < 0:
            cont = -cont
        return cont, Poly([c / cont for c in self.coeffs], self.var)

    # -- printing and parsing -------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeff(d)
            if c == 0:
                continue
            mag = format_coefficient(abs(c), self.var, d)
            if not parts:
                parts.append(mag if c > 0 else "-" + mag)
            else:
                parts.append(("+ " if c > 0 else "- ") + mag)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self}, var={self.var!r})"

    @classmethod
    def parse(cls, text: str, var: str) -> Poly:
        """Parse ``+ - * ^ ( )`` expressions over integers and `var`."""
        stream = TokenStream(text)
        result = _parse_poly_sum(stream, cls, var)
        stream.expect_end()
        return result


def format_coefficient(c: Fraction, var: str, degree: int) -> str:
    if degree == 0:
        return str(c)
    head = "" if c == 1 else f"{c}*"
    tail = var if degree == 1 else f"{var}^{degree}"
    return head + tail


def _parse_poly_sum(stream: TokenStream, cls, var: str):
    acc = _parse_poly_term(stream, cls, var)
    while True:
        if stream.accept("+"):
            acc = acc + _parse_poly_term(stream, cls, var)
        elif stream.accept("-"):
            acc = acc - _parse_poly_term(stream, cls, var)
        else:
            return acc


def _parse_poly_term(stream: TokenStream, cls, var: str):
    acc = _parse_poly_factor(stream, cls, var)
    while stream.accept("*"):
        acc = acc * _parse_poly_factor(stream, cls, var)
    return acc


def _parse_poly_factor(stream: TokenStream, cls, var: str):
    negate = False
    while stream.accept("-"):
        negate = not negate
    base = _parse_poly_atom(stream, cls, var)
    if stream.accept("^"):
        tok = stream.expect("int", "integer exponent")
        base = base ** int(tok.value)
    return -base if negate else base


def _parse_poly_atom(stream: TokenStream, cls, var: str):
    tok = stream.peek()
    if tok.kind == "int":
        stream.advance()
        return cls.const(int(tok.value), var)
    if tok.kind == "name":
        if tok.value != var:
            raise stream.error(f"unknown name {tok.value!r}, expected {var!r}")
        stream.advance()
        return cls.variable(var)
    if stream.accept("("):
        inner = _parse_poly_sum(stream, cls, var)
        stream.expect(")")
        return inner
    raise stream.error("expected integer, variable, or '('")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0."""
    if a.var != b.var:
        raise ValueError(f"variable mismatch: {a.var!r} vs {b.var!r}")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return Poly.zero(a.var)
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def interpolate(points: list[tuple[Fraction, Fraction]], var: str) -> Poly:
    """Lagrange interpolation through distinct exact points."""
    result = Poly.zero(var)
    xs = [_as_fraction(p[0]) for p in points]
    ys = [_as_fraction(p[1]) for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Poly.const(yi, var)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * Poly([-xj / (xi - xj), Fraction(1) / (xi - xj)], var)
        result = result + basis
    return result
