"""Rational functions in one variable over the rationals.

A :class:`RatFunc` is a reduced fraction num/den of :class:`Poly` values
sharing one variable tag.  Canonical form: den is monic, gcd(num, den)
is 1, and zero is 0/1, so structural equality is mathematical equality.
These are the field elements that the linear solver and the telescoping
search work over (the "rational functions of n" coefficient field).
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly, poly_gcd


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.one(num.var)
        if num.var != den.var:
            raise ValueError(f"variable mismatch: {num.var!r} vs {den.var!r}")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = Poly.one(num.var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.lc()
            if lead != 1:
                num = num * (1 / lead)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def var(self) -> str:
        return self.num.var

    @classmethod
    def zero(cls, var: str) -> RatFunc:
        return cls(Poly.zero(var))

    @classmethod
    def one(cls, var: str) -> RatFunc:
        return cls(Poly.one(var))

    @classmethod
    def constant(cls, value, var: str) -> RatFunc:
        return cls(Poly.const(value, var))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly.const(other, self.var))
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
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

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
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        if exponent < 0:
            return (RatFunc.one(self.var) / self) ** (-exponent)
        return RatFunc(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def inverse(self) -> RatFunc:
        if self.is_zero:
            raise ZeroDivisionError("zero has no inverse")
        return RatFunc(self.den, self.num)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den == Poly.one(self.var)

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    def as_poly(self) -> Poly:
        if self.den != Poly.one(self.var):
            raise ValueError(f"{self} is not polynomial")
        return self.num

    def evaluate(self, point) -> Fraction:
        bottom = self.den.evaluate(point)
        if bottom == 0:
            raise ZeroDivisionError(f"denominator vanishes at {point}")
        return self.num.evaluate(point) / bottom

    def __str__(self):
        if self.den == Poly.one(self.var):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"
