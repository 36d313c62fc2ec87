"""Structured hypergeometric summands f(n, k).

A :class:`HyperTerm` is a product

    const * (-1)^(a*n + b*k + c) * factor_1^e_1 * ... * factor_m^e_m

where each factor is a binomial, Catalan number, or factorial applied
to integer linear forms in (n, k).  The representation is canonical:
the sign exponent is reduced mod 2 (its constant parity folds into the
sign of ``const``), duplicate factors merge by adding exponents, zero
exponents vanish, and factors are sorted by a fixed structural key.
Structural equality of canonical terms is therefore semantic equality
of the written formulas.

Two views of a term must agree wherever both make sense and that is the
backbone property of the package: :func:`eval_term` computes exact
values pointwise, while :func:`shift_quotient` computes the symbolic
ratio f(..+1)/f(..) as a reduced bivariate rational function built from
rising-factorial quotients.

Evaluation semantics: binom and catalan follow the support convention
(zero outside the triangle, zero for negative index) so sums can safely
run over any integer window; a factorial at a negative integer raises,
as does 0^negative when a factor with negative exponent vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bipoly import BiPoly, BiRatFunc
from .combinat import EvalDomainError, binomial, catalan, factorial, power
from .lexer import ParseError, TokenStream


@dataclass(frozen=True)
class LinForm:
    """Integer linear form a*n + b*k + c."""

    a: int = 0
    b: int = 0
    c: int = 0

    def value(self, n: int, k: int) -> int:
        return self.a * n + self.b * k + self.c

    def coefficient(self, var: str) -> int:
        return self.a if var == "n" else self.b

    def shifted(self, var: str, offset: int = 1) -> LinForm:
        if var == "n":
            return LinForm(self.a, self.b, self.c + self.a * offset)
        return LinForm(self.a, self.b, self.c + self.b * offset)

    def plus(self, const: int) -> LinForm:
        return LinForm(self.a, self.b, self.c + const)

    def scaled(self, factor: int) -> LinForm:
        return LinForm(self.a * factor, self.b * factor, self.c * factor)

    def as_bipoly(self) -> BiPoly:
        return BiPoly.linear(self.a, self.b, self.c)

    def key(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def __str__(self):
        parts = []
        for coeff, name in ((self.a, "n"), (self.b, "k")):
            if coeff == 0:
                continue
            if not parts:
                head = "" if coeff == 1 else ("-" if coeff == -1 else f"{coeff}*")
            else:
                head = "+" if coeff == 1 else ("-" if coeff == -1 else
                                               (f"+{coeff}*" if coeff > 0 else f"{coeff}*"))
            parts.append(head + name)
        if self.c or not parts:
            parts.append(f"+{self.c}" if parts and self.c >= 0 else str(self.c))
        return "".join(parts)


@dataclass(frozen=True)
class Binomial:
    top: LinForm
    bottom: LinForm

    def key(self):
        return (0, self.top.key(), self.bottom.key())

    def __str__(self):
        return f"binom({self.top},{self.bottom})"


@dataclass(frozen=True)
class Catalan:
    arg: LinForm

    def key(self):
        return (1, self.arg.key(), (0, 0, 0))

    def __str__(self):
        return f"catalan({self.arg})"


@dataclass(frozen=True)
class Factorial:
    arg: LinForm

    def key(self):
        return (2, self.arg.key(), (0, 0, 0))

    def __str__(self):
        return f"factorial({self.arg})"


Factor = Binomial | Catalan | Factorial


class HyperTerm:
    __slots__ = ("const", "sign", "factors")

    def __init__(self, const: Fraction, sign: LinForm,
                 factors: list[tuple[Factor, int]]):
        if const == 0:
            raise ValueError("the zero term is not a hypergeometric term")
        # fold the constant parity of the sign exponent into const
        if sign.c % 2:
            const = -const
        sign = LinForm(sign.a % 2, sign.b % 2, 0)
        merged: dict = {}
        order: list = []
        for factor, exponent in factors:
            if not isinstance(exponent, int) or exponent == 0:
                raise ValueError("factor exponents must be nonzero integers")
            if factor in merged:
                merged[factor] += exponent
            else:
                merged[factor] = exponent
                order.append(factor)
        kept = [(f, merged[f]) for f in order if merged[f] != 0]
        kept.sort(key=lambda fe: fe[0].key())
        object.__setattr__(self, "const", Fraction(const))
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "factors", tuple(kept))

    def __setattr__(self, name, value):
        raise AttributeError("HyperTerm is immutable")

    def __eq__(self, other):
        if not isinstance(other, HyperTerm):
            return NotImplemented
        return (self.const == other.const and self.sign == other.sign
                and self.factors == other.factors)

    def __hash__(self):
        return hash((self.const, self.sign, self.factors))

    # -- evaluation -------------------------------------------------------

    def evaluate(self, n: int, k: int) -> Fraction:
        result = self.const
        if (self.sign.a * n + self.sign.b * k) % 2:
            result = -result
        for factor, exponent in self.factors:
            base = _factor_value(factor, n, k)
            result *= power(base, exponent)
        return result

    # -- symbolic shift quotients -------------------------------------------

    def shift_quotient(self, var: str) -> BiRatFunc:
        """f with var incremented, divided by f, as a reduced BiRatFunc.

        Wherever the denominator of the result is nonzero and both term
        values are defined, this equals evaluate(..+1)/evaluate(..).
        """
        if var not in ("n", "k"):
            raise ValueError(f"unknown variable {var!r}")
        quotient = BiRatFunc.one()
        if self.sign.coefficient(var) % 2:
            quotient = BiRatFunc.constant(-1)
        for factor, exponent in self.factors:
            quotient = quotient * _factor_quotient(factor, var) ** exponent
        return quotient

    # -- printing -----------------------------------------------------------

    def __str__(self):
        parts = []
        if self.const != 1 or (not self.factors and self.sign.is_zero):
            parts.append(str(self.const))
        if not self.sign.is_zero:
            exponent = str(LinForm(self.sign.a, self.sign.b, 0))
            if self.sign.a and self.sign.b:
                exponent = f"({exponent})"
            parts.append(f"(-1)^{exponent}")
        for factor, e in self.factors:
            parts.append(str(factor) if e == 1 else f"{factor}^{e}")
        return " * ".join(parts)

    def __repr__(self):
        return f"HyperTerm({self})"

    @classmethod
    def parse(cls, text: str) -> HyperTerm:
        return parse_summand(text)


def _factor_value(factor: Factor, n: int, k: int) -> Fraction:
    if isinstance(factor, Binomial):
        return Fraction(binomial(factor.top.value(n, k), factor.bottom.value(n, k)))
    if isinstance(factor, Catalan):
        return Fraction(catalan(factor.arg.value(n, k)))
    return Fraction(factorial(factor.arg.value(n, k)))


def _rising(form: LinForm, delta: int) -> BiRatFunc:
    """(L + delta)! / L! as a rational function of (n, k).

    For delta >= 0 this is (L+1)(L+2)...(L+delta); for delta < 0 it is
    1 / (L (L-1) ... (L+delta+1)).
    """
    if delta == 0:
        return BiRatFunc.one()
    acc = BiPoly.one()
    if delta > 0:
        for i in range(1, delta + 1):
            acc = acc * form.plus(i).as_bipoly()
        return BiRatFunc(acc)
    for i in range(-delta):
        acc = acc * form.plus(-i).as_bipoly()
    return BiRatFunc(BiPoly.one(), acc)


def _factor_quotient(factor: Factor, var: str) -> BiRatFunc:
    if isinstance(factor, Binomial):
        top, bottom = factor.top, factor.bottom
        dt = top.coefficient(var)
        db = bottom.coefficient(var)
        diff = LinForm(top.a - bottom.a, top.b - bottom.b, top.c - bottom.c)
        return (_rising(top, dt)
                / _rising(bottom, db)
                / _rising(diff, dt - db))
    if isinstance(factor, Catalan):
        arg = factor.arg
        d = arg.coefficient(var)
        return (_rising(arg.scaled(2), 2 * d)
                / _rising(arg, d)
                / _rising(arg.plus(1), d))
    d = factor.arg.coefficient(var)
    return _rising(factor.arg, d)


# -- summand grammar -----------------------------------------------------------
#
#   summand  := factor ("*" factor)*
#   factor   := rational | sign | func ("^" sint)?
#   rational := sint ("/" int)?
#   sign     := "(" "-" "1" ")" "^" (atom | "(" linform ")")
#   func     := ("binom" "(" linform "," linform ")")
#             | ("catalan" "(" linform ")")
#             | ("factorial" "(" linform ")")
#   linform  := ("+"|"-")? linterm (("+"|"-") linterm)*
#   linterm  := int ("*" ("n"|"k"))? | ("n"|"k")
#   sint     := "-"? int
#
# The linear-form grammar is deliberately rigid: products of variables
# are rejected as non-linear rather than silently misread.


def parse_summand(text: str) -> HyperTerm:
    stream = TokenStream(text)
    const = Fraction(1)
    sign = LinForm()
    factors: list[tuple[Factor, int]] = []
    while True:
        const, sign = _parse_factor(stream, const, sign, factors)
        if not stream.accept("*"):
            break
    stream.expect_end()
    if const == 0:
        raise ParseError("summand is identically zero", text, 0)
    return HyperTerm(const, sign, factors)


def _parse_factor(stream: TokenStream, const: Fraction, sign: LinForm,
                  factors: list[tuple[Factor, int]]):
    tok = stream.peek()
    if tok.kind == "(":
        _parse_sign_base(stream)
        stream.expect("^", "'^' after (-1)")
        exponent = _parse_sign_exponent(stream)
        return const, LinForm(sign.a + exponent.a, sign.b + exponent.b,
                              sign.c + exponent.c)
    if tok.kind in ("int", "-"):
        return const * _parse_rational(stream), sign
    if tok.kind == "name":
        factor = _parse_function(stream)
        exponent = 1
        if stream.accept("^"):
            exponent = _parse_signed_int(stream)
            if exponent == 0:
                raise stream.error("zero exponent is not allowed")
        factors.append((factor, exponent))
        return const, sign
    raise stream.error("expected a constant, (-1)^..., or a named factor")


def _parse_sign_base(stream: TokenStream) -> None:
    stream.expect("(")
    stream.expect("-", "'-1' inside parentheses")
    tok = stream.expect("int", "'1' after '-'")
    if tok.value != "1":
        raise stream.error("only (-1) may carry a symbolic exponent")
    stream.expect(")")
    return None


def _parse_sign_exponent(stream: TokenStream) -> LinForm:
    if stream.accept("("):
        lin = _parse_linform(stream)
        stream.expect(")")
        return lin
    tok = stream.peek()
    if tok.kind == "name":
        return _parse_linform_term(stream, 1)
    if tok.kind == "int":
        stream.advance()
        return LinForm(0, 0, int(tok.value))
    raise stream.error("expected an exponent after '^'")


def _parse_rational(stream: TokenStream) -> Fraction:
    value = Fraction(_parse_signed_int(stream))
    if stream.accept("/"):
        tok = stream.expect("int", "denominator")
        if int(tok.value) == 0:
            raise stream.error("zero denominator")
        value /= int(tok.value)
    return value


def _parse_signed_int(stream: TokenStream) -> int:
    negate = False
    while stream.accept("-"):
        negate = not negate
    tok = stream.expect("int", "integer")
    value = int(tok.value)
    return -value if negate else value


def _parse_function(stream: TokenStream) -> Factor:
    tok = stream.expect("name", "factor name")
    if tok.value == "binom":
        stream.expect("(")
        top = _parse_linform(stream)
        stream.expect(",", "',' between binomial arguments")
        bottom = _parse_linform(stream)
        stream.expect(")")
        return Binomial(top, bottom)
    if tok.value == "catalan":
        stream.expect("(")
        arg = _parse_linform(stream)
        stream.expect(")")
        return Catalan(arg)
    if tok.value == "factorial":
        stream.expect("(")
        arg = _parse_linform(stream)
        stream.expect(")")
        return Factorial(arg)
    raise ParseError(f"unknown factor {tok.value!r}", stream.text, tok.pos)


def _parse_linform(stream: TokenStream) -> LinForm:
    sign = 1
    if stream.accept("-"):
        sign = -1
    elif stream.accept("+"):
        sign = 1
    acc = _parse_linform_term(stream, sign)
    while True:
        if stream.accept("+"):
            nxt = _parse_linform_term(stream, 1)
        elif stream.accept("-"):
            nxt = _parse_linform_term(stream, -1)
        else:
            return acc
        acc = LinForm(acc.a + nxt.a, acc.b + nxt.b, acc.c + nxt.c)


def _parse_linform_term(stream: TokenStream, sign: int) -> LinForm:
    tok = stream.peek()
    if tok.kind == "int":
        stream.advance()
        coeff = sign * int(tok.value)
        if stream.accept("*"):
            name = stream.expect("name", "variable after '*'")
            return _variable_form(stream, name, coeff)
        return LinForm(0, 0, coeff)
    if tok.kind == "name":
        stream.advance()
        return _variable_form(stream, tok, sign)
    raise stream.error("expected an integer or a variable")


def _variable_form(stream: TokenStream, tok, coeff: int) -> LinForm:
    if tok.value == "n":
        return LinForm(coeff, 0, 0)
    if tok.value == "k":
        return LinForm(0, coeff, 0)
    raise ParseError(f"unknown variable {tok.value!r} in linear form",
                     stream.text, tok.pos)


# -- summation support ----------------------------------------------------------


@dataclass(frozen=True)
class Bound:
    """Affine bound slope*n + offset with slope restricted to
    0, 1/2, 1, or 2."""

    slope: Fraction
    offset: int

    _ALLOWED = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))

    def __post_init__(self):
        if self.slope not in self._ALLOWED:
            raise ValueError(f"unsupported bound slope {self.slope}")

    def value(self, n: int) -> int:
        v = self.slope * n + self.offset
        if v.denominator != 1:
            raise ValueError(f"bound {self} is not an integer at n={n}")
        return int(v)

    def __str__(self):
        if self.slope == 0:
            return str(self.offset)
        if self.slope == Fraction(1, 2):
            head = "n/2"
        elif self.slope == 1:
            head = "n"
        else:
            head = "2*n"
        if self.offset == 0:
            return head
        return f"{head}{self.offset:+d}"

    @classmethod
    def parse(cls, text: str) -> Bound:
        stream = TokenStream(text)
        bound = _parse_bound(stream)
        stream.expect_end()
        return bound


def _parse_bound(stream: TokenStream) -> Bound:
    negate = stream.accept("-") is not None
    slope = Fraction(0)
    offset = 0
    tok = stream.peek()
    if tok.kind == "int":
        stream.advance()
        value = int(tok.value)
        if stream.accept("*"):
            stream.expect("name", "'n'")
            slope = Fraction(value)
        else:
            offset = value
    elif tok.kind == "name" and tok.value == "n":
        stream.advance()
        slope = Fraction(1)
        if stream.accept("/"):
            den = stream.expect("int", "divisor")
            slope = Fraction(1, int(den.value))
    else:
        raise stream.error("expected an integer or 'n'")
    if negate:
        slope, offset = -slope, -offset
    if slope != 0 and stream.peek().kind in ("+", "-"):
        sign = 1 if stream.advance().kind == "+" else -1
        tok = stream.expect("int", "offset")
        offset = sign * int(tok.value)
    return Bound(slope, offset)


@dataclass(frozen=True)
class Support:
    """Inclusive summation window k in [lower(n), upper(n)]."""

    lower: Bound
    upper: Bound

    @classmethod
    def parse(cls, lower: str, upper: str) -> Support:
        return cls(Bound.parse(lower), Bound.parse(upper))

    def window(self, n: int) -> range:
        return range(self.lower.value(n), self.upper.value(n) + 1)

    def __str__(self):
        return f"k={self.lower}..{self.upper}"


def sum_exact(term: HyperTerm, support: Support, n: int) -> Fraction:
    """Exact finite sum of the term over the support window at n."""
    total = Fraction(0)
    for k in support.window(n):
        total += term.evaluate(n, k)
    return total


def eval_term(term: HyperTerm, n: int, k: int) -> Fraction:
    return term.evaluate(n, k)


def shift_quotient(term: HyperTerm, var: str) -> BiRatFunc:
    return term.shift_quotient(var)
