"""Exact evaluation of terminating 3F2 series at unit argument.

Everything here lives on the half-integer lattice: parameters are
:class:`HalfInt` values, Gamma factors are exact multiples of powers of
sqrt(pi), and every result is a ``Fraction``; no floats anywhere.

Two independent evaluation routes are deliberately kept apart:

* :func:`pfq_terminating` sums a terminating hypergeometric series
  term by term with exact Pochhammer updates.  It is the ground-truth
  oracle: nothing but the series definition goes into it.
* :func:`watson_w00` evaluates the Watson-symmetric series

      W(a, b; c) = 3F2(a, b, c; (1+a+b)/2, 2c; 1)

  in closed form through the classical Gamma-quotient

      Gamma(1/2) Gamma(c+1/2) Gamma((1+a+b)/2) Gamma((1-a-b)/2 + c)
      ----------------------------------------------------------------
      Gamma((1+a)/2) Gamma((1+b)/2) Gamma((1-a)/2 + c) Gamma((1-b)/2 + c)

  A pole in a denominator Gamma (with every numerator factor finite)
  collapses the quotient to exact zero; a pole in a numerator Gamma is
  an error, never a guess.

:func:`chu_w01` lifts W(a, b; c) one step off the Watson-summable line:

    W01(a, b; c) = 3F2(a, b, c+1; (1+a+b)/2, 2c+1; 1)
                 = W(a, b; c) - (a b / ((1+a+b)(2c+1))) * W(a+1, b+1; c+1).

The contiguous pair on the right is Watson-summable, so W01 is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import factorial


class GammaPoleError(ArithmeticError):
    """A Gamma factor in numerator position hit a non-positive integer."""


class SeriesError(ValueError):
    """A hypergeometric series is non-terminating or hits a zero
    lower-parameter Pochhammer before terminating."""


@dataclass(frozen=True)
class HalfInt:
    """An element of (1/2)Z stored as twice its value."""

    twice: int

    @classmethod
    def from_int(cls, value: int) -> HalfInt:
        return cls(2 * value)

    @classmethod
    def from_fraction(cls, value: Fraction) -> HalfInt:
        value = Fraction(value)
        if value.denominator not in (1, 2):
            raise ValueError(f"{value} is not a half-integer")
        return cls(int(value * 2))

    @classmethod
    def parse(cls, text: str) -> HalfInt:
        return cls.from_fraction(Fraction(text.strip()))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    @property
    def is_nonpositive_integer(self) -> bool:
        return self.is_integer and self.twice <= 0

    def __add__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.twice + other.twice)
        if isinstance(other, int):
            return HalfInt(self.twice + 2 * other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return HalfInt(-self.twice)

    def __sub__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.twice - other.twice)
        if isinstance(other, int):
            return HalfInt(self.twice - 2 * other)
        return NotImplemented

    def half_of_one_plus(self) -> HalfInt | None:
        """(1 + self)/2 if it stays on the half-integer lattice."""
        if self.twice % 2:
            return None
        return HalfInt((2 + self.twice) // 2)

    def __str__(self):
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"


@dataclass(frozen=True)
class GammaValue:
    """Gamma at a half-integer: coeff * pi^(pi_half_power / 2), or a pole.

    Finite values have a nonzero rational coeff; poles carry no data.
    """

    coeff: Fraction
    pi_half_power: int
    pole: bool = False

    @classmethod
    def at_pole(cls) -> GammaValue:
        return cls(Fraction(0), 0, True)

    @property
    def is_pole(self) -> bool:
        return self.pole


def gamma_half(x: HalfInt) -> GammaValue:
    """Gamma(x) for half-integer x, exact.

    Integer x: (x-1)! for x >= 1, pole otherwise.  Half-odd x: built
    from Gamma(1/2) = sqrt(pi) by the functional equation, so the
    result is rational * sqrt(pi).
    """
    if x.is_integer:
        m = x.as_int()
        if m <= 0:
            return GammaValue.at_pole()
        return GammaValue(Fraction(factorial(m - 1)), 0)
    # x = m + 1/2
    m = (x.twice - 1) // 2
    coeff = Fraction(1)
    if m >= 0:
        for i in range(m):
            coeff *= Fraction(2 * i + 1, 2)
    else:
        for i in range(1, -m + 1):
            coeff /= Fraction(1 - 2 * i, 2)
    return GammaValue(coeff, 1)


@dataclass(frozen=True)
class PFQSpec:
    """A pFq(upper; lower; 1) on the half-integer lattice."""

    upper: tuple[HalfInt, ...]
    lower: tuple[HalfInt, ...]

    def __post_init__(self):
        if not self.upper or not self.lower:
            raise ValueError("upper and lower parameter lists must be nonempty")

    def termination_index(self) -> int:
        """Smallest N with an upper parameter equal to -N; raises when
        no upper parameter is a non-positive integer."""
        stops = [-u.as_int() for u in self.upper if u.is_nonpositive_integer]
        if not stops:
            raise SeriesError("series does not terminate: no non-positive "
                              "integer upper parameter")
        return min(stops)


def pfq_terminating(spec: PFQSpec) -> Fraction:
    """Sum the terminating series sum_{j=0}^N prod (u)_j / prod (l)_j / j!.

    Raises SeriesError when a lower parameter makes a Pochhammer vanish
    at or before the termination index.
    """
    stop = spec.termination_index()
    for low in spec.lower:
        if low.is_integer and 1 - stop <= low.as_int() <= 0:
            raise SeriesError(
                f"lower parameter {low} hits zero before the series "
                f"terminates at j = {stop}")
    uppers = [u.as_fraction() for u in spec.upper]
    lowers = [l.as_fraction() for l in spec.lower]
    total = Fraction(0)
    term = Fraction(1)
    for j in range(stop + 1):
        total += term
        num = Fraction(1)
        for u in uppers:
            num *= u + j
        den = Fraction(j + 1)
        for l in lowers:
            den *= l + j
        if den == 0:
            break   # unreachable: guarded above; kept for safety
        term = term * num / den
    return total


def watson_w00(a: HalfInt, b: HalfInt, c: HalfInt) -> Fraction:
    """Closed form of 3F2(a, b, c; (1+a+b)/2, 2c; 1), exact.

    Requires a + b integral so the Gamma arguments stay on the lattice.
    The sqrt(pi) powers of the eight Gamma factors always cancel here,
    leaving a plain rational.
    """
    half_ab = (a + b).half_of_one_plus()
    if half_ab is None:
        raise ValueError("a + b must be an integer for the exact route")
    half_a = a.half_of_one_plus()
    half_b = b.half_of_one_plus()
    numerator = [
        gamma_half(HalfInt(1)),                    # Gamma(1/2)
        gamma_half(c + HalfInt(1)),                # Gamma(c + 1/2)
        gamma_half(half_ab),                       # Gamma((1+a+b)/2)
        gamma_half(HalfInt(2) - half_ab + c),      # Gamma((1-a-b)/2 + c)
    ]
    denominator = [
        gamma_half(half_a) if half_a is not None else None,
        gamma_half(half_b) if half_b is not None else None,
        gamma_half(HalfInt(2) - half_a + c) if half_a is not None else None,
        gamma_half(HalfInt(2) - half_b + c) if half_b is not None else None,
    ]
    if any(g is None for g in denominator):
        raise ValueError("(1+a)/2 and (1+b)/2 must be half-integers")
    for g in numerator:
        if g.is_pole:
            raise GammaPoleError("numerator Gamma factor has a pole; the "
                                 "closed form does not apply")
    if any(g.is_pole for g in denominator):
        return Fraction(0)
    coeff = Fraction(1)
    pi_power = 0
    for g in numerator:
        coeff *= g.coeff
        pi_power += g.pi_half_power
    for g in denominator:
        coeff /= g.coeff
        pi_power -= g.pi_half_power
    if pi_power != 0:
        raise ArithmeticError("sqrt(pi) powers failed to cancel")
    return coeff


def watson_w00_series(a: HalfInt, b: HalfInt, c: HalfInt) -> Fraction:
    """The same W(a, b; c) by direct terminating summation (the
    independent cross-check route)."""
    half_ab = (a + b).half_of_one_plus()
    if half_ab is None:
        raise ValueError("a + b must be an integer for the exact route")
    return pfq_terminating(PFQSpec(upper=(a, b, c),
                                   lower=(half_ab, c + c)))


def chu_w01(a: HalfInt, b: HalfInt, c: HalfInt) -> Fraction:
    """Exact 3F2(a, b, c+1; (1+a+b)/2, 2c+1; 1) via the contiguous
    reduction to two Watson-summable values."""
    ab = a.as_fraction() * b.as_fraction()
    first = watson_w00(a, b, c)
    if ab == 0:
        return first
    denom = (1 + a.as_fraction() + b.as_fraction()) * (2 * c.as_fraction() + 1)
    if denom == 0:
        raise ValueError("contiguous reduction undefined: "
                         "(1+a+b)(2c+1) vanishes")
    second = watson_w00(a + 1, b + 1, c + 1)
    return first - ab / denom * second


def _gamma_square_ratio(top: HalfInt, bottom: HalfInt, power4: int,
                        negate: bool) -> Fraction:
    """(+/-) Gamma(top)^2 * 4^power4 / (pi * Gamma(bottom)^2), which is
    rational exactly when one argument is half-odd and the other is an
    integer."""
    g_top = gamma_half(top)
    g_bottom = gamma_half(bottom)
    if g_top.is_pole or g_bottom.is_pole:
        raise GammaPoleError("Gamma closed form hit a pole")
    pi_power = 2 * g_top.pi_half_power - 2 - 2 * g_bottom.pi_half_power
    if pi_power != 0:
        raise ArithmeticError("sqrt(pi) powers failed to cancel")
    value = g_top.coeff ** 2 * Fraction(4) ** power4 / g_bottom.coeff ** 2
    return -value if negate else value


def closed_form_F(n: int) -> Fraction:
    """Gamma((n+1)/2)^2 * 4^n / (pi * Gamma(n/2 + 1)^2) for even n >= 0.

    This is the even-index closed form of the unsigned central-binomial
    split component; it equals binom(n, n/2)^2.
    """
    if n < 0 or n % 2:
        raise ValueError("defined for even n >= 0")
    return _gamma_square_ratio(HalfInt(n + 1), HalfInt(n + 2), n, False)


def closed_form_G(n: int) -> Fraction:
    """-Gamma(n/2 + 1)^2 * 4^n / (pi * Gamma((n+3)/2)^2) for odd n >= 1.

    The odd-index closed form of the shifted split component; it equals
    -binom(n, (n-1)/2)^2.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("defined for odd n >= 1")
    return _gamma_square_ratio(HalfInt(n + 2), HalfInt(n + 3), n, True)


def second_identity_spec(n: int) -> PFQSpec:
    """3F2(-n, -n-1, 1/2; -n+1/2, 2; 1) as a series specification."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return PFQSpec(upper=(HalfInt.from_int(-n), HalfInt.from_int(-n - 1),
                          HalfInt(1)),
                   lower=(HalfInt(-2 * n + 1), HalfInt.from_int(2)))


def second_identity_3f2(n: int) -> Fraction:
    """Claimed value of the even-argument series in
    :func:`second_identity_spec`:

        3F2(-2n, -2n-1, 1/2; -2n+1/2, 2; 1)
            = (2n+1)! (2n)!^3 / ((4n)! n!^3 (n+1)!),

    returned as an exact factorial quotient (n >= 0)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Fraction(factorial(2 * n + 1) * factorial(2 * n) ** 3,
                    factorial(4 * n) * factorial(n) ** 3 * factorial(n + 1))
