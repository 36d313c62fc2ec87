"""Integer-valued combinatorial kernels shared by term evaluation and
closed-form evaluation.

The binomial follows the summation-support convention: binom(a, b) is 0
whenever b < 0 or b > a, including every case with a < 0.  That makes
finite sums over a binomial row insensitive to overshooting the natural
support.  Catalan numbers inherit the same convention (0 for negative
index).  Factorials of negative integers have no such convention and
raise.
"""

from __future__ import annotations

import math
from fractions import Fraction


class EvalDomainError(ValueError):
    """An evaluation left the domain where the term is defined."""


def binomial(top: int, bottom: int) -> int:
    if bottom < 0 or top < 0 or bottom > top:
        return 0
    return math.comb(top, bottom)


def catalan(index: int) -> int:
    if index < 0:
        return 0
    return math.comb(2 * index, index) // (index + 1)


def factorial(value: int) -> int:
    if value < 0:
        raise EvalDomainError(f"factorial of negative integer {value}")
    return math.factorial(value)


def power(base: Fraction, exponent: int) -> Fraction:
    if exponent < 0 and base == 0:
        raise EvalDomainError("zero raised to a negative exponent")
    return Fraction(base) ** exponent
