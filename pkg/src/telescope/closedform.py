"""Evaluator for the closed-form expression language used by identity
corpora: exact rational arithmetic in one integer variable ``n`` with
``binom``, ``catalan``, ``factorial`` and ``floor`` calls.

Grammar (whitespace-insensitive)::

    expr   := gterm (("+" | "-") gterm)*
    gterm  := term ("[" "n" ("even" | "odd") "]")?
    term   := factor (("*" | "/") factor)*
    factor := "-" factor | power
    power  := atom ("^" factor)?
    atom   := INT | "n" | NAME "(" expr ("," expr)* ")" | "(" expr ")"

A parity guard suppresses its term entirely when ``n`` has the other
parity: the body is not evaluated at all, so expressions such as
``binom(n, n/2)^2 [n even]`` stay well defined at every integer.
binom, catalan and factorial insist on integer arguments; ``floor``
is the escape hatch for halved indices like ``floor(n/2)``.
"""

from __future__ import annotations

from fractions import Fraction

from .combinat import EvalDomainError, binomial, catalan, factorial
from .lexer import TokenStream

_ARITY = {"binom": 2, "catalan": 1, "factorial": 1, "floor": 1}


class ClosedForm:
    """A parsed closed-form expression, evaluable at any integer n."""

    __slots__ = ("text", "_root")

    def __init__(self, text: str, root):
        self.text = text
        self._root = root

    @classmethod
    def parse(cls, text: str) -> "ClosedForm":
        ts = TokenStream(text)
        root = _parse_expr(ts)
        ts.expect_end()
        return cls(text, root)

    def evaluate(self, n: int) -> Fraction:
        return _eval(self._root, n)

    def __repr__(self):
        return f"ClosedForm({self.text!r})"

    def __str__(self):
        return self.text


def eval_closed_form(text: str, n: int) -> Fraction:
    return ClosedForm.parse(text).evaluate(n)


def _parse_expr(ts: TokenStream):
    node = _parse_guarded(ts)
    while True:
        if ts.accept("+"):
            node = ("add", node, _parse_guarded(ts))
        elif ts.accept("-"):
            node = ("sub", node, _parse_guarded(ts))
        else:
            return node


def _parse_guarded(ts: TokenStream):
    node = _parse_term(ts)
    if ts.accept("["):
        tok = ts.expect("name", "the variable n")
        if tok.value != "n":
            raise ts.error("guards apply to n only")
        parity = ts.expect("name", "'even' or 'odd'")
        if parity.value not in ("even", "odd"):
            raise ts.error("guard parity must be 'even' or 'odd'")
        ts.expect("]")
        node = ("guard", parity.value, node)
    return node


def _parse_term(ts: TokenStream):
    node = _parse_factor(ts)
    while True:
        if ts.accept("*"):
            node = ("mul", node, _parse_factor(ts))
        elif ts.accept("/"):
            node = ("div", node, _parse_factor(ts))
        else:
            return node


def _parse_factor(ts: TokenStream):
    if ts.accept("-"):
        return ("neg", _parse_factor(ts))
    return _parse_power(ts)


def _parse_power(ts: TokenStream):
    base = _parse_atom(ts)
    if ts.accept("^"):
        return ("pow", base, _parse_factor(ts))
    return base


def _parse_atom(ts: TokenStream):
    tok = ts.peek()
    if tok.kind == "int":
        ts.advance()
        return ("num", Fraction(int(tok.value)))
    if tok.kind == "(":
        ts.advance()
        node = _parse_expr(ts)
        ts.expect(")")
        return node
    if tok.kind == "name":
        ts.advance()
        if tok.value == "n":
            return ("var",)
        arity = _ARITY.get(tok.value)
        if arity is None:
            raise ts.error(f"unknown function {tok.value!r}")
        ts.expect("(")
        args = [_parse_expr(ts)]
        while ts.accept(","):
            args.append(_parse_expr(ts))
        ts.expect(")")
        if len(args) != arity:
            raise ts.error(f"{tok.value} takes {arity} argument(s)")
        return ("call", tok.value, tuple(args))
    raise ts.error("expected a number, n, or a function call")


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise EvalDomainError(f"{what} must be an integer, got {value}")
    return value.numerator


def _eval(node, n: int) -> Fraction:
    kind = node[0]
    if kind == "num":
        return node[1]
    if kind == "var":
        return Fraction(n)
    if kind == "guard":
        if (n % 2 == 0) != (node[1] == "even"):
            return Fraction(0)
        return _eval(node[2], n)
    if kind == "neg":
        return -_eval(node[1], n)
    if kind == "add":
        return _eval(node[1], n) + _eval(node[2], n)
    if kind == "sub":
        return _eval(node[1], n) - _eval(node[2], n)
    if kind == "mul":
        return _eval(node[1], n) * _eval(node[2], n)
    if kind == "div":
        return _eval(node[1], n) / _eval(node[2], n)
    if kind == "pow":
        exponent = _as_int(_eval(node[2], n), "exponent")
        return _eval(node[1], n) ** exponent
    name, args = node[1], node[2]
    values = [_eval(arg, n) for arg in args]
    if name == "floor":
        return Fraction(values[0].numerator // values[0].denominator)
    if name == "binom":
        return Fraction(binomial(_as_int(values[0], "binom argument"),
                                 _as_int(values[1], "binom argument")))
    if name == "catalan":
        return Fraction(catalan(_as_int(values[0], "catalan argument")))
    return Fraction(factorial(_as_int(values[0], "factorial argument")))
