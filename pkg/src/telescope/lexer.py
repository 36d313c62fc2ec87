"""Tokenizer shared by the small expression grammars in this package
(summands, closed-form expressions, polynomial coefficients, summation
bounds).

Tokens are integers, identifiers, and single-character symbols out of
``+ - * / ^ ( ) , [ ]``.  Whitespace separates tokens and is otherwise
ignored.  Every parse failure raises :class:`ParseError`, which carries
the offset into the source string so callers get a position-annotated
message.
"""

from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    """Syntax or grammar violation, annotated with the source position."""

    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        snippet = text[pos:pos + 16]
        super().__init__(f"{message} at position {pos} (near {snippet!r})")


@dataclass(frozen=True)
class Token:
    kind: str   # "int", "name", "end", or the symbol character itself
    value: str
    pos: int


_SYMBOLS = set("+-*/^(),[]")


def tokenize(text: str) -> list[Token]:
    tokens = []
    i, size = 0, len(text)
    while i < size:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < size and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < size and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("name", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", text, i)
    tokens.append(Token("end", "", size))
    return tokens


class TokenStream:
    """Cursor over the token list with single-token lookahead."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.tokens[self.index]
        if tok.kind != "end":
            self.index += 1
        return tok

    def accept(self, kind: str) -> Token | None:
        if self.tokens[self.index].kind == kind:
            return self.advance()
        return None

    def expect(self, kind: str, what: str | None = None) -> Token:
        tok = self.tokens[self.index]
        if tok.kind != kind:
            raise self.error(f"expected {what or kind}")
        return self.advance()

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.peek().pos)

    def expect_end(self) -> None:
        if self.peek().kind != "end":
            raise self.error("unexpected trailing input")
