"""Recursive-descent parser for univariate polynomial expressions.

Grammar (precedence low to high):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('-')* atom
    atom   := literal | variable | '(' expr ')' | atom '^' uint

Literals are integers or rationals written "p/q" (a single token; there is
no division operator).  Exponents are literal nonnegative integers, bind
tighter than unary minus ("-x^2" is -(x^2)) and are right-associative
(x^2^3 = x^8).  Implicit multiplication is accepted between a literal and a
variable or parenthesis ("3x", "2(x+1)").  Whitespace is insignificant.
Exactly one variable may appear; the first identifier fixes its name.

Syntax errors raise ParseError carrying the byte offset into the UTF-8
encoding of the source.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .poly import Polynomial

__all__ = [
    "ParseError",
    "PolyExpr",
    "Lit",
    "Var",
    "Neg",
    "Add",
    "Sub",
    "Mul",
    "Pow",
    "tokenize",
    "parse",
    "lower",
    "evaluate",
    "parse_polynomial",
]


class ParseError(ValueError):
    """Syntax or unsupported-construct error, with a byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "PolyExpr"


@dataclass(frozen=True)
class Add:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Sub:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Mul:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Pow:
    base: "PolyExpr"
    exponent: int  # literal and nonnegative by construction


PolyExpr = Union[Lit, Var, Neg, Add, Sub, Mul, Pow]


# ---------------------------------------------------------------------------
# Tokenizer

_PUNCT = {"+", "-", "*", "^", "(", ")"}


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "rational", "ident", one of _PUNCT, or "eof"
    text: str
    offset: int  # byte offset into the UTF-8 source


def tokenize(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    byte_pos = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            byte_pos += len(ch.encode("utf-8"))
            i += 1
            continue
        start_byte = byte_pos
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            kind = "int"
            # "p/q" is one rational token; '/' exists only inside literals
            if j < n and src[j] == "/" and j + 1 < n and src[j + 1].isdigit():
                j += 1
                while j < n and src[j].isdigit():
                    j += 1
                kind = "rational"
            text = src[i:j]
            tokens.append(_Token(kind, text, start_byte))
            byte_pos += len(text.encode("utf-8"))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and src[j].isalpha():
                j += 1
            text = src[i:j]
            tokens.append(_Token("ident", text, start_byte))
            byte_pos += len(text.encode("utf-8"))
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(_Token(ch, ch, start_byte))
            byte_pos += len(ch.encode("utf-8"))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", start_byte)
    tokens.append(_Token("eof", "", byte_pos))
    return tokens


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self._tokens = tokens
        self._index = 0
        self._var_name: str | None = None

    @property
    def _token(self) -> _Token:
        return self._tokens[self._index]

    def _advance(self) -> _Token:
        tok = self._token
        self._index += 1
        return tok

    def _error(self, expected: str) -> ParseError:
        tok = self._token
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return ParseError(f"expected {expected}, found {found}", tok.offset)

    def parse(self) -> PolyExpr:
        result = self._expr()
        if self._token.kind != "eof":
            raise self._error("end of input")
        return result

    def _expr(self) -> PolyExpr:
        node = self._term()
        while self._token.kind in ("+", "-"):
            op = self._advance().kind
            rhs = self._term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def _term(self) -> PolyExpr:
        node = self._factor()
        while self._token.kind == "*":
            self._advance()
            node = Mul(node, self._factor())
        return node

    def _factor(self) -> PolyExpr:
        negations = 0
        while self._token.kind == "-":
            self._advance()
            negations += 1
        node = self._atom()
        for _ in range(negations):
            node = Neg(node)
        return node

    def _atom(self) -> PolyExpr:
        tok = self._token
        if tok.kind in ("int", "rational"):
            self._advance()
            node: PolyExpr = Lit(self._literal_value(tok))
            # implicit multiplication: literal directly before a variable
            # or parenthesis, as in "3x" or "2(x+1)"
            if self._token.kind in ("ident", "("):
                return Mul(node, self._atom())
            return self._power_suffix(node)
        if tok.kind == "ident":
            self._advance()
            if self._var_name is None:
                self._var_name = tok.text
            elif tok.text != self._var_name:
                raise ParseError(
                    f"second variable {tok.text!r} after {self._var_name!r}; "
                    "only one variable is allowed",
                    tok.offset,
                )
            return self._power_suffix(Var(tok.text))
        if tok.kind == "(":
            self._advance()
            node = self._expr()
            if self._token.kind != ")":
                raise self._error("')'")
            self._advance()
            return self._power_suffix(node)
        raise self._error("a number, a variable, or '('")

    def _power_suffix(self, base: PolyExpr) -> PolyExpr:
        if self._token.kind != "^":
            return base
        self._advance()
        return Pow(base, self._exponent_chain())

    def _exponent_chain(self) -> int:
        """One or more '^'-separated integer literals, folded right to left
        (x^2^3 = x^(2^3))."""
        tok = self._token
        if tok.kind == "-":
            raise ParseError("negative exponents are not supported", tok.offset)
        if tok.kind == "rational":
            raise ParseError(
                f"exponent must be a literal nonnegative integer, got rational {tok.text!r}",
                tok.offset,
            )
        if tok.kind != "int":
            raise self._error("a literal nonnegative integer exponent")
        self._advance()
        value = int(tok.text)
        if self._token.kind == "^":
            self._advance()
            value = value ** self._exponent_chain()
        return value

    @staticmethod
    def _literal_value(tok: _Token) -> Fraction:
        if tok.kind == "int":
            return Fraction(int(tok.text))
        num_text, den_text = tok.text.split("/")
        if int(den_text) == 0:
            raise ParseError(f"zero denominator in rational literal {tok.text!r}", tok.offset)
        return Fraction(int(num_text), int(den_text))


def parse(src: str) -> PolyExpr:
    """Parse source text into an expression tree."""
    return _Parser(tokenize(src)).parse()


def lower(e: PolyExpr) -> Polynomial:
    """Evaluate an expression tree bottom-up into a Polynomial."""
    if isinstance(e, Lit):
        return Polynomial.constant(e.value)
    if isinstance(e, Var):
        return Polynomial((0, 1))
    if isinstance(e, Neg):
        return -lower(e.operand)
    if isinstance(e, Add):
        return lower(e.left) + lower(e.right)
    if isinstance(e, Sub):
        return lower(e.left) - lower(e.right)
    if isinstance(e, Mul):
        return lower(e.left) * lower(e.right)
    if isinstance(e, Pow):
        return lower(e.base) ** e.exponent
    raise TypeError(f"not a PolyExpr node: {e!r}")


def evaluate(e: PolyExpr, t: Fraction | int) -> Fraction:
    """Interpret the tree directly at a point, without building a Polynomial.

    Kept separate from lower() so the two routes can check each other.
    """
    t = Fraction(t)
    if isinstance(e, Lit):
        return e.value
    if isinstance(e, Var):
        return t
    if isinstance(e, Neg):
        return -evaluate(e.operand, t)
    if isinstance(e, Add):
        return evaluate(e.left, t) + evaluate(e.right, t)
    if isinstance(e, Sub):
        return evaluate(e.left, t) - evaluate(e.right, t)
    if isinstance(e, Mul):
        return evaluate(e.left, t) * evaluate(e.right, t)
    if isinstance(e, Pow):
        return evaluate(e.base, t) ** e.exponent
    raise TypeError(f"not a PolyExpr node: {e!r}")


def parse_polynomial(src: str) -> Polynomial:
    """Parse and lower in one step."""
    return lower(parse(src))
