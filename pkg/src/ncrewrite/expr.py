"""Parsing and printing of noncommutative polynomial expressions.

Grammar (``*`` is mandatory between factors so that multi-character
generator names such as ``J_1`` or ``rho`` stay unambiguous)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'i' | NAME | '(' expr ')'

``i`` is the imaginary unit.  Division is allowed only by a nonzero scalar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from .arith import GaussianRational, format_scalar
from .freealg import Alphabet, NCPoly


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(self._render())

    def _render(self):
        if self.pos is None:
            return self.message
        return f"{self.message} at position {self.pos} in {self.text!r}"


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: GaussianRational


@dataclass(frozen=True)
class Gen:
    name: str
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Node"
    right: "Node"
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Gen, BinOp, Neg, Pow]


# -- tokenizer ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # int, name, op, end
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    if not text.isascii():
        raise ParseError("only ASCII input is accepted", text, 0)
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(Token(kind, m.group(kind), start))
        pos = m.end()
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.k = 0

    def peek(self) -> Token:
        return self.tokens[self.k]

    def take(self) -> Token:
        t = self.tokens[self.k]
        self.k += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.take()
        if t.text != text:
            found = t.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.text, t.pos)
        return t

    def parse(self) -> Node:
        node = self.expr()
        t = self.peek()
        if t.kind != "end":
            if t.kind in ("name", "int") or t.text == "(":
                raise ParseError("missing '*' between factors", self.text, t.pos)
            raise ParseError(f"unexpected {t.text!r}", self.text, t.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().text in ("+", "-"):
            t = self.take()
            node = BinOp(t.text, node, self.term(), t.pos)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek().text in ("*", "/"):
            t = self.take()
            node = BinOp(t.text, node, self.unary(), t.pos)
        return node

    def unary(self) -> Node:
        t = self.peek()
        if t.text == "-":
            self.take()
            return Neg(self.unary())
        if t.text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.peek().text == "^":
            self.take()
            t = self.take()
            if t.kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", self.text, t.pos)
            return Pow(base, int(t.text))
        return base

    def atom(self) -> Node:
        t = self.take()
        if t.kind == "int":
            return Num(GaussianRational(int(t.text)))
        if t.kind == "name":
            if t.text == "i":
                return Num(GaussianRational(0, 1))
            return Gen(t.text, t.pos)
        if t.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", self.text, t.pos)


def parse_ast(text: str) -> Node:
    return _Parser(text).parse()


def lower(node: Node, alphabet: Alphabet, text: str = "") -> NCPoly:
    """Evaluate an AST to a canonical NCPoly over ``alphabet``."""
    if isinstance(node, Num):
        return NCPoly.constant(alphabet, node.value)
    if isinstance(node, Gen):
        if node.name not in alphabet:
            raise ParseError(f"unknown identifier {node.name!r}", text, node.pos)
        return NCPoly.gen(alphabet, node.name)
    if isinstance(node, Neg):
        return -lower(node.operand, alphabet, text)
    if isinstance(node, Pow):
        return lower(node.base, alphabet, text) ** node.exponent
    left = lower(node.left, alphabet, text)
    right = lower(node.right, alphabet, text)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if not right.is_constant():
        raise ParseError("division by a non-scalar", text, node.pos)
    c = right.constant_term()
    if not c:
        raise ParseError("division by zero", text, node.pos)
    return left.scale(c.inverse())


def parse_expr(text: str, alphabet: Alphabet) -> NCPoly:
    """Parse ``text`` into a canonical NCPoly over ``alphabet``."""
    return lower(parse_ast(text), alphabet, text)


# -- printing ----------------------------------------------------------------

def _word_text(alphabet: Alphabet, w) -> str:
    parts = []
    k = 0
    while k < len(w):
        j = k
        while j < len(w) and w[j] == w[k]:
            j += 1
        name = alphabet.names[w[k]]
        parts.append(name if j - k == 1 else f"{name}^{j - k}")
        k = j
    return "*".join(parts)


def _magnitude(x: Fraction) -> str:
    return str(x) if x.denominator == 1 else f"({x})"


def _term_text(c: GaussianRational, word: str) -> tuple[bool, str]:
    """Return (negative, unsigned text) for one term."""
    if c.im == 0 or c.re == 0:
        if c.im == 0:
            neg, mag, unit = c.re < 0, abs(c.re), ""
        else:
            neg, mag, unit = c.im < 0, abs(c.im), "i"
        if unit:
            factors = [] if mag == 1 else [_magnitude(mag)]
            factors.append("i")
        else:
            factors = [] if (mag == 1 and word) else [_magnitude(mag) if word else str(mag)]
        if word:
            factors.append(word)
        return neg, "*".join(factors)
    scalar = f"({format_scalar(c)})"
    return False, f"{scalar}*{word}" if word else scalar


def print_expr(p: NCPoly) -> str:
    """Canonical text for ``p``: terms in decreasing order, explicit ``*``."""
    if not p.terms:
        return "0"
    out = []
    for w, c in p.sorted_terms():
        neg, body = _term_text(c, _word_text(p.alphabet, w))
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_word(alphabet: Alphabet, w) -> str:
    return _word_text(alphabet, w) if w else "1"

