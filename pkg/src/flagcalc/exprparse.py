"""Parser for the polynomial expression grammar shared by the library and CLI.

Grammar:

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' INT)*
    atom   := NUMBER | NAME | '(' expr ')'
    NUMBER := INT | INT '/' INT          (exact rational literal)
    NAME   := 'w'<digits> | 't'<digits> | 't'

Variables ``w1..wl`` are the fundamental-weight variables; ``t1..tn`` (and the
bare ``t``, where the type defines it) are expanded into weight variables at
parse time through the root datum.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .polyring import Polynomial
from .rootdata import RootDatum

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(.))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            if sym.strip():
                if sym not in "+-*/^()":
                    raise ParseError(f"unexpected character {sym!r}")
                tokens.append((sym, sym))
        pos = m.end()
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens: list, datum: RootDatum):
        self.tokens = tokens
        self.pos = 0
        self.datum = datum
        self.nvars = datum.rank

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}")
        return tok

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek() != "end":
            raise ParseError(f"trailing input at {self.tokens[self.pos][1]!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek() == "*":
            self.next()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        if self.peek() == "-":
            self.next()
            return -self.factor()
        p = self.atom()
        while self.peek() == "^":
            self.next()
            tok = self.next()
            if tok[0] != "num":
                raise ParseError("exponent must be a nonnegative integer")
            p = p**tok[1]
        return p

    def atom(self) -> Polynomial:
        kind, value = self.next()
        if kind == "num":
            if self.peek() == "/":
                self.next()
                tok = self.next()
                if tok[0] != "num" or tok[1] == 0:
                    raise ParseError("malformed rational literal")
                return Polynomial.constant(self.nvars, Fraction(value, tok[1]))
            return Polynomial.constant(self.nvars, value)
        if kind == "name":
            return self.variable(value)
        if kind == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected token {value!r}")

    def variable(self, name: str) -> Polynomial:
        if name == "t":
            if self.datum.extra_t is None:
                raise ParseError(
                    f"variable 't' is not defined for type {self.datum.cartan_type}"
                )
            return self.datum.extra_t_poly()
        m = re.fullmatch(r"([wt])(\d+)", name)
        if not m:
            raise ParseError(f"unknown variable {name!r}")
        kind, idx = m.group(1), int(m.group(2))
        if kind == "w":
            if not 1 <= idx <= self.nvars:
                raise ParseError(f"variable {name!r} out of range (rank {self.nvars})")
            return Polynomial.variable(self.nvars, idx - 1)
        if not 1 <= idx <= self.datum.num_t_classes:
            raise ParseError(
                f"variable {name!r} out of range for type {self.datum.cartan_type}"
            )
        return self.datum.t_poly(idx)


def parse_polynomial(text: str, datum: RootDatum) -> Polynomial:
    """Parse an expression into a polynomial in the weight variables."""
    return _Parser(_tokenize(text), datum).parse()
