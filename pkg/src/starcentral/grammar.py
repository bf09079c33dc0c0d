"""Text syntax for *-polynomials.

::

    poly   := term (('+'|'-') term)*
    term   := ['-'] [coeff '*'] factor ('*' factor)*  |  ['-'] coeff
    factor := var | '(' poly ')' | '[' poly (',' poly)+ ']'
            | 'jord(' poly ',' poly ')' | 'adj(' poly ')' | factor '^' INT
    var    := ('y'|'z') INT
    coeff  := INT ['/' INT]

``[a, b, c]`` is the left-normed commutator, ``jord`` the Jordan product and
``adj`` the involution.  Whitespace is ignored.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .polyalg import (Q, Indeterminate, StarPolynomial, commutator, jordan,
                      star, word_str)
from .scalars import Fp, RingConfig, format_scalar


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


_TOKEN = re.compile(r"\s*(?:(\d+)|(jord|adj)\s*\(|([yz])(\d+)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(1):
            tokens.append(("INT", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("FUNC", m.group(2), start))
        elif m.group(3):
            tokens.append(("VAR", Indeterminate(m.group(3), int(m.group(4))), start))
        else:
            ch = m.group(5)
            if ch not in "+-*/^()[],":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("EOF", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: RingConfig):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            self.error(f"expected {kind!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def error(self, msg, pos=None):
        raise ParseError(msg, self.peek()[2] if pos is None else pos, self.text)

    def poly(self):
        acc = self.term()
        while self.peek()[0] in "+-" and self.peek()[0] != "EOF":
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        elif self.peek()[0] == "+":
            self.take()
        coeff = None
        if self.peek()[0] == "INT":
            num = self.take()[1]
            den = 1
            if self.peek()[0] == "/":
                self.take()
                _, den, at = self.take("INT")
                if den == 0:
                    self.error("zero denominator", at)
            coeff = Fraction(num, den)
            if self.peek()[0] != "*":
                return StarPolynomial.constant(sign * coeff, self.ring)
            self.take("*")
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        if coeff is not None:
            acc = acc * self.ring(coeff)
        return -acc if sign < 0 else acc

    def factor(self):
        kind, val, start = self.peek()
        if kind == "VAR":
            if val.index < 1:
                self.error("variable index must be positive")
            self.take()
            out = StarPolynomial.letter(val, self.ring)
        elif kind == "(":
            self.take()
            out = self.poly()
            self.take(")")
        elif kind == "[":
            self.take()
            args = [self.poly()]
            while self.peek()[0] == ",":
                self.take()
                args.append(self.poly())
            self.take("]")
            if len(args) < 2:
                self.error("a commutator needs at least two entries", start)
            out = commutator(*args)
        elif kind == "FUNC":
            self.take()
            a = self.poly()
            if val == "jord":
                self.take(",")
                b = self.poly()
                out = jordan(a, b)
            else:
                out = star(a)
            self.take(")")
        elif kind == "EOF":
            self.error("unexpected end of input")
        else:
            self.error(f"unexpected token {val!r}")
        while self.peek()[0] == "^":
            self.take()
            out = out ** self.take("INT")[1]
        return out


def parse_poly(text: str, ring: RingConfig = Q) -> StarPolynomial:
    """Parse a polynomial written in the grammar above."""
    p = _Parser(text, ring)
    if p.peek()[0] == "EOF":
        p.error("empty input")
    out = p.poly()
    if p.peek()[0] != "EOF":
        p.error(f"unexpected token {p.peek()[1]!r}")
    return out


def _is_negative(c) -> bool:
    return isinstance(c, (int, Fraction)) and c < 0


def format_poly(f: StarPolynomial) -> str:
    """Canonical text: words by length then lexicographically, explicit coefficients."""
    if not f.terms:
        return "0"
    out = []
    for n, (w, c) in enumerate(f.items()):
        neg = _is_negative(c)
        mag = -c if neg else c
        body = word_str(w) if w else ""
        if not w:
            text = format_scalar(mag)
        elif mag == 1 and not (neg and n == 0):
            text = body
        else:
            text = f"{format_scalar(mag)}*{body}"
        if n == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)
