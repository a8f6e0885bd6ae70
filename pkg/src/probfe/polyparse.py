"""Parse polynomial expressions in x with exact rational coefficients.

Grammar, loosest binding first::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := ("-" | "+") unary | power
    power   := atom ("^" unary)?
    atom    := INTEGER | "x" | "(" expr ")"

So ``-x^2`` is ``-(x^2)`` and ``1/2*x^2`` is ``(1/2)*x^2``.  Exponents
must reduce to nonnegative integer constants; division is only allowed
by a nonzero constant.  ``**`` is accepted as a synonym for ``^``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .series import XPolynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|([A-Za-z_]\w*))")


class PolySyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    i = 0
    while i < len(text):
        if text[i:].strip() == "":
            break
        m = _TOKEN.match(text, i)
        if m is None:
            j = i + len(text[i:]) - len(text[i:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[j]!r}", j, text)
        num, op, name = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(("num", num, start))
        elif op is not None:
            out.append(("op", "^" if op == "**" else op, start))
        else:
            if name != "x":
                raise PolySyntaxError(f"unknown name {name!r} (only x is allowed)", start, text)
            out.append(("x", name, start))
        i = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return PolySyntaxError(msg, tok[2], self.text)

    def parse(self) -> XPolynomial:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        out = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return out

    def expr(self):
        acc = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op_tok = self.take()
            rhs = self.unary()
            if op_tok[1] == "*":
                acc = acc * rhs
            else:
                if rhs.degree > 0:
                    raise self.error("division by a non-constant", op_tok)
                if rhs.is_zero():
                    raise self.error("division by zero", op_tok)
                acc = acc / rhs.coeffs[0]
        return acc

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            caret = self.take()
            exp = self.unary()
            if exp.degree > 0:
                raise self.error("exponent must be a constant", caret)
            e = exp.coeffs[0] if exp.coeffs else Fraction(0)
            if e.denominator != 1 or e < 0:
                raise self.error("exponent must be a nonnegative integer", caret)
            return base ** int(e)
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return XPolynomial.constant(int(val))
        if kind == "x":
            return XPolynomial.x()
        if tok[:2] == ("op", "("):
            inner = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise self.error("expected ')'", close)
            return inner
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {val!r}", tok)


def parse_poly(text: str) -> XPolynomial:
    """Parse ``text`` into an exact polynomial.

    >>> parse_poly("(x-1)*(x+1)").coeffs
    (Fraction(-1, 1), Fraction(0, 1), Fraction(1, 1))
    """
    return _Parser(text).parse()
