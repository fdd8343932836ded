"""Parsing and printing of rational-map expressions in the variable z.

Accepted grammar: integer and fraction literals (``a/b``), the variable
``z``, operators ``+ - * / ^`` with the usual precedence, parentheses, and
implicit multiplication (``3z``, ``2(z+1)``).  Exponents must be
nonnegative integer literals.  The expression is expanded into a single
rational function, the polynomial gcd of numerator and denominator is
cancelled, and the result must have degree exactly 2.
"""

from __future__ import annotations

from fractions import Fraction

from . import polyutil
from .errors import DegreeError, MapSyntaxError
from .quadmap import Lift

_MAX_DEGREE = 16  # intermediate blow-up guard


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", int(text[i:j]), i))
            i = j
        elif ch == "z":
            tokens.append(_Token("z", None, i))
            i += 1
        elif ch in "+-*/^()":
            tokens.append(_Token(ch, None, i))
            i += 1
        else:
            raise MapSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", None, len(text)))
    return tokens


class _RationalFunction:
    """num/den as dense low-to-high Fraction coefficient lists."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, c):
        return cls([Fraction(c)] if c else [], [Fraction(1)])

    @classmethod
    def variable(cls):
        return cls([Fraction(0), Fraction(1)], [Fraction(1)])

    def _guard(self, pos):
        if polyutil.degree(self.num) > _MAX_DEGREE or polyutil.degree(self.den) > _MAX_DEGREE:
            raise MapSyntaxError("intermediate degree too large", pos)
        return self

    def add(self, other, pos):
        num = polyutil.add(
            polyutil.mul(self.num, other.den), polyutil.mul(other.num, self.den)
        )
        return _RationalFunction(num, polyutil.mul(self.den, other.den))._guard(pos)

    def sub(self, other, pos):
        num = polyutil.sub(
            polyutil.mul(self.num, other.den), polyutil.mul(other.num, self.den)
        )
        return _RationalFunction(num, polyutil.mul(self.den, other.den))._guard(pos)

    def mul(self, other, pos):
        return _RationalFunction(
            polyutil.mul(self.num, other.num), polyutil.mul(self.den, other.den)
        )._guard(pos)

    def div(self, other, pos):
        if not other.num:
            raise MapSyntaxError("division by zero", pos)
        return _RationalFunction(
            polyutil.mul(self.num, other.den), polyutil.mul(self.den, other.num)
        )._guard(pos)

    def neg(self):
        return _RationalFunction([-c for c in self.num], list(self.den))

    def pow(self, exponent, pos):
        result = _RationalFunction.constant(1)
        for _ in range(exponent):
            result = result.mul(self, pos)
        return result


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> _RationalFunction:
        value = self.expression()
        tail = self.peek()
        if tail.kind != "end":
            raise MapSyntaxError("unexpected trailing input", tail.pos)
        return value

    def expression(self) -> _RationalFunction:
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            value = value.add(rhs, op.pos) if op.kind == "+" else value.sub(rhs, op.pos)
        return value

    def term(self) -> _RationalFunction:
        value = self.unary()
        while True:
            tok = self.peek()
            if tok.kind in ("*", "/"):
                self.advance()
                rhs = self.unary()
                value = value.mul(rhs, tok.pos) if tok.kind == "*" else value.div(rhs, tok.pos)
            elif tok.kind in ("num", "z", "("):
                # implicit multiplication, same precedence as *
                rhs = self.unary()
                value = value.mul(rhs, tok.pos)
            else:
                return value

    def unary(self) -> _RationalFunction:
        if self.peek().kind == "-":
            self.advance()
            return self.unary().neg()
        if self.peek().kind == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> _RationalFunction:
        base = self.atom()
        if self.peek().kind == "^":
            op = self.advance()
            exp = self.peek()
            if exp.kind != "num":
                raise MapSyntaxError("exponent must be a nonnegative integer", exp.pos)
            self.advance()
            if exp.value > _MAX_DEGREE:
                raise MapSyntaxError("exponent too large", exp.pos)
            return base.pow(exp.value, op.pos)
        return base

    def atom(self) -> _RationalFunction:
        tok = self.advance()
        if tok.kind == "num":
            return _RationalFunction.constant(tok.value)
        if tok.kind == "z":
            return _RationalFunction.variable()
        if tok.kind == "(":
            value = self.expression()
            closing = self.advance()
            if closing.kind != ")":
                raise MapSyntaxError("expected ')'", closing.pos)
            return value
        raise MapSyntaxError("expected a number, 'z' or '('", tok.pos)


def parse_map(text: str) -> Lift:
    """Parse a map expression into a homogeneous lift.

    After cancellation the rational function must have degree exactly 2 in
    numerator or denominator; raises MapSyntaxError (with position),
    DegreeError, or DegenerateMapError.
    """
    rf = _Parser(_tokenize(text)).parse()
    if not rf.num:
        raise DegreeError("the zero map is not a quadratic map")
    common = polyutil.gcd(rf.num, rf.den)
    num, _ = polyutil.divmod_exact(rf.num, common)
    den, _ = polyutil.divmod_exact(rf.den, common)
    deg = max(polyutil.degree(num), polyutil.degree(den))
    if deg != 2:
        raise DegreeError(f"map has degree {deg}, expected 2")
    # canonical scaling: the degree-2 polynomial (numerator preferred) is monic
    lead = num[2] if polyutil.degree(num) == 2 else den[2]
    num = polyutil.scale(num, 1 / lead)
    den = polyutil.scale(den, 1 / lead)

    def coeff(poly, i):
        return poly[i] if i < len(poly) else Fraction(0)

    return Lift(
        coeff(num, 2), coeff(num, 1), coeff(num, 0),
        coeff(den, 2), coeff(den, 1), coeff(den, 0),
    )


def _format_coeff(c: Fraction) -> str:
    return str(c)


def _poly_to_expr(c2: Fraction, c1: Fraction, c0: Fraction) -> str:
    parts = []
    for coeff, power in ((c2, "z^2"), (c1, "z"), (c0, "")):
        if coeff == 0:
            continue
        if power:
            body = power if abs(coeff) == 1 else f"{_format_coeff(abs(coeff))}*{power}"
        else:
            body = _format_coeff(abs(coeff))
        sign = "-" if coeff < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def lift_to_expr(lift: Lift) -> str:
    """Printable expression for the lift; parses back to the same map up to
    projective scaling."""
    num = _poly_to_expr(lift.a0, lift.a1, lift.a2)
    if lift.b0 == 0 and lift.b1 == 0:
        if lift.b2 == 1:
            return num
        return f"({num})/({_format_coeff(lift.b2)})"
    den = _poly_to_expr(lift.b0, lift.b1, lift.b2)
    return f"({num})/({den})"
