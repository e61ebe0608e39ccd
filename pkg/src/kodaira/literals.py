"""Parsing of element literals, curve JSON, place literals, and points.

Grammar for element literals (whitespace insignificant):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' INT)?
    atom   := INT | 't' | '(' expr ')'

Rationals are division ("3/4"), rational functions use the variable t
("(t^2+1)/(t*(t+4))").  Curve JSON:

    {"field": {"kind": "Q"}                                  -- rationals
             | {"kind": "Fp_t", "p": 5}                      -- F_p(t)
             | {"kind": "number_field", "modulus": "..."},   -- Q[t]/(m)
     "a": ["a1", "a2", "a3", "a4", "a6"]}

Place literals: a prime integer (over Q), a monic irreducible polynomial in
t (finite place of F_p(t)), or "inf" (the degree place).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .fields import GF, QQ, is_prime
from .places import Place
from .poly import Polynomial, is_irreducible
from .quotient import QuotientField
from .ratfunc import FunctionField, RationalFunction
from .weierstrass import CurvePoint, WeierstrassModel


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ValueError(f"bad literal {self.text!r} at position {self.pos}: {msg}")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def parse_int(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def parse(self, one, gen):
        value = self.parse_expr(one, gen)
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("trailing input")
        return value

    def parse_expr(self, one, gen):
        value = self.parse_term(one, gen)
        while True:
            if self.take("+"):
                value = value + self.parse_term(one, gen)
            elif self.take("-"):
                value = value - self.parse_term(one, gen)
            else:
                return value

    def parse_term(self, one, gen):
        value = self.parse_factor(one, gen)
        while True:
            if self.take("*"):
                value = value * self.parse_factor(one, gen)
            elif self.take("/"):
                den = self.parse_factor(one, gen)
                if not den:
                    self.error("division by zero")
                value = value / den
            else:
                return value

    def parse_factor(self, one, gen):
        if self.take("-"):
            return -self.parse_factor(one, gen)
        return self.parse_power(one, gen)

    def parse_power(self, one, gen):
        base = self.parse_atom(one, gen)
        if self.take("^"):
            exp = self.parse_int()
            return base**exp
        return base

    def parse_atom(self, one, gen):
        ch = self.peek()
        if ch == "(":
            self.take("(")
            value = self.parse_expr(one, gen)
            if not self.take(")"):
                self.error("expected ')'")
            return value
        if ch == "t":
            self.pos += 1
            if gen is None:
                self.error("the variable t is not allowed in this field")
            return gen
        if ch.isdigit():
            return one * self.parse_int()
        self.error("expected an integer, 't', or '('")


def parse_element(text: str, field):
    """Evaluate a literal in the given field descriptor."""
    gen = getattr(field, "gen", None)
    return _Parser(text).parse(field.one, gen)


def field_from_json(obj) -> object:
    kind = obj.get("kind")
    if kind == "Q":
        return QQ
    if kind == "Fp_t":
        p = obj.get("p")
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"Fp_t needs a prime p, got {p!r}")
        return FunctionField(GF(p))
    if kind == "number_field":
        modulus_text = obj.get("modulus")
        if not isinstance(modulus_text, str):
            raise ValueError("number_field needs a modulus string")
        rf = parse_element(modulus_text, FunctionField(QQ))
        if not rf.is_polynomial:
            raise ValueError("modulus must be a polynomial in t")
        return QuotientField(QQ, rf.num.monic())
    raise ValueError(f"unknown field kind {kind!r}")


def parse_curve(spec) -> WeierstrassModel:
    """Curve JSON (text or already-decoded object) to a Weierstrass model."""
    if isinstance(spec, str):
        spec = json.loads(spec)
    if not isinstance(spec, dict) or "field" not in spec or "a" not in spec:
        raise ValueError('curve JSON needs "field" and "a" entries')
    field = field_from_json(spec["field"])
    a = spec["a"]
    if not isinstance(a, list) or len(a) != 5:
        raise ValueError('"a" must list the five coefficients a1, a2, a3, a4, a6')
    vals = [parse_element(str(text), field) for text in a]
    return WeierstrassModel(field, *vals)


def parse_place(text: str, field) -> Place:
    text = text.strip()
    if isinstance(field, FunctionField):
        p = field.base.p
        if text == "inf":
            return Place.infinite(p)
        rf = parse_element(text, field)
        if not rf.is_polynomial or rf.num.degree < 1:
            raise ValueError(f"{text!r} is not a finite place: need a polynomial in t")
        poly = rf.num
        if not poly.is_monic:
            raise ValueError(f"place polynomial {text!r} must be monic")
        if not is_irreducible(poly):
            raise ValueError(f"place polynomial {text!r} is reducible")
        return Place.finite(poly, check=False)
    if field == QQ:
        try:
            p = int(text)
        except ValueError:
            raise ValueError(f"{text!r} is not a prime integer") from None
        return Place.rational_prime(p)
    raise ValueError(f"places of {field!r} are not supported")


def parse_point(text: str, field) -> CurvePoint:
    parts = _split_top_level_comma(text)
    if len(parts) != 2:
        raise ValueError(f"point literal {text!r} must be 'x,y'")
    return CurvePoint(parse_element(parts[0], field), parse_element(parts[1], field))


def _split_top_level_comma(text):
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def render_element(x) -> str:
    if isinstance(x, RationalFunction):
        return x.render()
    if isinstance(x, Fraction):
        return str(x)
    return str(x)
