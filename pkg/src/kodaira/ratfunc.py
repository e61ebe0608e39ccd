"""Rational function fields K(t) over an exact base field K.

A ``RationalFunction`` is a reduced fraction of polynomials with a monic
denominator, so equality is structural and hashing is safe.  The degree
bookkeeping (numerator vs denominator) is what the place at infinity of
F_p(t) reads off.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import PrimeFieldElem
from .poly import Polynomial, poly_gcd


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial = None):
        if den is None:
            den = Polynomial.constant(num.field, num.field.one)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.field != den.field:
            raise ValueError("numerator and denominator over different fields")
        if num.is_zero:
            self.num = num
            self.den = Polynomial.constant(num.field, num.field.one)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.lead
        if lead != den.field.one:
            inv = den.field.one / lead
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_polynomial(self):
        return self.den.degree == 0

    @property
    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def degree_drop_at_infinity(self):
        """deg(den) - deg(num): the valuation at the infinite place of F_p(t)."""
        if self.is_zero:
            raise ZeroDivisionError("zero has infinite valuation")
        return self.den.degree - self.num.degree

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.field != self.field:
                raise ValueError("rational functions over different base fields")
            return other
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise ValueError("rational functions over different base fields")
            return RationalFunction(other)
        try:
            return RationalFunction(Polynomial.constant(self.field, other))
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __pow__(self, n):
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("inverse of zero")
            return RationalFunction(self.den**-n, self.num**-n)
        return RationalFunction(self.num**n, self.den**n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    def derivative(self):
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def evaluate(self, x):
        d = self.den.evaluate(x)
        if d == self.field.zero:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num.evaluate(x) / d

    def render(self, var="t"):
        if self.is_polynomial:
            return self.num.render(var)
        return f"({self.num.render(var)})/({self.den.render(var)})"

    def __repr__(self):
        return self.render()


class FunctionField:
    """Descriptor for K(t); elements are RationalFunction over K."""

    __slots__ = ("base", "zero", "one", "gen")

    def __init__(self, base):
        self.base = base
        self.zero = RationalFunction(Polynomial.zero(base))
        self.one = RationalFunction(Polynomial.constant(base, base.one))
        self.gen = RationalFunction(Polynomial.variable(base))

    @property
    def char(self):
        return self.base.char

    order = None

    def coerce(self, v):
        if isinstance(v, RationalFunction):
            if v.field != self.base:
                raise ValueError("rational function over the wrong base field")
            return v
        if isinstance(v, Polynomial):
            if v.field != self.base:
                raise ValueError("polynomial over the wrong base field")
            return RationalFunction(v)
        if isinstance(v, (int, Fraction, PrimeFieldElem)):
            return RationalFunction(Polynomial.constant(self.base, self.base.coerce(v)))
        raise TypeError(f"cannot coerce {v!r} into {self!r}")

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.base == self.base

    def __hash__(self):
        return hash(("FunctionField", self.base))

    def __repr__(self):
        return f"{self.base}(t)"
