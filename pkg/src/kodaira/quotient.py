"""Quotient fields K[t]/(m) for a monic modulus m, used in two roles:

* number fields Q[t]/(m) housing the torsion fixtures, and
* residue field extensions F_p[t]/(pi) at places of F_p(t) of degree > 1.

Irreducibility of the modulus is a contract with the caller.  Construction
runs a cheap screen: full factorization over a prime field, and a rational
root scan over Q for degree <= 4.  An extended-Euclid inversion that meets a
nontrivial gcd also betrays a reducible modulus and is rejected.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .fields import PrimeField, PrimeFieldElem, RationalField
from .poly import Polynomial, is_irreducible, poly_ext_gcd


def _rational_roots(m: Polynomial):
    # rational root theorem on the cleared-integer form of m
    denlcm = 1
    for c in m.coeffs:
        denlcm = denlcm * c.denominator // int_gcd(denlcm, c.denominator)
    ints = [int(c * denlcm) for c in m.coeffs]
    a0, an = ints[0], ints[-1]
    if a0 == 0:
        return [Fraction(0)]
    roots = []
    for p in _divisors(abs(a0)):
        for q in _divisors(abs(an)):
            for sgn in (1, -1):
                cand = Fraction(sgn * p, q)
                if m.evaluate(cand) == 0:
                    roots.append(cand)
    return roots


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


class QuotientField:
    """K[t]/(m) with m monic of degree >= 1, irreducible by contract."""

    __slots__ = ("base", "modulus", "zero", "one", "gen")

    def __init__(self, base, modulus: Polynomial, check=True):
        if modulus.field != base:
            raise ValueError("modulus over the wrong base field")
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if not modulus.is_monic:
            raise ValueError("modulus must be monic")
        if check:
            if isinstance(base, PrimeField):
                if not is_irreducible(modulus):
                    raise ValueError(f"{modulus.render()} is reducible over {base}")
            elif isinstance(base, RationalField) and modulus.degree <= 4:
                if _rational_roots(modulus):
                    raise ValueError(f"{modulus.render()} has a rational root")
        self.base = base
        self.modulus = modulus
        self.zero = QuotientFieldElem(self, Polynomial.zero(base))
        self.one = QuotientFieldElem(self, Polynomial.constant(base, base.one))
        self.gen = QuotientFieldElem(self, Polynomial.variable(base) % modulus)

    @property
    def char(self):
        return self.base.char

    @property
    def degree(self):
        return self.modulus.degree

    @property
    def order(self):
        if self.base.order is None:
            return None
        return self.base.order**self.modulus.degree

    def coerce(self, v):
        if isinstance(v, QuotientFieldElem):
            if v.field != self:
                raise ValueError("element of a different quotient field")
            return v
        if isinstance(v, Polynomial):
            if v.field != self.base:
                raise ValueError("polynomial over the wrong base field")
            return QuotientFieldElem(self, v % self.modulus)
        base_val = self.base.coerce(v)
        return QuotientFieldElem(self, Polynomial.constant(self.base, base_val))

    def random_element(self, rng):
        if not isinstance(self.base, PrimeField):
            raise TypeError("random elements only for finite quotient fields")
        p = self.base.p
        coeffs = [rng.randrange(p) for _ in range(self.degree)]
        return QuotientFieldElem(self, Polynomial(self.base, coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, QuotientField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("QuotientField", self.base, self.modulus))

    def __repr__(self):
        return f"{self.base}[t]/({self.modulus.render()})"


class QuotientFieldElem:
    __slots__ = ("field", "rep")

    def __init__(self, field: QuotientField, rep: Polynomial):
        self.field = field
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, QuotientFieldElem):
            if other.field != self.field:
                raise ValueError("elements of different quotient fields")
            return other
        if isinstance(other, (int, Fraction, PrimeFieldElem, Polynomial)):
            try:
                return self.field.coerce(other)
            except (TypeError, ValueError):
                return None
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuotientFieldElem(self.field, self.rep + o.rep)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuotientFieldElem(self.field, self.rep - o.rep)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuotientFieldElem(self.field, (self.rep * o.rep) % self.field.modulus)

    __rmul__ = __mul__

    def inverse(self):
        """Extended-Euclid inverse; a nontrivial gcd means a reducible modulus."""
        if self.rep.is_zero:
            raise ZeroDivisionError("inverse of zero")
        g, u, _ = poly_ext_gcd(self.rep, self.field.modulus)
        if g.degree != 0:
            raise ValueError(
                f"gcd({self.rep.render()}, modulus) = {g.render()}: modulus is reducible"
            )
        return QuotientFieldElem(self.field, u % self.field.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __neg__(self):
        return QuotientFieldElem(self.field, -self.rep)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.rep == o.rep

    def __hash__(self):
        return hash((self.field, self.rep))

    def __bool__(self):
        return not self.rep.is_zero

    def __repr__(self):
        return self.rep.render() if not self.rep.is_zero else "0"
