"""Non-archimedean places of Q and F_p(t) with their local data.

A ``Place`` is either a rational prime, a monic irreducible polynomial over
F_p (a finite place of F_p(t)), or the degree place at infinity of F_p(t).
The normalized valuation is surjective onto Z.  A ``LocalContext`` bundles a
place with its uniformizer, residue field, and reduction/lifting maps; this
is the only interface the reduction algorithms see, so the same code runs
over Q, over F_p(t), and over truncated p-adic input (see ``padic``).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .fields import GF, PrimeField, RationalField, is_prime
from .poly import Polynomial, is_irreducible, multiplicity
from .quotient import QuotientField, QuotientFieldElem
from .ratfunc import FunctionField, RationalFunction

INF = math.inf


class Place:
    """One non-archimedean place.  Frozen and hashable."""

    __slots__ = ("kind", "prime", "poly")

    def __init__(self, kind, prime=None, poly=None):
        self.kind = kind  # "q" | "finite" | "infinite"
        self.prime = prime
        self.poly = poly

    @staticmethod
    def rational_prime(p: int) -> "Place":
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return Place("q", prime=p)

    @staticmethod
    def finite(poly: Polynomial, check=True) -> "Place":
        if not isinstance(poly.field, PrimeField):
            raise TypeError("finite places need a monic irreducible over a prime field")
        if not poly.is_monic:
            raise ValueError("finite place polynomial must be monic")
        if check and not is_irreducible(poly):
            raise ValueError(f"{poly.render()} is reducible")
        return Place("finite", prime=poly.field.p, poly=poly)

    @staticmethod
    def infinite(p: int) -> "Place":
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return Place("infinite", prime=p)

    @property
    def degree(self) -> int:
        if self.kind == "finite":
            return self.poly.degree
        return 1

    @property
    def residue_char(self) -> int:
        return self.prime

    def render(self) -> str:
        if self.kind == "q":
            return str(self.prime)
        if self.kind == "finite":
            return self.poly.render()
        return "inf"

    def __eq__(self, other):
        return (
            isinstance(other, Place)
            and self.kind == other.kind
            and self.prime == other.prime
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.kind, self.prime, self.poly))

    def __repr__(self):
        return f"Place({self.render()})"


def int_valuation(n: int, p: int):
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def fraction_valuation(x: Fraction, p: int):
    if x == 0:
        return INF
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


class LocalContext:
    """Common interface: valuation / residue / lift at one place."""

    place: Place
    field: object  # ambient field descriptor
    residue_field: object
    uniformizer: object

    @property
    def residue_char(self):
        return self.place.residue_char

    def valuation(self, x, margin=None):
        raise NotImplementedError

    def residue(self, x):
        raise NotImplementedError

    def lift(self, xbar):
        raise NotImplementedError


class RationalPrimeContext(LocalContext):
    def __init__(self, place: Place):
        assert place.kind == "q"
        self.place = place
        self.field = RationalField()
        self.residue_field = GF(place.prime)
        self.uniformizer = Fraction(place.prime)

    def valuation(self, x, margin=None):
        return fraction_valuation(Fraction(x), self.place.prime)

    def residue(self, x):
        x = Fraction(x)
        p = self.place.prime
        if x.denominator % p == 0:
            raise ValueError(f"{x} is not integral at {p}")
        return self.residue_field.coerce(x)

    def lift(self, xbar):
        return Fraction(xbar.value)


class FunctionFieldContext(LocalContext):
    """A finite place (pi) of F_p(t); residue field F_p[t]/(pi) (or F_p for deg 1)."""

    def __init__(self, place: Place):
        assert place.kind == "finite"
        self.place = place
        base = GF(place.prime)
        self.field = FunctionField(base)
        self.base = base
        if place.degree == 1:
            self.residue_field = base
            self._root = -place.poly[0]  # pi = t - root
        else:
            self.residue_field = QuotientField(base, place.poly, check=False)
            self._root = None
        self.uniformizer = RationalFunction(place.poly)

    def valuation(self, x, margin=None):
        x = self.field.coerce(x)
        if x.is_zero:
            return INF
        pi = self.place.poly
        return multiplicity(x.num, pi) - multiplicity(x.den, pi)

    def residue(self, x):
        x = self.field.coerce(x)
        v = self.valuation(x)
        if v < 0:
            raise ValueError(f"{x} is not integral at {self.place.render()}")
        if v > 0:
            return self.residue_field.zero
        if self._root is not None:
            return x.num.evaluate(self._root) / x.den.evaluate(self._root)
        k = self.residue_field
        return k.coerce(x.num) / k.coerce(x.den)

    def lift(self, xbar):
        if self._root is not None:
            return self.field.coerce(xbar)
        assert isinstance(xbar, QuotientFieldElem)
        return RationalFunction(xbar.rep)


class InfinitePlaceContext(LocalContext):
    """The degree place of F_p(t): uniformizer 1/t, residue = leading-coeff ratio."""

    def __init__(self, place: Place):
        assert place.kind == "infinite"
        self.place = place
        base = GF(place.prime)
        self.field = FunctionField(base)
        self.residue_field = base
        one = Polynomial.constant(base, base.one)
        self.uniformizer = RationalFunction(one, Polynomial.variable(base))

    def valuation(self, x, margin=None):
        x = self.field.coerce(x)
        if x.is_zero:
            return INF
        return x.degree_drop_at_infinity()

    def residue(self, x):
        x = self.field.coerce(x)
        v = self.valuation(x)
        if v < 0:
            raise ValueError(f"{x} is not integral at infinity")
        if v > 0:
            return self.residue_field.zero
        return x.num.lead / x.den.lead

    def lift(self, xbar):
        return self.field.coerce(xbar)


@lru_cache(maxsize=None)
def _cached_context(place: Place) -> LocalContext:
    if place.kind == "q":
        return RationalPrimeContext(place)
    if place.kind == "finite":
        return FunctionFieldContext(place)
    return InfinitePlaceContext(place)


def local_context(field, place: Place) -> LocalContext:
    """Resolve the context for a place of the given ambient field."""
    from .padic import PadicContext, PadicField

    if isinstance(field, PadicField):
        if place.kind != "q" or place.prime != field.p:
            raise ValueError("a truncated p-adic field only has its own prime place")
        return PadicContext(field, place)
    ctx = _cached_context(place)
    if ctx.field != field:
        raise ValueError(f"place {place.render()} does not belong to {field!r}")
    return ctx


def valuation(x, place: Place, field=None):
    """Normalized valuation of a field element at a place; v(0) = +inf."""
    if field is None:
        field = _infer_field(x, place)
    return local_context(field, place).valuation(x)


def residue(x, place: Place, field=None):
    """Image of an integral element in the residue field of the place."""
    if field is None:
        field = _infer_field(x, place)
    return local_context(field, place).residue(x)


def _infer_field(x, place: Place):
    if place.kind == "q":
        if not isinstance(x, (int, Fraction)):
            from .padic import PadicField, PadicNumber

            if isinstance(x, PadicNumber):
                return PadicField(x.p)
            raise TypeError(f"{x!r} is not a rational number")
        return RationalField()
    if not isinstance(x, (RationalFunction, Polynomial)):
        raise TypeError(f"{x!r} is not an element of F_{place.prime}(t)")
    return FunctionField(GF(place.prime))


def all_places_of_fraction(x: RationalFunction, seed: int = 0):
    """Every place of F_p(t) where x has nonzero valuation, with the valuation.

    Used by the product-formula checks: sum of deg(v) * v(x) vanishes.
    """
    from .poly import factor

    if x.is_zero:
        raise ZeroDivisionError("zero has no divisor")
    out = []
    for polypart, sign in ((x.num, 1), (x.den, -1)):
        if polypart.degree < 1:
            continue
        for g, e in factor(polypart, seed=seed).factors:
            out.append((Place.finite(g, check=False), sign * e))
    vinf = x.degree_drop_at_infinity()
    if vinf != 0:
        out.append((Place.infinite(x.field.p), vinf))
    return out
