"""Base coefficient fields: the rationals and prime fields F_p.

Elements of Q are plain ``fractions.Fraction`` values (always stored in
lowest terms with a positive denominator, which is exactly the canonical
form the rest of the package relies on).  Prime field elements are thin
wrappers around a reduced integer.  Every field is described by a small
descriptor object exposing ``zero``, ``one``, ``char``, ``order`` and
``coerce``; generic code (polynomials, curves, Tate's algorithm) only ever
talks to elements through arithmetic operators and to fields through the
descriptor protocol.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every 64-bit (and then some) input."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """Descriptor for Q; elements are ``Fraction`` instances."""

    char = 0
    order = None
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise TypeError(f"cannot coerce {v!r} into Q")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "Q"


QQ = RationalField()


class PrimeFieldElem:
    """A residue in F_p."""

    __slots__ = ("p", "value")

    def __init__(self, p, value):
        self.p = p
        self.value = value % p

    def _rhs(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise ValueError(f"mixed prime fields F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._rhs(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.p, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._rhs(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.p, self.value - v)

    def __rsub__(self, other):
        v = self._rhs(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.p, v - self.value)

    def __mul__(self, other):
        v = self._rhs(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.p, self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._rhs(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.p, self.value * pow(v, -1, self.p))

    def __rtruediv__(self, other):
        v = self._rhs(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.p, v * pow(self.value, -1, self.p))

    def __pow__(self, n):
        if n < 0:
            return PrimeFieldElem(self.p, pow(pow(self.value, -1, self.p), -n, self.p))
        return PrimeFieldElem(self.p, pow(self.value, n, self.p))

    def __neg__(self):
        return PrimeFieldElem(self.p, -self.value)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


class PrimeField:
    """Descriptor for F_p, p prime."""

    __slots__ = ("p", "zero", "one")

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = PrimeFieldElem(p, 0)
        self.one = PrimeFieldElem(p, 1)

    @property
    def char(self):
        return self.p

    @property
    def order(self):
        return self.p

    def coerce(self, v):
        if isinstance(v, PrimeFieldElem):
            if v.p != self.p:
                raise ValueError(f"element of F_{v.p} given to F_{self.p}")
            return v
        if isinstance(v, int):
            return PrimeFieldElem(self.p, v)
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise ZeroDivisionError(f"{v} has no image in F_{self.p}")
            num = v.numerator % self.p
            return PrimeFieldElem(self.p, num * pow(v.denominator % self.p, -1, self.p))
        raise TypeError(f"cannot coerce {v!r} into F_{self.p}")

    def random_element(self, rng):
        return PrimeFieldElem(self.p, rng.randrange(self.p))

    def elements(self):
        return (PrimeFieldElem(self.p, v) for v in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"F_{self.p}"


@lru_cache(maxsize=None)
def GF(p) -> PrimeField:
    return PrimeField(p)
