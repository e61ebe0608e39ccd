"""Long Weierstrass models over any supported field: invariants, change of
variables, the chord-tangent group law, torsion orders, short form, and the
Hasse invariant in characteristic p >= 5.

The group law is implemented directly on the long form so that number-field
and characteristic-p inputs share one code path.  Singular models may be
constructed (the reduction machinery analyses them) but group operations
reject them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import OrderBoundExceeded, SingularModelError


@dataclass(frozen=True)
class StandardInvariants:
    b2: object
    b4: object
    b6: object
    b8: object
    c4: object
    c6: object
    delta: object

    def j(self):
        if not self.delta:
            raise SingularModelError("j is undefined: discriminant vanishes")
        return self.c4**3 / self.delta


@dataclass(frozen=True)
class WeierstrassModel:
    field: object
    a1: object
    a2: object
    a3: object
    a4: object
    a6: object

    @classmethod
    def make(cls, field, a1, a2, a3, a4, a6):
        c = field.coerce
        return cls(field, c(a1), c(a2), c(a3), c(a4), c(a6))

    def invariants(self, check=True) -> StandardInvariants:
        cached = self.__dict__.get("_invariants")
        if cached is not None:
            return cached
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        c4 = b2 * b2 - 24 * b4
        c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6
        delta = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        if check:
            if 4 * b8 != b2 * b6 - b4 * b4:
                raise ArithmeticError("internal identity 4*b8 = b2*b6 - b4^2 failed")
            if self.field.char not in (2, 3) and 1728 * delta != c4**3 - c6 * c6:
                raise ArithmeticError("internal identity 1728*delta = c4^3 - c6^2 failed")
            inv = StandardInvariants(b2, b4, b6, b8, c4, c6, delta)
            object.__setattr__(self, "_invariants", inv)
            return inv
        return StandardInvariants(b2, b4, b6, b8, c4, c6, delta)

    def discriminant(self):
        return self.invariants().delta

    def is_singular(self):
        return not self.discriminant()

    def equation_value(self, x, y):
        """LHS - RHS of the curve equation at (x, y)."""
        return (
            y * y + self.a1 * x * y + self.a3 * y
            - (x**3 + self.a2 * x * x + self.a4 * x + self.a6)
        )

    def __repr__(self):
        return (
            f"y^2 + ({self.a1})xy + ({self.a3})y = "
            f"x^3 + ({self.a2})x^2 + ({self.a4})x + ({self.a6})"
        )


IDENTITY_TRANSFORM = (1, 0, 0, 0)


def transform(model: WeierstrassModel, u, r=0, s=0, t=0) -> WeierstrassModel:
    """Standard (u, r, s, t) change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
    f = model.field
    u, r, s, t = f.coerce(u), f.coerce(r), f.coerce(s), f.coerce(t)
    if not u:
        raise ValueError("transform needs u != 0")
    a1, a2, a3, a4, a6 = model.a1, model.a2, model.a3, model.a4, model.a6
    u2 = u * u
    u3 = u2 * u
    b1 = (a1 + 2 * s) / u
    b2 = (a2 - s * a1 + 3 * r - s * s) / u2
    b3 = (a3 + r * a1 + 2 * t) / u3
    b4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / (u2 * u2)
    b6 = (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) / (u3 * u3)
    return WeierstrassModel(f, b1, b2, b3, b4, b6)


def compose_transforms(first, second):
    """Parameters of applying ``first`` then ``second``."""
    u1, r1, s1, t1 = first
    u2, r2, s2, t2 = second
    return (
        u1 * u2,
        u1 * u1 * r2 + r1,
        u1 * s2 + s1,
        u1**3 * t2 + u1 * u1 * s1 * r2 + t1,
    )


class CurvePoint:
    """Affine point or the point at infinity (x = y = None)."""

    __slots__ = ("x", "y")

    def __init__(self, x=None, y=None):
        self.x = x
        self.y = y

    @property
    def is_infinity(self):
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash(("point", None if self.is_infinity else (self.x, self.y)))

    def __repr__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY_POINT = CurvePoint()


def on_curve(model: WeierstrassModel, point: CurvePoint) -> bool:
    if point.is_infinity:
        return True
    return not model.equation_value(point.x, point.y)


def _require_point(model, point):
    if not on_curve(model, point):
        raise ValueError(f"point {point} is not on the curve")


def group_neg(model: WeierstrassModel, point: CurvePoint) -> CurvePoint:
    _require_point(model, point)
    if point.is_infinity:
        return point
    return CurvePoint(point.x, -point.y - model.a1 * point.x - model.a3)


def group_add(model: WeierstrassModel, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    if model.is_singular():
        raise SingularModelError("group law on a singular model")
    _require_point(model, P)
    _require_point(model, Q)
    return _add_unchecked(model, P, Q)


def _add_unchecked(model, P, Q):
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3, a4, a6 = model.a1, model.a2, model.a3, model.a4, model.a6
    x1, y1 = P.x, P.y
    x2, y2 = Q.x, Q.y
    if x1 == x2:
        if y2 == -y1 - a1 * x1 - a3:
            return INFINITY_POINT
        # doubling
        den = 2 * y1 + a1 * x1 + a3
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
        nu = (-(x1**3) + a4 * x1 + 2 * a6 - a3 * y1) / den
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return CurvePoint(x3, y3)


def scalar_mul(model: WeierstrassModel, n: int, P: CurvePoint) -> CurvePoint:
    if model.is_singular():
        raise SingularModelError("group law on a singular model")
    _require_point(model, P)
    if n < 0:
        return scalar_mul(model, -n, group_neg(model, P))
    R = INFINITY_POINT
    Q = P
    while n:
        if n & 1:
            R = _add_unchecked(model, R, Q)
        Q = _add_unchecked(model, Q, Q)
        n >>= 1
    return R


def point_order(model: WeierstrassModel, P: CurvePoint, bound: int = 200) -> int:
    """Least n >= 1 with n*P = O, by repeated addition; errors past the bound."""
    if model.is_singular():
        raise SingularModelError("group law on a singular model")
    _require_point(model, P)
    if P.is_infinity:
        return 1
    R = P
    n = 1
    while not R.is_infinity:
        R = _add_unchecked(model, R, P)
        n += 1
        if n > bound:
            raise OrderBoundExceeded(f"order exceeds bound {bound}")
    return n


def to_short_form(model: WeierstrassModel):
    """y^2 = x^3 + Ax + B with A = -27 c4, B = -54 c6; char not in {2, 3}.

    Returns (short model, transform parameters); applying the parameters to
    the input reproduces the short model coefficient-exactly, and the
    discriminant picks up the factor 6^12.
    """
    f = model.field
    if f.char in (2, 3):
        raise ValueError("short form needs characteristic away from 2 and 3")
    inv = model.invariants()
    half = f.coerce(Fraction(1, 2)) if f.char == 0 else f.coerce(1) / f.coerce(2)
    t1 = (f.coerce(1), f.coerce(0), -model.a1 * half, -model.a3 * half)
    w1 = transform(model, *t1)
    twelfth = f.coerce(1) / f.coerce(12)
    t2 = (f.coerce(1), -inv.b2 * twelfth, f.coerce(0), f.coerce(0))
    w2 = transform(w1, *t2)
    t3 = (f.coerce(1) / f.coerce(6), f.coerce(0), f.coerce(0), f.coerce(0))
    w3 = transform(w2, *t3)
    assert not w3.a1 and not w3.a2 and not w3.a3
    assert w3.a4 == -27 * inv.c4 and w3.a6 == -54 * inv.c6
    return w3, compose_transforms(compose_transforms(t1, t2), t3)


def hasse_invariant(model: WeierstrassModel, p=None):
    """Coefficient of x^(p-1) in (x^3 + Ax + B)^((p-1)/2) for a short-form model.

    Computed by the multinomial expansion of the single relevant diagonal;
    zero exactly for supersingular reduction.
    """
    f = model.field
    if p is None:
        p = f.char
    if p < 5:
        raise ValueError("Hasse invariant needs characteristic >= 5")
    if f.char != p:
        raise ValueError("model is not over a field of characteristic p")
    if model.a1 or model.a2 or model.a3:
        raise ValueError("model must be in short form y^2 = x^3 + Ax + B")
    A, B = model.a4, model.a6
    m = (p - 1) // 2
    total = f.zero
    # terms x^(3i) * (Ax)^j * B^k with i+j+k = m and 3i+j = p-1 = 2m
    for i in range((m + 1) // 2, 2 * m // 3 + 1):
        j = 2 * m - 3 * i
        k = 2 * i - m
        coeff = comb(m, i) * comb(m - i, j)
        total = total + f.coerce(coeff) * A**j * B**k
    return total
