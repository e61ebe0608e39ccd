"""Dense univariate polynomials over an arbitrary coefficient field.

Includes Euclidean arithmetic, gcd / extended gcd, modular exponentiation,
and full factorization over prime fields through the classical pipeline:
squarefree decomposition, then distinct-degree splitting, then randomized
(Cantor-Zassenhaus) equal-degree splitting.  The randomized stage draws from
an explicit seed so every factorization is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fields import GF, PrimeField, PrimeFieldElem


class Polynomial:
    """Coefficients stored densely, lowest degree first; no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1] == field.zero:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _from_residues(cls, field, values):
        # fast constructor for prime fields: values already reduced mod p
        while values and values[-1] == 0:
            values.pop()
        obj = cls.__new__(cls)
        obj.field = field
        p = field.p
        obj.coeffs = tuple(PrimeFieldElem(p, v) for v in values)
        return obj

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def variable(cls, field):
        return cls(field, (0, 1))

    @property
    def degree(self):
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return not self.is_zero and self.lead == self.field.one

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        try:
            return Polynomial.constant(self.field, other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        if isinstance(self.field, PrimeField):
            p = self.field.p
            a = [c.value for c in self.coeffs]
            b = [c.value for c in o.coeffs]
            a += [0] * (n - len(a))
            for i, v in enumerate(b):
                a[i] = (a[i] + v) % p
            return Polynomial._from_residues(self.field, a)
        return Polynomial(self.field, [self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        if isinstance(self.field, PrimeField):
            p = self.field.p
            a = [c.value for c in self.coeffs]
            b = [c.value for c in o.coeffs]
            a += [0] * (n - len(a))
            for i, v in enumerate(b):
                a[i] = (a[i] - v) % p
            return Polynomial._from_residues(self.field, a)
        return Polynomial(self.field, [self[i] - o[i] for i in range(n)])

    def __rsub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            o = self._coerce_other(other)
            if o is None:
                return NotImplemented
            other = o
        elif other.field != self.field:
            raise ValueError("polynomials over different fields")
        if self.is_zero or other.is_zero:
            return Polynomial.zero(self.field)
        if isinstance(self.field, PrimeField):
            p = self.field.p
            a = [c.value for c in self.coeffs]
            b = [c.value for c in other.coeffs]
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] += ai * bj
            return Polynomial._from_residues(self.field, [v % p for v in out])
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.field, self.field.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other):
        """Euclidean division; raises on a zero divisor."""
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.field, other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if other.field != self.field:
            raise ValueError("polynomials over different fields")
        if self.degree < other.degree:
            return Polynomial.zero(self.field), self
        if isinstance(self.field, PrimeField):
            p = self.field.p
            rem = [c.value for c in self.coeffs]
            dvs = [c.value for c in other.coeffs]
            dn = len(dvs) - 1
            inv_lead = pow(dvs[-1], -1, p)
            q = [0] * (len(rem) - dn)
            for shift in range(len(q) - 1, -1, -1):
                c = rem[shift + dn] % p
                if c:
                    factor = c * inv_lead % p
                    q[shift] = factor
                    for j, b in enumerate(dvs):
                        rem[shift + j] -= factor * b
            return (
                Polynomial._from_residues(self.field, q),
                Polynomial._from_residues(self.field, [v % p for v in rem[:dn]]),
            )
        zero = self.field.zero
        rem = list(self.coeffs)
        q = [zero] * (len(rem) - len(other.coeffs) + 1)
        inv_lead = self.field.one / other.lead
        for shift in range(len(q) - 1, -1, -1):
            c = rem[shift + other.degree]
            if c == zero:
                continue
            factor = c * inv_lead
            q[shift] = factor
            for j, b in enumerate(other.coeffs):
                rem[shift + j] = rem[shift + j] - factor * b
        return Polynomial(self.field, q), Polynomial(self.field, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __divmod__(self, other):
        return self.divmod(other)

    def monic(self):
        if self.is_zero:
            return self
        if self.is_monic:
            return self
        inv = self.field.one / self.lead
        return Polynomial(self.field, [c * inv for c in self.coeffs])

    def derivative(self):
        return Polynomial(self.field, [i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        """Horner evaluation; x may live in an extension of the coefficient field."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return self.field.zero if acc is None else acc

    def compose(self, inner):
        """self(inner(t)) for a polynomial ``inner`` over the same field."""
        result = Polynomial.zero(self.field)
        for c in reversed(self.coeffs):
            result = result * inner + Polynomial.constant(self.field, c)
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if self.degree <= 0:
            o = self._coerce_other(other)
            if o is None:
                return NotImplemented
            return self.coeffs == o.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return not self.is_zero

    def render(self, var="t"):
        """Canonical human-readable form, parseable by the CLI literal grammar."""
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == self.field.zero:
                continue
            cs = _coeff_str(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            if i == 0:
                term = mag
            else:
                xp = var if i == 1 else f"{var}^{i}"
                term = xp if mag == "1" else f"{mag}*{xp}"
            if not parts:
                parts.append(("-" if neg else "") + term)
            else:
                parts.append(("-" if neg else "+") + term)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self.render()!r} over {self.field!r})"


def _coeff_str(c):
    if isinstance(c, PrimeFieldElem):
        return str(c.value)
    return str(c)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; errors when both inputs vanish."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_ext_gcd(a, b):
    """(g, u, v) with u*a + v*b = g, g monic."""
    field = a.field
    one = Polynomial.constant(field, field.one)
    zero = Polynomial.zero(field)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    inv = field.one / r0.lead
    return r0.monic(), s0 * inv, t0 * inv


def pow_mod(base: Polynomial, exp: int, mod: Polynomial) -> Polynomial:
    if exp < 0:
        raise ValueError("negative exponent")
    result = Polynomial.constant(base.field, base.field.one) % mod
    base = base % mod
    while exp:
        if exp & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        exp >>= 1
    return result


def multiplicity(f: Polynomial, g: Polynomial) -> int:
    """Largest e with g^e | f (f nonzero, deg g >= 1)."""
    if f.is_zero:
        raise ValueError("multiplicity in the zero polynomial is infinite")
    e = 0
    while True:
        q, r = f.divmod(g)
        if not r.is_zero:
            return e
        f = q
        e += 1


# ---------------------------------------------------------------------------
# Factorization over prime fields.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    unit: PrimeFieldElem
    factors: tuple  # ((monic irreducible Polynomial, exponent), ...)

    def expand(self) -> Polynomial:
        field = GF(self.unit.p)
        out = Polynomial.constant(field, self.unit)
        for g, e in self.factors:
            out = out * g**e
        return out


def _require_prime_field(f):
    if not isinstance(f.field, PrimeField):
        raise TypeError("factorization is implemented over prime fields only")


def _pth_root(f: Polynomial) -> Polynomial:
    # Coefficients of F_p are fixed by Frobenius, so a p-th root just
    # contracts exponents.
    p = f.field.p
    return Polynomial(f.field, [f[i] for i in range(0, f.degree + 1, p)])


def squarefree_decomposition(f: Polynomial):
    """Monic input; yields (g_i, e_i) pairwise-coprime monic squarefree parts."""
    _require_prime_field(f)
    p = f.field.p
    out = []

    def recurse(g, mult):
        if g.degree < 1:
            return
        d = g.derivative()
        if d.is_zero:
            recurse(_pth_root(g), mult * p)
            return
        c = poly_gcd(g, d)
        w = g // c
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, c)
            z = w // y
            if z.degree > 0:
                out.append((z, i * mult))
            w, c = y, c // y
            i += 1
        if c.degree > 0:
            recurse(_pth_root(c), mult * p)

    recurse(f.monic(), 1)
    return out


def distinct_degree_factorization(f: Polynomial):
    """Monic squarefree input; returns [(product of irreducibles of degree d, d)]."""
    _require_prime_field(f)
    p = f.field.p
    x = Polynomial.variable(f.field)
    out = []
    h = x % f
    d = 1
    while 2 * d <= f.degree:
        h = pow_mod(h, p, f)
        g = poly_gcd(f, h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
        d += 1
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def equal_degree_split(f: Polynomial, d: int, rng: random.Random):
    """Cantor-Zassenhaus for odd p: f monic squarefree, all factors of degree d."""
    if f.degree == d:
        return [f]
    p = f.field.p
    exp = (p**d - 1) // 2
    while True:
        r = Polynomial(f.field, [rng.randrange(p) for _ in range(f.degree)])
        if r.degree < 1:
            continue
        g = poly_gcd(f, r)
        if not (0 < g.degree < f.degree):
            h = pow_mod(r, exp, f) - 1
            if h.is_zero:
                continue
            g = poly_gcd(f, h)
            if not (0 < g.degree < f.degree):
                continue
        return equal_degree_split(g, d, rng) + equal_degree_split(f // g, d, rng)


def _factor_key(g: Polynomial):
    return (g.degree, tuple(c.value for c in g.coeffs))


def factor(f: Polynomial, seed: int = 0) -> Factorization:
    """Factor a nonzero polynomial over F_p into monic irreducibles.

    The output is canonical: factors sorted by (degree, coefficients), so
    equal inputs give byte-identical results regardless of the seed.
    """
    _require_prime_field(f)
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.field.p == 2:
        raise NotImplementedError("p = 2 is outside the supported range")
    unit = f.lead
    rng = random.Random(seed)
    found = []
    for sqf, e in squarefree_decomposition(f):
        for prod, d in distinct_degree_factorization(sqf):
            for irr in equal_degree_split(prod, d, rng):
                found.append((irr, e))
    found.sort(key=lambda t: _factor_key(t[0]))
    return Factorization(unit, tuple(found))


def is_irreducible(f: Polynomial) -> bool:
    """Distinct-degree screen: x^(p^n) = x mod f and no factor of proper degree."""
    _require_prime_field(f)
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    p = f.field.p
    x = Polynomial.variable(f.field)
    h = x % f
    powers = {}
    for i in range(1, n + 1):
        h = pow_mod(h, p, f)
        powers[i] = h
    if powers[n] != x % f:
        return False
    for q in _prime_divisors(n):
        if poly_gcd(f, powers[n // q] - x).degree > 0:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Root finding over finite residue fields (prime or extension).
# ---------------------------------------------------------------------------


def _elem_sort_key(x):
    if isinstance(x, PrimeFieldElem):
        return (0, (x.value,))
    rep = getattr(x, "rep", None)
    if rep is not None:
        return (1, tuple(c.value for c in rep.coeffs))
    return (2, (str(x),))


def linear_factor_product(f: Polynomial) -> Polynomial:
    """gcd(x^q - x, f): the product of the distinct roots' linear factors."""
    q = f.field.order
    if q is None:
        raise TypeError("needs a finite coefficient field")
    x = Polynomial.variable(f.field)
    return poly_gcd(pow_mod(x, q, f) - x, f)


def count_roots(f: Polynomial) -> int:
    return linear_factor_product(f).degree


def distinct_roots(f: Polynomial, seed: int = 0):
    """All roots of f in its (finite) coefficient field, canonically sorted."""
    field = f.field
    q = field.order
    g = linear_factor_product(f)
    rng = random.Random(seed)
    roots = []

    def split(h):
        if h.degree <= 0:
            return
        if h.degree == 1:
            roots.append(-h[0] / h[1])
            return
        # peel off a possible root at 0, then randomized quadratic-residue split
        if h[0] == field.zero:
            roots.append(field.zero)
            split(h // Polynomial.variable(field))
            return
        while True:
            c = field.random_element(rng)
            shifted = h.compose(Polynomial(field, [c, field.one]))
            w = pow_mod(Polynomial.variable(field), (q - 1) // 2, shifted) - 1
            if w.is_zero:
                continue
            d = poly_gcd(shifted, w)
            if 0 < d.degree < h.degree:
                db = d.compose(Polynomial(field, [-c, field.one])).monic()
                split(db)
                split((h // db).monic())
                return

    split(g.monic())
    roots.sort(key=_elem_sort_key)
    return roots


def is_square(z, field) -> bool:
    """Euler criterion in a finite field of odd order."""
    q = field.order
    if q is None or q % 2 == 0:
        raise TypeError("needs a finite field of odd order")
    if z == field.zero:
        return True
    return z ** ((q - 1) // 2) == field.one
