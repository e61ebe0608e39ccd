"""Truncated p-adic numbers with tracked precision, plus Hensel/Newton lifting.

A nonzero value is p^val * unit with the unit known modulo p^relprec, so the
value is known modulo p^(val + relprec).  Cancellation in sums can push the
value below the known digits; that state is kept explicitly ("O(p^A)") and
any valuation question asked of it raises ``InsufficientPrecision`` instead
of guessing.  Exact zeros (from exactly-zero model coefficients) are a
separate state with valuation +inf.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InsufficientPrecision
from .fields import GF, PrimeFieldElem, is_prime
from .places import LocalContext, Place, fraction_valuation, int_valuation
from .poly import Polynomial

INF = math.inf


class PadicNumber:
    __slots__ = ("p", "val", "unit", "relprec")

    def __init__(self, p, val, unit, relprec):
        self.p = p
        if val is INF:
            self.val, self.unit, self.relprec = INF, 0, 0
            return
        if relprec <= 0:
            # nothing known beyond p^(val + relprec)
            self.val, self.unit, self.relprec = val + relprec, 0, 0
            return
        u = unit % p**relprec
        if u == 0:
            self.val, self.unit, self.relprec = val + relprec, 0, 0
            return
        shift = 0
        while u % p == 0:
            u //= p
            shift += 1
        self.val = val + shift
        self.relprec = relprec - shift
        self.unit = u % p**self.relprec

    # -- constructors -------------------------------------------------------

    @classmethod
    def exact_zero(cls, p):
        return cls(p, INF, 0, 0)

    @classmethod
    def from_rational(cls, p, x, absprec):
        x = Fraction(x)
        if x == 0:
            return cls.exact_zero(p)
        v = fraction_valuation(x, p)
        relprec = absprec - v
        if relprec <= 0:
            return cls(p, v, 0, relprec)
        num = x.numerator // p ** int_valuation(x.numerator, p)
        den = x.denominator // p ** int_valuation(x.denominator, p)
        mod = p**relprec
        unit = num * pow(den, -1, mod) % mod
        return cls(p, v, unit, relprec)

    # -- state ----------------------------------------------------------------

    @property
    def is_exact_zero(self):
        return self.val is INF

    @property
    def is_zeroish(self):
        """Indistinguishable from zero at the known precision (exact zero included)."""
        return self.unit == 0

    @property
    def absprec(self):
        if self.is_exact_zero:
            return INF
        return self.val + self.relprec

    def valuation(self, margin=None):
        if self.is_exact_zero:
            return INF
        if self.unit == 0:
            raise InsufficientPrecision(
                f"value is O({self.p}^{self.val}); its valuation is undecided"
            )
        if margin is not None and self.relprec < margin:
            raise InsufficientPrecision(
                f"only {self.relprec} digits beyond the valuation; need {margin}"
            )
        return self.val

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise ValueError("mixed p-adic primes")
            return other
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return PadicNumber.exact_zero(self.p)
            v = fraction_valuation(Fraction(other), self.p)
            # give the constant enough relative precision that it never
            # becomes the binding operand
            if self.is_exact_zero:
                rel = 58
            elif self.unit == 0:
                rel = max(int(self.val) - v, 0) + 5
            else:
                rel = self.relprec + 5
            return PadicNumber.from_rational(self.p, other, v + rel)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        if self.is_exact_zero:
            return o
        if o.is_exact_zero:
            return self
        a = min(self.absprec, o.absprec)
        v = min(self.val, o.val)
        rel = int(a - v)
        if rel <= 0:
            return PadicNumber(p, int(a), 0, 0)
        total = self.unit * p ** int(self.val - v) + o.unit * p ** int(o.val - v)
        return PadicNumber(p, int(v), total, rel)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zeroish:
            return self
        return PadicNumber(self.p, self.val, -self.unit % self.p**self.relprec, self.relprec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        if self.is_exact_zero or o.is_exact_zero:
            return PadicNumber.exact_zero(p)
        if self.unit == 0 or o.unit == 0:
            return PadicNumber(p, int(self.val + o.val), 0, 0)
        rel = min(self.relprec, o.relprec)
        return PadicNumber(p, self.val + o.val, self.unit * o.unit, rel)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_exact_zero:
            raise ZeroDivisionError("p-adic division by exact zero")
        if o.unit == 0:
            raise InsufficientPrecision("divisor is indistinguishable from zero")
        p = self.p
        if self.is_exact_zero:
            return self
        if self.unit == 0:
            return PadicNumber(p, int(self.val - o.val), 0, 0)
        rel = min(self.relprec, o.relprec)
        inv = pow(o.unit, -1, p**rel)
        return PadicNumber(p, self.val - o.val, self.unit * inv, rel)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if n < 0:
            return (1 / self) ** (-n)
        rel = self.relprec + 5 if self.unit != 0 else 58
        result = PadicNumber.from_rational(self.p, 1, rel)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zeroish

    def __hash__(self):
        return hash((self.p, "padic"))

    def __bool__(self):
        return not self.is_zeroish

    # -- local data -------------------------------------------------------------

    def residue(self):
        """Image in F_p; requires a nonnegative, decided valuation."""
        k = GF(self.p)
        if self.is_exact_zero:
            return k.zero
        if self.unit == 0:
            if self.val >= 1:
                return k.zero
            raise InsufficientPrecision("no digits available for a residue")
        if self.val < 0:
            raise ValueError("negative valuation: not integral")
        if self.val > 0:
            return k.zero
        return PrimeFieldElem(self.p, self.unit)

    def sqrt(self):
        """Square root by Newton refinement of a Tonelli-Shanks residue root."""
        if self.is_exact_zero:
            return self
        if self.unit == 0:
            raise InsufficientPrecision("cannot take sqrt of an undecided value")
        if self.p == 2:
            raise NotImplementedError("p = 2 square roots unsupported")
        if self.val % 2 != 0:
            raise ValueError("odd valuation: no square root in Q_p")
        r0 = _sqrt_mod_prime(self.unit % self.p, self.p)
        if r0 is None:
            raise ValueError("unit part is a quadratic non-residue")
        w = r0
        known = 1
        while known < self.relprec:
            known = min(2 * known, self.relprec)
            m = self.p**known
            w = (w - (w * w - self.unit) * pow(2 * w, -1, m)) % m
        return PadicNumber(self.p, self.val // 2, w, self.relprec)

    def __repr__(self):
        if self.is_exact_zero:
            return f"0 (exact, {self.p}-adic)"
        if self.unit == 0:
            return f"O({self.p}^{self.val})"
        return f"{self.p}^{self.val}*({self.unit} + O({self.p}^{self.relprec}))"


def _sqrt_mod_prime(a, p):
    """Tonelli-Shanks; None for non-residues."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) == 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


class PadicField:
    """Descriptor for Q_p truncated at a default working precision."""

    __slots__ = ("p", "precision", "zero", "one")

    char = 0
    order = None

    def __init__(self, p, precision=53):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.precision = precision
        self.zero = PadicNumber.exact_zero(p)
        self.one = PadicNumber.from_rational(p, 1, precision)

    @property
    def residue_char(self):
        return self.p

    def coerce(self, v):
        if isinstance(v, PadicNumber):
            if v.p != self.p:
                raise ValueError("mixed p-adic primes")
            return v
        if isinstance(v, (int, Fraction)):
            if v == 0:
                return self.zero
            vv = fraction_valuation(Fraction(v), self.p)
            return PadicNumber.from_rational(self.p, v, self.precision + max(0, vv))
        raise TypeError(f"cannot coerce {v!r} into Q_{self.p}")

    def __eq__(self, other):
        return (
            isinstance(other, PadicField)
            and other.p == self.p
            and other.precision == self.precision
        )

    def __hash__(self):
        return hash(("PadicField", self.p, self.precision))

    def __repr__(self):
        return f"Q_{self.p}(prec {self.precision})"


class PadicContext(LocalContext):
    """The prime place of a truncated Q_p; valuation decisions require a margin."""

    MARGIN = 5

    def __init__(self, field: PadicField, place: Place):
        self.place = place
        self.field = field
        self.residue_field = GF(field.p)
        self.uniformizer = PadicNumber.from_rational(field.p, field.p, field.precision + 1)

    def valuation(self, x, margin=None):
        x = self.field.coerce(x)
        return x.valuation(margin=self.MARGIN if margin is None else margin)

    def residue(self, x):
        return self.field.coerce(x).residue()

    def lift(self, xbar):
        return PadicNumber.from_rational(self.field.p, xbar.value, self.field.precision)


# ---------------------------------------------------------------------------
# Hensel lifting of a simple root.
# ---------------------------------------------------------------------------


def scaled_reduction(g: Polynomial, p: int, shift: int):
    """Reduction mod p of g(p^shift * y) after clearing the minimal valuation.

    Returns (polynomial over F_p, mu) where mu is the cleared valuation; the
    reduction is of p^-mu * g(p^shift * y).
    """
    vals = []
    for i in range(g.degree + 1):
        c = Fraction(g[i])
        if c != 0:
            vals.append((i, fraction_valuation(c, p) + i * shift))
    if not vals:
        raise ValueError("zero polynomial")
    mu = min(v for _, v in vals)
    k = GF(p)
    coeffs = [k.zero] * (g.degree + 1)
    for i, v in vals:
        if v == mu:
            c = Fraction(g[i]) * Fraction(p) ** (i * shift - mu)
            coeffs[i] = k.coerce(c)
    return Polynomial(k, coeffs), mu


def hensel_root(
    g: Polynomial, p: int, shift: int, residue0: PrimeFieldElem, precision: int
) -> PadicNumber:
    """Newton-lift a simple residue root of g(p^shift * y) to p-adic precision.

    Returns y* with v_p(g(p^shift * y*)) >= precision and y* = residue0 mod p.
    A multiple residue root is a hard error (the Hensel hypothesis fails),
    never silently perturbed; so is a non-root.
    """
    if residue0.p != p:
        raise ValueError("residue lives in the wrong prime field")
    hbar, mu = scaled_reduction(g, p, shift)
    if hbar.evaluate(residue0) != 0:
        raise ValueError(
            f"{residue0} is not a root of the reduced polynomial {hbar.render('y')}"
        )
    if hbar.derivative().evaluate(residue0) == 0:
        raise ValueError(
            f"{residue0} is a multiple root of {hbar.render('y')}: Hensel's hypothesis fails"
        )
    workprec = max(precision - mu, 1) + 6
    mod = p**workprec
    hc = []
    for i in range(g.degree + 1):
        c = Fraction(g[i]) * Fraction(p) ** (i * shift - mu)
        hc.append(c.numerator * pow(c.denominator, -1, mod) % mod)

    def h_eval(y):
        acc = 0
        for c in reversed(hc):
            acc = (acc * y + c) % mod
        return acc

    def h_deriv(y):
        acc = 0
        for i in range(len(hc) - 1, 0, -1):
            acc = (acc * y + i * hc[i]) % mod
        return acc

    y = residue0.value
    for _ in range(workprec.bit_length() + 8):
        fy = h_eval(y)
        if fy == 0:
            break
        y = (y - fy * pow(h_deriv(y), -1, mod)) % mod
    else:
        raise ArithmeticError("Newton iteration failed to converge")

    # exact re-substitution in Q: the residual valuation must meet the contract
    value = Fraction(p) ** shift * y
    resid = sum((Fraction(g[i]) * value**i for i in range(g.degree + 1)), Fraction(0))
    if resid != 0 and fraction_valuation(resid, p) < precision:
        raise ArithmeticError("lifted root does not meet the requested precision")
    return PadicNumber(p, 0, y, workprec)
