"""Sparse bivariate polynomials over Q in the variables (r, s).

Just enough ring arithmetic to state and verify the discriminant identity of
the 11-torsion parametrization, plus canonical reduction modulo a relation
that is monic of degree 2 in r (polynomial division in the r-direction).
"""

from __future__ import annotations

from fractions import Fraction


class BivariatePolynomial:
    """Map (deg_r, deg_s) -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                c = Fraction(c)
                if c:
                    clean[(i, j)] = c
        self.terms = clean

    @classmethod
    def var_r(cls):
        return cls({(1, 0): 1})

    @classmethod
    def var_s(cls):
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @property
    def is_zero(self):
        return not self.terms

    def degree_r(self):
        return max((i for i, _ in self.terms), default=-1)

    def degree_s(self):
        return max((j for _, j in self.terms), default=-1)

    def _coerce(self, other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return BivariatePolynomial.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, Fraction(0)) - c
        return BivariatePolynomial(out)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BivariatePolynomial.const(1)
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
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, r, s, field=None):
        """Evaluate at elements of any field with Fraction-coercible constants."""
        total = None
        for (i, j), c in sorted(self.terms.items()):
            cf = field.coerce(c) if field is not None else c
            term = cf * r**i * s**j
            total = term if total is None else total + term
        if total is None:
            return field.zero if field is not None else Fraction(0)
        return total

    def reduce_by_monic_in_r(self, relation: "BivariatePolynomial"):
        """Canonical representative modulo a relation monic of degree 2 in r.

        Every r^d with d >= 2 gets rewritten through
        r^2 = -(lower-degree part of the relation), so the result has
        r-degree <= 1.
        """
        rel_r2 = {j for (i, j) in relation.terms if i == 2}
        if relation.terms.get((2, 0)) != 1 or rel_r2 != {0}:
            raise ValueError("relation must be monic of degree 2 in r")
        # r^2 = rewrite, as a bivariate polynomial of r-degree <= 1
        rewrite = BivariatePolynomial(
            {(i, j): -c for (i, j), c in relation.terms.items() if i < 2}
        )
        current = self
        while current.degree_r() >= 2:
            out = BivariatePolynomial()
            for (i, j), c in current.terms.items():
                if i < 2:
                    out = out + BivariatePolynomial({(i, j): c})
                else:
                    mono = BivariatePolynomial({(i - 2, j): c})
                    out = out + mono * rewrite
            current = out
        return current

    def render(self):
        if self.is_zero:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (-k[0], -k[1])):
            c = self.terms[(i, j)]
            factors = []
            if i:
                factors.append("r" if i == 1 else f"r^{i}")
            if j:
                factors.append("s" if j == 1 else f"s^{j}")
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            term = "*".join(factors)
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(sign + term)
        return "".join(parts)

    def __repr__(self):
        return self.render()
