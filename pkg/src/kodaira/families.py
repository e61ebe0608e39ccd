"""Parametrized torsion families and their closed-form oracles.

Covers the raw-form 11-torsion parametrization (a Tate normal form whose
parameters satisfy a plane relation), the three characteristic-p function
field families carrying a point of order p (p = 5, 7, 11), truncated p-adic
realizations of the parameter-valuation cases, torsion fixtures over cubic
and quartic number fields, and the p-th / (p-1)-st power tests on F_p(t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bivar import BivariatePolynomial
from .errors import DegenerateParameters
from .fields import GF, QQ, PrimeField, is_prime
from .newton import NewtonPolygon, newton_polygon
from .padic import PadicField, PadicNumber, hensel_root, scaled_reduction
from .places import fraction_valuation
from .poly import Polynomial, distinct_roots, factor
from .quotient import QuotientField
from .ratfunc import FunctionField, RationalFunction
from .weierstrass import CurvePoint, WeierstrassModel, on_curve

# the raw-form relation for 11-torsion: r^2 - r s^3 + 3 r s^2 - 4 r s + s = 0
RAW11_RELATION = BivariatePolynomial(
    {(2, 0): 1, (1, 3): -1, (1, 2): 3, (1, 1): -4, (0, 1): 1}
)

# the degree-(2,3) cofactor of the raw-form discriminant
RAW11_COFACTOR = BivariatePolynomial(
    {
        (2, 3): 1,
        (2, 2): -8,
        (1, 3): -2,
        (2, 1): 16,
        (1, 2): 5,
        (0, 3): 1,
        (1, 1): -20,
        (0, 2): 3,
        (0, 1): 3,
        (0, 0): 1,
    }
)


def raw11_relation_value(r, s, field=None):
    """Value of the defining relation at (r, s) in any supported field."""
    return RAW11_RELATION.evaluate(r, s, field=field)


def tate_normal_form(field, b, c) -> WeierstrassModel:
    """y^2 + (1-c)xy - by = x^3 - bx^2, the shape carrying (0, 0) as torsion."""
    b = field.coerce(b)
    c = field.coerce(c)
    return WeierstrassModel(field, 1 - c, -b, -b, field.coerce(0), field.coerce(0))


def curve_from_raw11_point(r, s, field) -> WeierstrassModel:
    """The 11-torsion model at a parameter point on the raw-form curve.

    Rejects off-curve parameters and the degenerate locus (where the model
    discriminant vanishes).
    """
    r = field.coerce(r)
    s = field.coerce(s)
    if raw11_relation_value(r, s, field=field):
        raise ValueError("parameters do not satisfy the raw-form relation")
    b = r * s * (r - 1)
    c = s * (r - 1)
    model = tate_normal_form(field, b, c)
    if not model.discriminant():
        raise DegenerateParameters("parameters lie on the degenerate locus")
    return model


@dataclass(frozen=True)
class FamilyCurve:
    p: int
    param: RationalFunction
    model: WeierstrassModel
    tate_b: RationalFunction
    tate_c: RationalFunction


def torsion_family(p: int, f: RationalFunction) -> FamilyCurve:
    """The order-p family over F_p(t) at parameter f (nonconstant)."""
    if p not in (5, 7, 11):
        raise ValueError("supported characteristics are 5, 7, 11")
    field = FunctionField(GF(p))
    f = field.coerce(f)
    if f.is_constant:
        raise ValueError("the family parameter must be nonconstant")
    if p == 5:
        b, c = f, f
    elif p == 7:
        c = f * f - f
        b = f**3 - f * f
    else:
        c = ((f + 3) * (f + 5) ** 2 * (f + 9) ** 2) / (3 * (f + 1) * (f + 4) ** 4)
        b = c * ((f + 1) ** 2 * (f + 9)) / (2 * (f + 4) ** 3)
    model = tate_normal_form(field, b, c)
    if not model.discriminant():
        raise DegenerateParameters("family parameter lies on the degenerate locus")
    return FamilyCurve(p, f, model, b, c)


def random_family_parameter(p: int, rng, max_degree: int = 4) -> RationalFunction:
    """A seeded random nonconstant parameter with component degrees <= max_degree."""
    base = GF(p)
    while True:
        num = Polynomial(base, [rng.randrange(p) for _ in range(rng.randint(1, max_degree + 1))])
        den = Polynomial(base, [rng.randrange(p) for _ in range(rng.randint(1, max_degree + 1))])
        if den.is_zero:
            continue
        f = RationalFunction(num, den)
        if not f.is_constant:
            return f


def family_discriminant(p: int, f: RationalFunction) -> RationalFunction:
    """Closed-form discriminant of the order-p family at parameter f."""
    if p not in (5, 7, 11):
        raise ValueError("supported characteristics are 5, 7, 11")
    field = FunctionField(GF(p))
    f = field.coerce(f)
    if f.is_constant:
        raise ValueError("the family parameter must be nonconstant")
    if p == 5:
        return f**5 * (f * f - 11 * f - 1)
    if p == 7:
        return f**7 * (f - 1) ** 7 * (f**3 - 8 * f * f + 5 * f + 1)
    return (2 * f * f * (f + 3) ** 11 * (f + 5) ** 11 * (f + 9) ** 11) / (
        (f + 4) ** 37 * (f + 1)
    )


# ---------------------------------------------------------------------------
# The symbolic discriminant identity.
# ---------------------------------------------------------------------------


def _raw11_discriminant_bivariate() -> BivariatePolynomial:
    r = BivariatePolynomial.var_r()
    s = BivariatePolynomial.var_s()
    one = BivariatePolynomial.const(1)
    b = r * s * (r - one)
    c = s * (r - one)
    a1 = one - c
    a2 = -b
    a3 = -b
    b2 = a1 * a1 + 4 * a2
    b4 = a1 * a3
    b6 = a3 * a3
    b8 = a2 * a3 * a3
    return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


@dataclass(frozen=True)
class DiscriminantIdentityReport:
    holds_raw: bool
    reduced_remainder: str
    holds_mod_relation: bool
    transform_scalings_ok: bool
    perturbed: bool


def verify_discriminant_identity_11(perturb: bool = False) -> DiscriminantIdentityReport:
    """Check the raw-form discriminant against its displayed factorization.

    The main identity is checked modulo the ideal of the raw-form relation
    (the parameters live on that curve); whether it also holds as a raw
    polynomial identity is reported informationally.  The two rescaled
    discriminants (the scalings by s^12 and by (s(r-1))^12) are rebuilt from
    their displayed factorizations and compared the same way.
    """
    r = BivariatePolynomial.var_r()
    s = BivariatePolynomial.var_s()
    one = BivariatePolynomial.const(1)
    delta = _raw11_discriminant_bivariate()
    target = r**3 * s**4 * (r - one) ** 5 * RAW11_COFACTOR
    if perturb:
        target = target + one
    diff = delta - target
    holds_raw = diff.is_zero
    reduced = diff.reduce_by_monic_in_r(RAW11_RELATION)
    holds_mod = reduced.is_zero

    # the displayed rescalings: delta / s^12 = r^3 (r-1)^5 f / s^8  and
    # delta / (s(r-1))^12 = r^3 f / (s^8 (r-1)^7); cleared of denominators,
    # numerator * u^12 / denominator must reproduce delta on the curve
    resc1 = (r**3 * (r - one) ** 5 * RAW11_COFACTOR) * s ** (12 - 8)
    resc2 = (r**3 * RAW11_COFACTOR) * s ** (12 - 8) * (r - one) ** (12 - 7)
    if perturb:
        resc1 = resc1 + one
        resc2 = resc2 + one
    ok1 = (delta - resc1).reduce_by_monic_in_r(RAW11_RELATION).is_zero
    ok2 = (delta - resc2).reduce_by_monic_in_r(RAW11_RELATION).is_zero
    return DiscriminantIdentityReport(
        holds_raw=holds_raw,
        reduced_remainder=reduced.render(),
        holds_mod_relation=holds_mod,
        transform_scalings_ok=ok1 and ok2,
        perturbed=perturb,
    )


# ---------------------------------------------------------------------------
# p-adic realization of the parameter-valuation cases.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RawPoint11:
    case: str
    p: int
    pole_order: int
    r: PadicNumber
    s: PadicNumber
    polygon: NewtonPolygon
    field: PadicField


@dataclass(frozen=True)
class InfeasibilityCertificate:
    case: str
    p: int
    pole_order: int
    polygons: tuple  # (v(s), NewtonPolygon) samples with all root valuations >= 0
    reason: str


def _relation_in_r(s_value: Fraction):
    """The relation as a quadratic in r over Q, for a fixed rational s."""
    s = s_value
    return Polynomial(QQ, [s, -(s**3) + 3 * s * s - 4 * s, 1])


def realize_valuation_case(case: str, p: int, pole_order: int, precision: int = None):
    """Produce a truncated p-adic parameter point in the requested valuation case.

    Cases (m = pole_order >= 1):
      A: v(r) > 0, v(s) < 0   -> s = p^-m,    v(r) = 2m
      B: v(r) > 0, v(s) >= 0  -> s = -p^(2m), v(r) = m
      C: v(r) < 0, v(s) < 0   -> s = p^-m,    v(r) = -3m
      D: v(r) < 0, v(s) >= 0  -> impossible; returns a polygon certificate
    """
    if case not in ("A", "B", "C", "D"):
        raise ValueError("case must be one of A, B, C, D")
    if p < 5 or not is_prime(p):
        raise ValueError("need a prime p >= 5")
    m = pole_order
    if m < 1:
        raise ValueError("pole order must be >= 1")
    N = precision if precision is not None else 11 * m + 30

    if case == "D":
        samples = []
        for vs in range(0, 2 * m + 3):
            # worst-case polygon: v of the linear coefficient as low as possible
            poly = newton_polygon([(0, vs), (1, vs), (2, 0)])
            if any(rv < 0 for rv in poly.root_valuations()):
                raise ArithmeticError("certificate violated: negative root valuation")
            samples.append((vs, poly))
        return InfeasibilityCertificate(
            case="D",
            p=p,
            pole_order=m,
            polygons=tuple(samples),
            reason=(
                "with v(s) >= 0 every coefficient of the quadratic in r has "
                "valuation >= 0 and the leading coefficient is a unit, so no "
                "Newton-polygon slope is positive and every root has v >= 0"
            ),
        )

    if case in ("A", "C"):
        s_exact = Fraction(1, p**m)
        shift = 2 * m if case == "A" else -3 * m
    else:
        s_exact = Fraction(-(p ** (2 * m)))
        shift = m

    g = _relation_in_r(s_exact)
    points = [
        (i, fraction_valuation(Fraction(g[i]), p)) for i in range(3) if g[i] != 0
    ]
    polygon = newton_polygon(points)

    reduced, _ = scaled_reduction(g, p, shift)
    roots = [z for z in distinct_roots(reduced) if z != 0]
    if case == "A":
        if len(roots) != 1:
            raise ArithmeticError("case A expects a unique nonzero residue root")
        residue0 = roots[0]
    else:
        one = GF(p).one
        if one not in roots:
            raise ArithmeticError("expected the residue root 1")
        residue0 = one

    y = hensel_root(g, p, shift, residue0, N)
    work = PadicField(p, N + abs(shift) + 10)
    r_val = work.coerce(Fraction(p) ** shift) * y
    s_val = work.coerce(s_exact)

    rel = raw11_relation_value(r_val, s_val, field=work)
    threshold = N - 6 * m - 5
    if not rel.is_zeroish:
        raise ArithmeticError("realized point does not satisfy the relation")
    if not rel.is_exact_zero and rel.val < threshold:
        raise ArithmeticError("relation residual is not deep enough for the precision")
    expected_vr = {"A": 2 * m, "B": m, "C": -3 * m}[case]
    if r_val.valuation() != expected_vr:
        raise ArithmeticError(f"case {case}: v(r) = {r_val.valuation()}, wanted {expected_vr}")
    return RawPoint11(case, p, m, r_val, s_val, polygon, work)


def raw11_model_from_point(point: RawPoint11) -> WeierstrassModel:
    return curve_from_raw11_point(point.r, point.s, point.field)


# ---------------------------------------------------------------------------
# Number-field fixtures.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FixtureCurve:
    label: str
    field: QuotientField
    modulus: Polynomial
    model: WeierstrassModel
    point: tuple
    expected_order: int


FIXTURE_LABELS = ("krumm-13-cubic", "krumm-17-quartic")

# coefficient lists are verbatim (low degree first), no normalization at ingest
_FIXTURE_DATA = {
    "krumm-13-cubic": {
        "modulus": [-1, -1, 2, 1],  # t^3 + 2t^2 - t - 1
        "a1": [2, 0, -2],  # -2t^2 + 2
        "a23": [4, 2, -9],  # -9t^2 + 2t + 4
        "order": 13,
    },
    "krumm-17-quartic": {
        "modulus": [1, 1, -3, -1, 1],  # t^4 - t^3 - 3t^2 + t + 1
        "a1": [4, 4, -7, -6],  # -6t^3 - 7t^2 + 4t + 4
        "a23": [74, 109, -170, -155],  # -155t^3 - 170t^2 + 109t + 74
        "order": 17,
    },
}


def fixture(label: str) -> FixtureCurve:
    """Torsion fixtures over a cubic / quartic number field, by exact label."""
    if label not in _FIXTURE_DATA:
        raise KeyError(f"unknown fixture {label!r}; choose from {FIXTURE_LABELS}")
    data = _FIXTURE_DATA[label]
    modulus = Polynomial(QQ, data["modulus"])
    field = QuotientField(QQ, modulus)
    a1 = field.coerce(Polynomial(QQ, data["a1"]))
    a23 = field.coerce(Polynomial(QQ, data["a23"]))
    model = WeierstrassModel(
        field, a1, a23, a23, field.zero, field.zero
    )
    pt = CurvePoint(field.zero, field.zero)
    assert on_curve(model, pt)
    return FixtureCurve(label, field, modulus, model, (field.zero, field.zero), data["order"])


# ---------------------------------------------------------------------------
# Power tests in F_p(t).
# ---------------------------------------------------------------------------


def is_pth_power(f: RationalFunction, p: int) -> bool:
    """f in (F_p(t))^p iff every irreducible exponent is divisible by p.

    The leading constant never obstructs: every element of F_p is a p-th
    power.  Cross-checkable through d/dt: in characteristic p, f is a p-th
    power exactly when its derivative vanishes.
    """
    if f.is_zero:
        raise ZeroDivisionError("zero is not in the unit group")
    if f.field.p != p:
        raise ValueError("rational function over the wrong characteristic")
    for part in (f.num, f.den):
        if part.degree < 1:
            continue
        for _, e in factor(part).factors:
            if e % p != 0:
                return False
    return True


def is_p_minus_1_power(f: RationalFunction, p: int) -> bool:
    """f in ((F_p(t))^x)^(p-1)?

    Since F_p(t)^x splits as F_p^x times the free group on monic
    irreducibles, f is a (p-1)-st power exactly when every irreducible
    exponent is divisible by p-1 and the leading constant is 1 (the
    (p-1)-st powers in F_p^x are exactly {1}).
    """
    if f.is_zero:
        raise ZeroDivisionError("zero is not in the unit group")
    if f.field.p != p:
        raise ValueError("rational function over the wrong characteristic")
    if f.num.lead != f.field.one:
        return False
    for part in (f.num, f.den):
        if part.degree < 1:
            continue
        for _, e in factor(part).factors:
            if e % (p - 1) != 0:
                return False
    return True
