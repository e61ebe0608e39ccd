"""Kodaira types and Tamagawa numbers at places of residue characteristic >= 5.

The Kodaira symbol is read off the (v(c4), v(delta)) table of the minimal
model — valid away from residue characteristics 2 and 3 — while the local
Tamagawa number comes from the classical residue-field analysis on the
completed-square cubic: node tangent splitness for I_n, and the associated
quadratic/cubic conditions for IV, I_0*, I_n*, IV*.  Both routes run on every
call and must agree on the symbol; a mismatch is an internal error, never a
wrong answer.

On the splitness convention: this module tests splitness geometrically (are
the two tangent slopes at the node rational over the residue field?  for the
short-form node, is x0 - x1 a square?).  Textbook treatments phrase the same
test through a tangent-cone quadratic, whose linear-term sign varies between
sources (T^2 + a1 T - a2 vs T^2 + a1 T + a2); the geometric form is
convention-independent, and in the fast-path pattern below a2 reduces to 0 so
every convention agrees there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SingularModelError, UnsupportedResidueCharacteristic
from .fields import PrimeField
from .places import LocalContext, Place, local_context
from .poly import Polynomial, count_roots, factor, is_square, multiplicity, poly_gcd
from .ratfunc import FunctionField, RationalFunction
from .weierstrass import (
    IDENTITY_TRANSFORM,
    WeierstrassModel,
    compose_transforms,
    transform,
)

INF = math.inf


@dataclass(frozen=True)
class KodairaType:
    family: str  # "I", "I*", "II", "III", "IV", "IV*", "III*", "II*"
    n: int = 0
    split: object = None  # bool for multiplicative I_n (n >= 1), else None

    @property
    def text(self) -> str:
        if self.family == "I":
            return f"I{self.n}"
        if self.family == "I*":
            return f"I{self.n}*"
        return self.family

    def same_symbol(self, other) -> bool:
        return self.family == other.family and self.n == other.n

    def __repr__(self):
        if self.split is None:
            return self.text
        return f"{self.text}({'split' if self.split else 'nonsplit'})"


@dataclass(frozen=True)
class ReductionResult:
    kodaira: KodairaType
    tamagawa: int
    vdelta_min: int
    minimal_model: WeierstrassModel
    transform: tuple  # (u, r, s, t) taking the input model to the minimal model

    @property
    def type_text(self):
        return self.kodaira.text


def _as_context(model_or_field, place) -> LocalContext:
    if isinstance(place, LocalContext):
        return place
    return local_context(model_or_field, place)


def _check_residue_char(ctx):
    if ctx.residue_char < 5:
        raise UnsupportedResidueCharacteristic(
            f"residue characteristic {ctx.residue_char} is unsupported (needs >= 5)"
        )


def make_integral(model: WeierstrassModel, ctx: LocalContext):
    """Scale by a uniformizer power so every a_i is integral at the place."""
    e = 0
    for i, a in ((1, model.a1), (2, model.a2), (3, model.a3), (4, model.a4), (6, model.a6)):
        v = ctx.valuation(a)
        if v is not INF and v < 0:
            e = max(e, (int(-v) + i - 1) // i)
    if e == 0:
        return model, IDENTITY_TRANSFORM
    u = ctx.uniformizer ** (-e)
    return transform(model, u), (u, 0, 0, 0)


def minimal_model_at(model: WeierstrassModel, place) -> tuple:
    """Minimal integral model at a place of residue characteristic >= 5.

    Returns (minimal model, k) where k = min(floor(v(c4)/4), floor(v(c6)/6),
    floor(v(delta)/12)) on the integral model: the number of uniformizer
    scalings removed.  Minimality is certified by v(delta) < 12 or v(c4) < 4.
    """
    ctx = _as_context(model.field, place)
    _check_residue_char(ctx)
    mm = _minimalize(model, ctx)
    return mm.model, mm.k


@dataclass(frozen=True)
class _MinimalData:
    model: WeierstrassModel
    k: int
    vdelta: int
    vc4: object
    vc6: object
    invariants: object
    transform: tuple


def _minimalize(model: WeierstrassModel, ctx, inv=None) -> _MinimalData:
    integral, t_clear = make_integral(model, ctx)
    if inv is None or integral is not model:
        inv = integral.invariants()
    vd = ctx.valuation(inv.delta)
    if vd is INF:
        raise SingularModelError("discriminant vanishes: not an elliptic curve")
    vc4 = ctx.valuation(inv.c4)
    vc6 = ctx.valuation(inv.c6)
    candidates = [vd // 12]
    if vc4 is not INF:
        candidates.append(vc4 // 4)
    if vc6 is not INF:
        candidates.append(vc6 // 6)
    k = int(min(candidates))
    if k == 0:
        final = integral
        t_total = t_clear
        inv_min = inv
    else:
        u = ctx.uniformizer**k
        final = transform(integral, u)
        t_total = compose_transforms(t_clear, (u, 0, 0, 0))
        inv_min = None
    vd -= 12 * k
    vc4 = vc4 if vc4 is INF else vc4 - 4 * k
    vc6 = vc6 if vc6 is INF else vc6 - 6 * k
    if not (vd < 12 or (vc4 is not INF and vc4 < 4)):
        raise ArithmeticError("minimality certificate failed")
    if inv_min is None:
        inv_min = final.invariants()
    return _MinimalData(final, k, int(vd), vc4, vc6, inv_min, t_total)


def classify_from_valuations(vc4, vdelta) -> KodairaType:
    """The (v(c4), v(delta)) table of the minimal model, residue char >= 5."""
    if vdelta == 0:
        return KodairaType("I", 0)
    if vc4 == 0:
        return KodairaType("I", vdelta)
    if vdelta == 2:
        return KodairaType("II")
    if vdelta == 3:
        return KodairaType("III")
    if vdelta == 4:
        return KodairaType("IV")
    if vdelta == 6:
        return KodairaType("I*", 0)
    if vdelta >= 7 and vc4 == 2:
        return KodairaType("I*", vdelta - 6)
    if vdelta == 8:
        return KodairaType("IV*")
    if vdelta == 9:
        return KodairaType("III*")
    if vdelta == 10:
        return KodairaType("II*")
    raise ArithmeticError(
        f"(v(c4), v(delta)) = ({vc4}, {vdelta}) is impossible for a minimal model"
    )


def observation_fastpath(model: WeierstrassModel, place) -> ReductionResult | None:
    """Split multiplicative shortcut for the coefficient-valuation pattern
    v(a1) = 0 and v(a2), v(a3), v(a4), v(a6) all positive.

    In that pattern the model is already minimal, the reduction is split
    multiplicative of type I_n with n = v(delta), and the Tamagawa number is
    n.  Returns None when the pattern does not match; never misclassifies.
    """
    ctx = _as_context(model.field, place)
    _check_residue_char(ctx)
    vals = {}
    for name, a in (("a1", model.a1), ("a2", model.a2), ("a3", model.a3),
                    ("a4", model.a4), ("a6", model.a6)):
        v = ctx.valuation(a)
        if v is not INF and v < 0:
            raise ValueError(f"model is not integral at {ctx.place.render()}")
        vals[name] = v
    if vals["a1"] != 0 or any(vals[k] == 0 for k in ("a2", "a3", "a4", "a6")):
        return None
    inv = model.invariants()
    n = ctx.valuation(inv.delta)
    if n is INF:
        raise SingularModelError("discriminant vanishes")
    if ctx.valuation(inv.c4) != 0:
        raise ArithmeticError("fast-path pattern must have unit c4")
    n = int(n)
    return ReductionResult(
        KodairaType("I", n, split=True), n, n, model, IDENTITY_TRANSFORM
    )


def tate_reduce(model: WeierstrassModel, place, _invariants=None) -> ReductionResult:
    """Kodaira type, local Tamagawa number, and v(delta_min) at one place."""
    ctx = _as_context(model.field, place)
    _check_residue_char(ctx)
    mm = _minimalize(model, ctx, inv=_invariants)
    table_type = classify_from_valuations(mm.vc4, mm.vdelta)

    inv = mm.invariants
    f = mm.model.field
    quarter = f.coerce(1) / f.coerce(4)
    half = f.coerce(1) / f.coerce(2)
    A2 = inv.b2 * quarter
    A4 = inv.b4 * half
    A6 = inv.b6 * quarter
    kod, c = _analyze_cubic(ctx, A2, A4, A6, mm.vc4, mm.vdelta)
    if not kod.same_symbol(table_type):
        raise ArithmeticError(
            f"valuation table says {table_type.text}, residue analysis says {kod.text}"
        )
    return ReductionResult(kod, c, mm.vdelta, mm.model, mm.transform)


def _res_at(ctx, x, j):
    if j == 0:
        return ctx.residue(x)
    return ctx.residue(x / ctx.uniformizer**j)


def _shift_cubic(A2, A4, A6, c):
    # x -> x + c on y^2 = x^3 + A2 x^2 + A4 x + A6
    return (
        A2 + 3 * c,
        A4 + 2 * c * A2 + 3 * c * c,
        A6 + c**3 + A2 * c * c + A4 * c,
    )


def _analyze_cubic(ctx, A2, A4, A6, vc4, vdelta):
    """Residue-field analysis of y^2 = x^3 + A2 x^2 + A4 x + A6 (minimal)."""
    k = ctx.residue_field
    one = k.one

    if vdelta == 0:
        return KodairaType("I", 0), 1

    if vc4 == 0:
        # multiplicative: locate the node (the double root of the reduction)
        gbar = Polynomial(k, [ctx.residue(A6), ctx.residue(A4), ctx.residue(A2), one])
        d = poly_gcd(gbar, gbar.derivative())
        if d.degree != 1:
            raise ArithmeticError("node expected: reduction should have a double root")
        x0 = -d[0] / d[1]
        tangent_sq = ctx.residue(A2) + 3 * x0  # = x0 - x1 after centering the node
        split = is_square(tangent_sq, k)
        n = vdelta
        c = n if split else (2 if n % 2 == 0 else 1)
        return KodairaType("I", n, split=split), c

    # additive: center the cusp (triple root) at the origin
    a2bar = ctx.residue(A2)
    t0 = -(a2bar / k.coerce(3))
    A2, A4, A6 = _shift_cubic(A2, A4, A6, ctx.lift(t0))

    if ctx.valuation(A6) < 2:
        return KodairaType("II"), 1
    b8 = 4 * A2 * A6 - A4 * A4
    if ctx.valuation(b8) < 3:
        return KodairaType("III"), 2
    if ctx.valuation(A6) < 3:
        c = 3 if is_square(_res_at(ctx, A6, 2), k) else 1
        return KodairaType("IV"), c

    # level-1 cubic P(T) = T^3 + (A2/pi) T^2 + (A4/pi^2) T + (A6/pi^3)
    P = Polynomial(
        k, [_res_at(ctx, A6, 3), _res_at(ctx, A4, 2), _res_at(ctx, A2, 1), one]
    )
    dP = poly_gcd(P, P.derivative())
    if dP.degree == 0:
        return KodairaType("I*", 0), 1 + count_roots(P)

    if dP.degree == 1:
        # I_n* chain: translate the double root of P to zero, then walk the
        # alternating quadratic conditions until one has distinct roots.
        t1 = -dP[0] / dP[1]
        A2, A4, A6 = _shift_cubic(A2, A4, A6, ctx.uniformizer * ctx.lift(t1))
        a21 = _res_at(ctx, A2, 1)
        if not a21:
            raise ArithmeticError("I_n* chain expects v(a2) = 1 after centering")
        i = 1
        while True:
            if ctx.valuation(A6) == 2 * i + 2:
                u6 = _res_at(ctx, A6, 2 * i + 2)
                c = 4 if is_square(u6, k) else 2
                n_star = 2 * i - 1
                break
            a4l = _res_at(ctx, A4, i + 2)
            a6l = _res_at(ctx, A6, 2 * i + 3)
            disc = a4l * a4l - 4 * a21 * a6l
            if disc != k.zero:
                c = 4 if is_square(disc, k) else 2
                n_star = 2 * i
                break
            x0 = -a4l / (2 * a21)
            A2, A4, A6 = _shift_cubic(
                A2, A4, A6, ctx.uniformizer ** (i + 1) * ctx.lift(x0)
            )
            i += 1
            if i > vdelta:
                raise ArithmeticError("I_n* chain failed to terminate")
        if vdelta != 6 + n_star:
            raise ArithmeticError("I_n* chain length disagrees with v(delta)")
        return KodairaType("I*", n_star), c

    # triple root of P: one more centering, then the last three types
    t1 = -(_res_at(ctx, A2, 1) / k.coerce(3))
    A2, A4, A6 = _shift_cubic(A2, A4, A6, ctx.uniformizer * ctx.lift(t1))
    if ctx.valuation(A6) == 4:
        c = 3 if is_square(_res_at(ctx, A6, 4), k) else 1
        return KodairaType("IV*"), c
    if ctx.valuation(A4) == 3:
        return KodairaType("III*"), 2
    if ctx.valuation(A6) == 5:
        return KodairaType("II*"), 1
    raise ArithmeticError("reached a non-minimal configuration in the additive chain")


# ---------------------------------------------------------------------------
# Global enumeration over F_p(t).
# ---------------------------------------------------------------------------


def _clear_denominators(model: WeierstrassModel):
    """One scaling making every coefficient a polynomial (integral at all
    finite places); returns (cleared model, invariants of it)."""
    field = model.field
    den = Polynomial.constant(field.base, field.base.one)
    for a in (model.a1, model.a2, model.a3, model.a4, model.a6):
        d = a.den
        if d.degree > 0:
            den = den * (d // poly_gcd(den, d))
    if den.degree == 0:
        cleared = model
    else:
        u = RationalFunction(Polynomial.constant(field.base, field.base.one), den)
        cleared = transform(model, u)
    inv = cleared.invariants()
    return cleared, inv


def bad_places(model: WeierstrassModel, seed: int = 0):
    """All places of F_p(t) where the minimal model has v(delta_min) > 0.

    Finite candidates come from factoring the discriminant of a globally
    cleared (polynomial-coefficient) model; the place at infinity is always
    checked explicitly.
    """
    field = model.field
    if not isinstance(field, FunctionField) or not isinstance(field.base, PrimeField):
        raise TypeError("bad-place enumeration runs over F_p(t)")
    _check_residue_char(_as_context(field, Place.infinite(field.base.p)))
    if model.is_singular():
        raise SingularModelError("singular model has no reduction data")
    cleared, inv = _clear_denominators(model)
    assert inv.delta.is_polynomial
    out = []
    for g, _ in factor(inv.delta.num, seed=seed).factors:
        place = Place.finite(g, check=False)
        vd = multiplicity(inv.delta.num, g)
        vc4 = INF if inv.c4.is_zero else (
            multiplicity(inv.c4.num, g) - multiplicity(inv.c4.den, g)
        )
        vc6 = INF if inv.c6.is_zero else (
            multiplicity(inv.c6.num, g) - multiplicity(inv.c6.den, g)
        )
        ks = [vd // 12]
        if vc4 is not INF:
            ks.append(vc4 // 4)
        if vc6 is not INF:
            ks.append(vc6 // 6)
        if vd - 12 * int(min(ks)) > 0:
            out.append(place)
    inf_place = Place.infinite(field.base.p)
    mm = _minimalize(model, _as_context(field, inf_place))
    if mm.vdelta > 0:
        out.append(inf_place)
    return out


def global_tamagawa(model: WeierstrassModel, seed: int = 0, cross_check: bool = True):
    """Product of the local Tamagawa numbers over all bad places of F_p(t).

    Returns (c, rows) with one (Place, ReductionResult) row per bad place.
    With ``cross_check`` the fast-path pattern, wherever it applies to the
    minimal model, must agree with the full analysis.
    """
    field = model.field
    cleared, inv = _clear_denominators(model)
    rows = []
    total = 1
    for place in bad_places(model, seed=seed):
        if place.kind == "infinite":
            result = tate_reduce(model, place)
        else:
            result = tate_reduce(cleared, place, _invariants=inv)
        if cross_check:
            ctx = _as_context(field, place)
            fast = observation_fastpath(result.minimal_model, ctx)
            if fast is not None:
                agree = (
                    fast.kodaira == result.kodaira
                    and fast.tamagawa == result.tamagawa
                    and fast.vdelta_min == result.vdelta_min
                )
                if not agree:
                    raise ArithmeticError(
                        f"fast path disagrees with full reduction at {place.render()}"
                    )
        rows.append((place, result))
        total *= result.tamagawa
    return total, rows
