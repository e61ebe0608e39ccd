"""Command-line verification surface.

Subcommands:

  check11-symbolic   discriminant identity of the 11-torsion raw form
  check11-padic      valuation-case realizations and their reduction types
  check-ff           function-field families: divisibility of Tamagawa numbers
  tamagawa           Kodaira type / c_v / v(delta_min) of one curve at one place
  torsion-order      exact order of a marked point

Exit codes: 0 all assertions passed, 1 an assertion failed, 2 bad input.
Reports are JSON on stdout, byte-deterministic given (command, seed).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .errors import (
    DegenerateParameters,
    InsufficientPrecision,
    OrderBoundExceeded,
    SingularModelError,
    UnsupportedResidueCharacteristic,
)
from .families import (
    FIXTURE_LABELS,
    InfeasibilityCertificate,
    fixture,
    family_discriminant,
    is_p_minus_1_power,
    is_pth_power,
    random_family_parameter,
    raw11_model_from_point,
    realize_valuation_case,
    torsion_family,
    verify_discriminant_identity_11,
)
from .fields import is_prime
from .literals import parse_curve, parse_element, parse_place, parse_point
from .places import Place
from .reduction import global_tamagawa, observation_fastpath, tate_reduce
from .reports import VerificationReport, tsv_table
from .weierstrass import point_order, to_short_form, hasse_invariant


class UsageError(ValueError):
    pass


def cmd_check11_symbolic(args) -> int:
    report = VerificationReport("check11-symbolic", seed=args.seed)
    result = verify_discriminant_identity_11(perturb=args.perturb)
    case = report.new_case("discriminant-identity", perturb=args.perturb)
    case.check(
        "discriminant factors on the curve",
        result.holds_mod_relation,
        f"remainder after reduction: {result.reduced_remainder}",
    )
    case.check(
        "rescaled discriminants match the two parameter scalings",
        result.transform_scalings_ok,
    )
    report.extras["reduced_remainder"] = result.reduced_remainder
    report.extras["identity_holds_before_reduction"] = result.holds_raw
    print(report.to_json())
    return 0 if report.passed else 1


def cmd_check11_padic(args) -> int:
    primes = _parse_int_list(args.primes, "--primes")
    pole_orders = _parse_int_list(args.pole_orders, "--pole-orders")
    for p in primes:
        if p < 5 or not is_prime(p):
            raise UsageError(f"--primes entries must be primes >= 5, got {p}")
    for m in pole_orders:
        if m < 1:
            raise UsageError(f"--pole-orders entries must be >= 1, got {m}")
    report = VerificationReport("check11-padic", seed=args.seed)
    for p in primes:
        for m in pole_orders:
            for case_name in ("A", "B", "C"):
                case = report.new_case(f"case-{case_name}-p{p}-m{m}", p=p, m=m)
                point = realize_valuation_case(case_name, p, m)
                model = raw11_model_from_point(point)
                result = tate_reduce(model, Place.rational_prime(p))
                case.place = str(p)
                case.kodaira = result.kodaira.text
                case.split = result.kodaira.split
                case.tamagawa = result.tamagawa
                case.vdelta_min = result.vdelta_min
                case.check("split multiplicative", result.kodaira.split is True)
                case.check(
                    f"type is I{11 * m}",
                    result.kodaira.family == "I" and result.kodaira.n == 11 * m,
                )
                case.check(f"c = {11 * m}", result.tamagawa == 11 * m)
                case.check("11 divides c", result.tamagawa % 11 == 0)
                case.check(f"v(delta_min) = {11 * m}", result.vdelta_min == 11 * m)
            case = report.new_case(f"case-D-p{p}-m{m}", p=p, m=m)
            cert = realize_valuation_case("D", p, m)
            case.check(
                "case D infeasible",
                isinstance(cert, InfeasibilityCertificate),
                cert.reason if isinstance(cert, InfeasibilityCertificate) else "",
            )
    print(report.to_json())
    return 0 if report.passed else 1


def cmd_check_ff(args) -> int:
    p = args.p
    if p not in (5, 7, 11):
        raise UsageError("--p must be one of 5, 7, 11")
    report = VerificationReport("check-ff", seed=args.seed)
    rng = random.Random(args.seed)
    if args.f is not None:
        from .fields import GF
        from .ratfunc import FunctionField

        literal = parse_element(args.f, FunctionField(GF(p)))
        if literal.is_constant:
            raise UsageError("--f must be a nonconstant rational function")
        params = [literal]
    else:
        params = [random_family_parameter(p, rng) for _ in range(args.count)]
    tsv_rows = []
    for f in params:
        curve = torsion_family(p, f)
        label = f"p{p}-f={f.render()}"
        case = report.new_case(label, p=p, f=f.render())
        inv = curve.model.invariants()
        case.check(
            "closed-form discriminant matches the model",
            family_discriminant(p, f) == inv.delta,
        )
        jval = inv.j()
        case.check("j is a p-th power", is_pth_power(jval, p))
        short, _ = to_short_form(curve.model)
        case.check(
            "Hasse invariant is a (p-1)-st power",
            is_p_minus_1_power(hasse_invariant(short, p), p),
        )
        total, rows = global_tamagawa(curve.model, cross_check=False)
        case.tamagawa = total
        case.check(f"{p} divides c", total % p == 0, f"c = {total}")
        if p == 11:
            case.check("11^3 divides c", total % 11**3 == 0, f"c = {total}")
        applicable = agreeing = 0
        for place, result in rows:
            fast = observation_fastpath(result.minimal_model, place)
            if fast is not None:
                applicable += 1
                agreeing += (
                    fast.kodaira == result.kodaira
                    and fast.tamagawa == result.tamagawa
                    and fast.vdelta_min == result.vdelta_min
                )
        case.check(
            "fast path agrees with the full algorithm wherever it applies",
            applicable == agreeing,
            f"{agreeing}/{applicable} applicable places agree",
        )
        for place, result in rows:
            tsv_rows.append(
                {
                    "p": p,
                    "f": f.render(),
                    "place": place.render(),
                    "degree": place.degree,
                    "type": result.kodaira.text,
                    "split": _split_text(result.kodaira.split),
                    "vdelta_min": result.vdelta_min,
                    "c_v": result.tamagawa,
                }
            )
    table = tsv_table(tsv_rows)
    report.extras["tsv"] = table
    if args.tsv:
        with open(args.tsv, "w") as handle:
            handle.write(table)
    print(report.to_json())
    return 0 if report.passed else 1


def _split_text(split):
    if split is None:
        return "-"
    return "true" if split else "false"


def cmd_tamagawa(args) -> int:
    model = parse_curve(args.curve)
    place = parse_place(args.place, model.field)
    result = tate_reduce(model, place)
    out = {
        "type": result.kodaira.text,
        "split": result.kodaira.split,
        "c": result.tamagawa,
        "vdelta": result.vdelta_min,
    }
    print(json.dumps(out, ensure_ascii=True))
    return 0


def cmd_torsion_order(args) -> int:
    if args.fixture is not None:
        fix = fixture(args.fixture)
        from .weierstrass import CurvePoint

        order = point_order(fix.model, CurvePoint(*fix.point), bound=200)
        print(order)
        return 0
    if args.curve is None or args.point is None:
        raise UsageError("torsion-order needs --fixture or (--curve and --point)")
    model = parse_curve(args.curve)
    point = parse_point(args.point, model.field)
    order = point_order(model, point, bound=200)
    print(order)
    return 0


def _parse_int_list(text, flag):
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise UsageError(f"{flag} expects a comma-separated integer list") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kodaira",
        description="Kodaira types, Tamagawa numbers, and torsion-family checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sym = sub.add_parser("check11-symbolic", help="symbolic discriminant identity")
    p_sym.add_argument("--perturb", action="store_true", help="negative control")
    p_sym.add_argument("--seed", type=int, default=0)
    p_sym.set_defaults(func=cmd_check11_symbolic)

    p_pad = sub.add_parser("check11-padic", help="p-adic valuation case suite")
    p_pad.add_argument("--primes", default="5,7,13,17,19,23")
    p_pad.add_argument("--pole-orders", dest="pole_orders", default="1,2,3")
    p_pad.add_argument("--seed", type=int, default=0)
    p_pad.set_defaults(func=cmd_check11_padic)

    p_ff = sub.add_parser("check-ff", help="function-field family divisibility")
    p_ff.add_argument("--p", type=int, required=True)
    p_ff.add_argument("--count", type=int, default=20)
    p_ff.add_argument("--seed", type=int, default=0)
    p_ff.add_argument("--f", default=None, help="explicit parameter literal")
    p_ff.add_argument("--tsv", default=None, help="also write the TSV table here")
    p_ff.set_defaults(func=cmd_check_ff)

    p_tam = sub.add_parser("tamagawa", help="local reduction data of one curve")
    p_tam.add_argument("--curve", required=True, help="curve JSON")
    p_tam.add_argument("--place", required=True, help="place literal")
    p_tam.set_defaults(func=cmd_tamagawa)

    p_tor = sub.add_parser("torsion-order", help="exact order of a marked point")
    p_tor.add_argument("--fixture", choices=FIXTURE_LABELS, default=None)
    p_tor.add_argument("--curve", default=None, help="curve JSON")
    p_tor.add_argument("--point", default=None, help="point literal 'x,y'")
    p_tor.set_defaults(func=cmd_torsion_order)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (
        UsageError,
        ValueError,
        KeyError,
        TypeError,
        ZeroDivisionError,
        json.JSONDecodeError,
        UnsupportedResidueCharacteristic,
        SingularModelError,
        DegenerateParameters,
        OrderBoundExceeded,
        InsufficientPrecision,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
