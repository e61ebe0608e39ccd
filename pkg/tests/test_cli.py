import json

import pytest

from kodaira.cli import main
from kodaira.reports import TSV_COLUMNS


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check11_symbolic_passes(capsys):
    code, out, _ = run_cli(capsys, "check11-symbolic")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert report["reduced_remainder"] == "0"
    assert report["identity_holds_before_reduction"] is True


def test_check11_symbolic_perturb_fails(capsys):
    code, out, _ = run_cli(capsys, "check11-symbolic", "--perturb")
    assert code == 1
    report = json.loads(out)
    assert report["passed"] is False
    assert report["reduced_remainder"] != "0"


def test_check11_padic_small(capsys):
    code, out, _ = run_cli(capsys, "check11-padic", "--primes", "7", "--pole-orders", "2")
    assert code == 0
    report = json.loads(out)
    labels = {c["label"]: c for c in report["cases"]}
    row = labels["case-A-p7-m2"]
    assert row["kodaira"] == "I22" and row["tamagawa"] == 22 and row["split"] is True
    row_b = labels["case-B-p7-m2"]
    assert row_b["kodaira"] == "I22" and row_b["vdelta_min"] == 22
    assert "case-D-p7-m2" in labels


def test_check11_padic_rejects_bad_primes(capsys):
    code, _, err = run_cli(capsys, "check11-padic", "--primes", "3")
    assert code == 2 and "primes" in err
    code, _, err = run_cli(capsys, "check11-padic", "--primes", "9")
    assert code == 2


def test_check_ff_literal(capsys):
    code, out, _ = run_cli(capsys, "check-ff", "--p", "5", "--f", "t")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    case = report["cases"][0]
    assert case["tamagawa"] == 25
    tsv = report["tsv"]
    lines = tsv.strip().split("\n")
    assert lines[0].split("\t") == list(TSV_COLUMNS)
    places = {line.split("\t")[2]: line.split("\t") for line in lines[1:]}
    assert places["t"][4] == "I5" and places["t"][5] == "true" and places["t"][7] == "5"


def test_check_ff_rejects_constant_literal(capsys):
    code, _, err = run_cli(capsys, "check-ff", "--p", "5", "--f", "3")
    assert code == 2 and "nonconstant" in err


def test_check_ff_rejects_bad_p(capsys):
    code, _, _ = run_cli(capsys, "check-ff", "--p", "13")
    assert code == 2


def test_check_ff_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "check-ff", "--p", "5", "--count", "3", "--seed", "4")
    code2, out2, _ = run_cli(capsys, "check-ff", "--p", "5", "--count", "3", "--seed", "4")
    assert code1 == code2 == 0
    assert out1 == out2
    _, out3, _ = run_cli(capsys, "check-ff", "--p", "5", "--count", "3", "--seed", "5")
    assert out3 != out1


def test_check11_padic_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "check11-padic", "--primes", "5,7", "--pole-orders", "1")
    _, out2, _ = run_cli(capsys, "check11-padic", "--primes", "5,7", "--pole-orders", "1")
    assert out1 == out2


def test_tamagawa_hand_cases(capsys):
    code, out, _ = run_cli(
        capsys,
        "tamagawa",
        "--curve",
        '{"field":{"kind":"Q"},"a":["0","0","0","0","5"]}',
        "--place",
        "5",
    )
    assert code == 0
    data = json.loads(out)
    assert data["type"] == "II" and data["c"] == 1 and data["vdelta"] == 2

    code, out, _ = run_cli(
        capsys,
        "tamagawa",
        "--curve",
        '{"field":{"kind":"Q"},"a":["0","3","0","0","5"]}',
        "--place",
        "5",
    )
    data = json.loads(out)
    assert data["type"] == "I1" and data["split"] is False and data["c"] == 1

    code, out, _ = run_cli(
        capsys,
        "tamagawa",
        "--curve",
        '{"field":{"kind":"Fp_t","p":5},"a":["1-t","-t","-t","0","0"]}',
        "--place",
        "t",
    )
    data = json.loads(out)
    assert data["type"] == "I5" and data["split"] is True and data["c"] == 5


def test_tamagawa_rejects_small_residue_char(capsys):
    code, _, err = run_cli(
        capsys,
        "tamagawa",
        "--curve",
        '{"field":{"kind":"Q"},"a":["0","0","0","0","5"]}',
        "--place",
        "3",
    )
    assert code == 2
    assert "residue characteristic" in err


def test_tamagawa_rejects_malformed_input(capsys):
    code, _, _ = run_cli(capsys, "tamagawa", "--curve", "{oops", "--place", "5")
    assert code == 2
    code, _, _ = run_cli(
        capsys,
        "tamagawa",
        "--curve",
        '{"field":{"kind":"Q"},"a":["0","0","0","0"]}',
        "--place",
        "5",
    )
    assert code == 2
    code, _, _ = run_cli(
        capsys,
        "tamagawa",
        "--curve",
        '{"field":{"kind":"Fp_t","p":5},"a":["1-t","-t","-t","0","0"]}',
        "--place",
        "t^2+4*t+4",  # reducible
    )
    assert code == 2


def test_torsion_order_fixtures(capsys):
    code, out, _ = run_cli(capsys, "torsion-order", "--fixture", "krumm-13-cubic")
    assert code == 0 and out.strip() == "13"
    code, out, _ = run_cli(capsys, "torsion-order", "--fixture", "krumm-17-quartic")
    assert code == 0 and out.strip() == "17"


def test_torsion_order_explicit_curve(capsys):
    code, out, _ = run_cli(
        capsys,
        "torsion-order",
        "--curve",
        '{"field":{"kind":"Fp_t","p":7},"a":["1-(t^2-t)","-(t^3-t^2)","-(t^3-t^2)","0","0"]}',
        "--point",
        "0,0",
    )
    assert code == 0 and out.strip() == "7"


def test_torsion_order_number_field_curve(capsys):
    code, out, _ = run_cli(
        capsys,
        "torsion-order",
        "--curve",
        '{"field":{"kind":"number_field","modulus":"t^3+2*t^2-t-1"},'
        '"a":["-2*t^2+2","-9*t^2+2*t+4","-9*t^2+2*t+4","0","0"]}',
        "--point",
        "0,0",
    )
    assert code == 0 and out.strip() == "13"


def test_torsion_order_off_curve_point(capsys):
    code, _, _ = run_cli(
        capsys,
        "torsion-order",
        "--curve",
        '{"field":{"kind":"Q"},"a":["0","0","0","0","1"]}',
        "--point",
        "1,1",
    )
    assert code == 2


def test_torsion_order_requires_arguments(capsys):
    code, _, _ = run_cli(capsys, "torsion-order")
    assert code == 2


def test_element_literal_grammar():
    from kodaira import GF, FunctionField, QQ
    from kodaira.literals import parse_element

    field = FunctionField(GF(5))
    f = parse_element("(t^2+1)/(t*(t+4))", field)
    assert f.num.render() == "t^2+1"
    assert f.den.render() == "t^2+4*t"
    assert parse_element(" 3 / 4 ", QQ) == QQ.coerce(3) / 4
    assert parse_element("-t^2 + 2*t - 1", field) == -(field.gen - 1) ** 2
    with pytest.raises(ValueError):
        parse_element("t", QQ)
    with pytest.raises(ValueError):
        parse_element("t^", field)
    with pytest.raises(ValueError):
        parse_element("(t+1", field)
