import json
from fractions import Fraction

import pytest

from heckediv import cli, forms as F
from heckediv.curve import Divisor
from heckediv.series import PuiseuxSeries as S


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_qexp_round_trip(capsys):
    code, out = run_cli(capsys, "qexp", "--form", "E4", "--prec", "6")
    assert code == 0
    data = json.loads(out)
    assert S.from_json(data) == F.eisenstein(4, 6)


def test_algebra_mul_example(capsys):
    code, out = run_cli(capsys, "algebra-mul", "--N", "1", "--u", "T2", "--v", "T2")
    assert code == 0
    data = json.loads(out)
    assert data["terms"] == [{"a": 1, "d": 4, "mult": 1}, {"a": 2, "d": 2, "mult": 3}]
    from heckediv.algebra import AlgebraElement
    assert AlgebraElement.from_json(data).terms == (((1, 4), 1), ((2, 2), 3))


def test_hecke_mult_emits_the_series_json(capsys):
    code, out = run_cli(capsys, "hecke-mult", "--form", "E4", "--n", "2",
                        "--prec", "25")
    assert code == 0
    data = json.loads(out)
    assert data["weight"] == 12
    series = S.from_json(data)  # the payload is the series JSON itself
    rhs = F.eisenstein(12, 26) - Fraction(36882000, 691) * F.delta(26)
    assert series.equal_through(rhs, 20)


def test_hecke_add_normalizations(capsys):
    _, out_p = run_cli(capsys, "hecke-add", "--form", "Delta", "--n", "2",
                       "--prec", "10")
    _, out_c = run_cli(capsys, "hecke-add", "--form", "Delta", "--n", "2",
                       "--prec", "10", "--normalization", "classical")
    sp = S.from_json(json.loads(out_p))
    sc = S.from_json(json.loads(out_c))
    assert sp.coefficient(1) == Fraction(-3, 4)
    assert sc.coefficient(1) == -24


def test_divisor_and_hecke_div(capsys):
    code, out = run_cli(capsys, "divisor", "--form", "jminus:1728")
    assert code == 0
    D = Divisor.from_json(json.loads(out))
    assert D.degree == 0
    code2, out2 = run_cli(capsys, "hecke-div", "--form", "jminus:1728", "--n", "2")
    TD = Divisor.from_json(json.loads(out2))
    assert TD.cusp_coefficient(1, 0) == -3 and len(TD.interior) == 2
    # round trip
    assert Divisor.from_json(json.loads(json.dumps(TD.to_json()))) == TD


def test_bko_verb(capsys):
    code, out = run_cli(capsys, "bko", "--n", "1", "--form", "E4", "--digits", "35")
    assert code == 0
    data = json.loads(out)
    assert data["exact_s1"] == "-240"
    assert data["value"][0].startswith("-240.0")


def test_rohrlich_exact_and_numeric(capsys):
    code, out = run_cli(capsys, "rohrlich", "--m", "2", "--form", "E4")
    data = json.loads(out)
    assert code == 0 and data["exact"] and data["value"] == "53280"
    code2, out2 = run_cli(capsys, "rohrlich", "--m", "1", "--form", "E4",
                          "--s", "1.5", "--C", "80")
    data2 = json.loads(out2)
    assert code2 == 0 and data2["exact"] is False
    assert float(data2["value"][0]) != 0.0


def test_niebur_verb_schema(capsys):
    code, out = run_cli(capsys, "niebur", "--N", "1", "--m", "1", "--s", "1.5",
                        "--tau", "0,1", "--C", "40")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"value", "error", "C"}
    assert data["C"] == 40
    assert float(data["error"]) >= 0


def test_verify_exit_codes(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "algebra")
    assert code == 0
    reports = json.loads(out)
    assert all(r["passed"] for r in reports)


def test_table_format(capsys):
    code, out = run_cli(capsys, "--format", "table", "verify", "--suite", "algebra")
    assert code == 0
    assert out.count("PASS") == 3


def test_computation_error_exit_code(capsys):
    # composite n sharing a factor with the level -> module error, exit 1
    code, out = run_cli(capsys, "hecke-mult", "--form", "E4", "--n", "4",
                        "--level", "2")
    assert code == 1
    data = json.loads(out)
    assert data["error"] == "UnsupportedParameter"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["qexp", "--no-such-flag"])
    assert exc.value.code == 2


def test_unknown_suite_rejected():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "nope"])
    assert exc.value.code == 2
