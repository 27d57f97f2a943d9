import json
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from hardy_adjoint import RationalMap, format_map, parse_complex, parse_map
from hardy_adjoint.cli import main
from hardy_adjoint.errors import ZeroDenominatorError
from hardy_adjoint.parser import MapSyntaxError


def test_parse_examples():
    R = parse_map("(2*z)/(z+4)")
    assert R.num.coeffs == (0, 2) and R.denom.coeffs == (4, 1)
    R = parse_map("0.5*z^2 + 0.5*z")
    assert R.num.coeffs == (0, 0.5, 0.5) and R.denom.coeffs == (1,)
    R = parse_map("(1+2i)*z")
    assert R.num.coeffs == (0, 1 + 2j)


def test_parse_complex_literals():
    assert parse_complex("0.25") == 0.25
    assert parse_complex("-1e-3i") == -1e-3j
    assert parse_complex("0.1+0.2i") == 0.1 + 0.2j
    assert parse_complex("i") == 1j
    with pytest.raises(MapSyntaxError):
        parse_complex("z")


def test_parse_precedence():
    assert parse_map("-z^2").num.coeffs == (0, 0, -1)
    assert parse_map("2*z^2/4").num.coeffs == (0, 0, 0.5)
    assert parse_map("1-0.5i*z").num.coeffs == (1, -0.5j)


@pytest.mark.parametrize("text, pos", [("z+", 2), ("2*(z+1", 6), ("z^1.5", 2), ("q", 0), ("z $ 1", 2), ("", 0)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(MapSyntaxError) as info:
        parse_map(text)
    assert info.value.position == pos


def test_zero_denominator():
    with pytest.raises(ZeroDenominatorError):
        parse_map("z/0")
    with pytest.raises(ZeroDenominatorError):
        parse_map("1/(z-z)")


def test_reduces_common_factor():
    R = parse_map("(z^2-1)/(z-1)")
    assert R.allclose(RationalMap([1, 1]), 1e-12)


def test_monic_overflow_rejected():
    with pytest.raises(ValueError, match="overflow"):
        RationalMap([2j], [1e-308j])


def test_catalog_round_trip(test_map):
    assert parse_map(format_map(test_map.map)) == test_map.map


# desk-scale coefficients: zero or of modulus between 1e-3 and 10
part = st.one_of(st.just(0.0), st.floats(1e-3, 10), st.floats(-10, -1e-3))
cplx = st.builds(complex, part, part)


@settings(max_examples=100, deadline=None)
@given(st.lists(cplx, min_size=1, max_size=5), st.lists(cplx, min_size=1, max_size=4))
def test_round_trip_random(num, den):
    try:
        R = RationalMap(num, den)
    except ZeroDenominatorError:
        return
    assert parse_map(format_map(R)) == R


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_cli_classify(capsys):
    code, doc = run(capsys, "classify", "z/(2*z+4)")
    assert code == 0 and doc["class"] == "Interior"
    assert doc["phi_inf"] == {"re": 0.5, "im": 0.0}
    code, doc = run(capsys, "classify", "z^3")
    assert code == 0 and doc["class"] == "Infinity" and doc["phi_inf"] == "infinity"
    code, doc = run(capsys, "classify", "z/(z+4)")
    assert doc["class"] == "Boundary" and doc["phi_inf"]["re"] == 1


def test_cli_branches(capsys):
    code, doc = run(capsys, "branches", "z^2", "--at", "0.25")
    assert code == 0
    br = sorted(doc["points"][0]["branches"], key=lambda b: b["sigma"]["re"])
    assert [b["sigma"]["re"] for b in br] == pytest.approx([-0.5, 0.5])
    assert [b["psi"]["re"] for b in br] == pytest.approx([0.5, 0.5])
    code, doc = run(capsys, "branches", "(2*z)/(z+4)", "--at", "0.25")
    (b,) = doc["points"][0]["branches"]
    assert b["sigma"]["re"] == pytest.approx(-0.125) and b["psi"]["re"] == pytest.approx(-1)
    code, doc = run(capsys, "branches", "z", "--at", "0.1+0.2i", "--at", "-0.3")
    assert [p["branches"][0]["sigma"]["im"] for p in doc["points"]] == pytest.approx([0.2, 0])


def test_cli_adjoint(capsys):
    code, doc = run(capsys, "adjoint", "(2*z)/(z+4)", "--f", "1", "--coeffs", "4")
    assert code == 0
    np.testing.assert_allclose([c["re"] for c in doc["coeffs"]], [1, 0, 0, 0], atol=1e-12)
    code, doc = run(capsys, "adjoint", "z^2", "--f", "z^4+z^2", "--coeffs", "4")
    np.testing.assert_allclose([c["re"] for c in doc["coeffs"]], [0, 1, 1, 0], atol=1e-12)
    code, doc = run(capsys, "adjoint", "z", "--f", "z^3", "--at", "0.5")
    assert doc["values"][0]["value"]["re"] == pytest.approx(0.125)


@pytest.mark.parametrize("argv, code", [
    (["classify", "2*z"], 2),
    (["classify", "z+"], 2),
    (["classify", "z/0"], 2),
    (["branches", "z^2", "--at", "0"], 3),
    (["adjoint", "z^2", "--f", "1/(z-0.5)", "--at", "0.1"], 2),
    (["verify", "--suite", "kernel"], 0),
    (["verify", "--suite", "counterexamples"], 0),
])
def test_cli_exit_codes(capsys, argv, code):
    got, doc = run(capsys, *argv)
    assert got == code
    if code:
        assert "error" in doc


def test_cli_verify_failure_exit(capsys, monkeypatch):
    from hardy_adjoint import cli
    from hardy_adjoint.verification import VerifyReport

    def failing(name, cfg, seed):
        rep = VerifyReport(name, seed)
        rep.add("x", 1.0, 1e-8)
        return rep

    monkeypatch.setattr(cli, "run_suite", failing)
    code, doc = run(capsys, "verify", "--suite", "kernel")
    assert code == 1 and doc["pass"] is False


def test_cli_out_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code = main(["classify", "z/(z+4)", "--out", str(path)])
    out = capsys.readouterr().out
    assert code == 0
    assert path.read_text() == out


def test_cli_verify_all_subprocess():
    res = subprocess.run([sys.executable, "-m", "hardy_adjoint", "verify", "--all"],
                         capture_output=True, text=True, timeout=180)
    assert res.returncode == 0, res.stderr
    doc = json.loads(res.stdout)
    assert doc["pass"] and len(doc["reports"]) == 8
