import json

import pytest

from hardy_adjoint import RationalMap, classify_map, is_self_map_of_disk
from hardy_adjoint.config import DEFAULT_CONFIG, DEFAULT_SEED
from hardy_adjoint.verification import (
    CATALOG,
    SUITES,
    Case,
    VerifyReport,
    check_adjoint_identity,
    check_against_oracle,
    check_kernel_identity,
    check_negative_fourier_suite,
    demo_counterexamples,
    run_all,
    run_suite,
)

ENGINE_OPERATIONS = {
    "classify_map",
    "branch_solve",
    "adjoint_eval",
    "adjoint_coeffs",
    "lfm_adjoint_eval",
    "uncorrected_cg_eval",
    "bourdon_adjoint_eval",
}


@pytest.fixture(scope="module")
def reports():
    return run_all(DEFAULT_CONFIG, DEFAULT_SEED)


def test_catalog_maps_are_self_maps(test_map):
    assert is_self_map_of_disk(test_map.map).ok
    assert classify_map(test_map.map).kind is test_map.class_expected


def test_all_suites_pass(reports):
    for rep in reports:
        assert rep.passed, rep.summary()


def test_coverage(reports):
    maps = set().union(*(r.maps for r in reports))
    ops = set().union(*(r.operations for r in reports))
    assert {t.name for t in CATALOG} <= maps
    assert ENGINE_OPERATIONS <= ops


def test_deterministic(reports):
    again = run_all(DEFAULT_CONFIG, DEFAULT_SEED)
    a = json.dumps([r.to_dict() for r in reports], sort_keys=True)
    b = json.dumps([r.to_dict() for r in again], sort_keys=True)
    assert a == b


def test_seed_changes_cases():
    a = run_suite("kernel", DEFAULT_CONFIG, 1).to_dict()
    b = run_suite("kernel", DEFAULT_CONFIG, 2).to_dict()
    assert a["seed"] == 1 and b["seed"] == 2
    assert a["cases"] != b["cases"]


def test_report_pass_rule():
    rep = VerifyReport("x", 0)
    rep.add("a", 1e-9, 1e-8)
    assert rep.passed
    rep.add("b", 0.05, 0.1, ">=")
    assert not rep.passed
    assert Case("c", 2.0, 0.1, ">=").passed
    # ">=" cases record required deviations, not errors
    assert rep.max_error == pytest.approx(1e-9)


def test_adjoint_identity_examples():
    z3 = RationalMap([0, 0, 0, 1])
    assert check_adjoint_identity(z3, trials=100, max_deg=8).max_error <= 1e-9
    ext = RationalMap([0, 2], [4, 1])
    assert check_adjoint_identity(ext, trials=100, max_deg=8).max_error <= 1e-8
    assert check_adjoint_identity(RationalMap.identity(), trials=100, max_deg=8).max_error <= 1e-13


def test_kernel_identity_constant_map():
    rep = check_kernel_identity(RationalMap([0.3 - 0.2j]))
    assert rep.passed and rep.max_error <= 1e-12


def test_oracle_max_degree_guard():
    with pytest.raises(ValueError):
        check_against_oracle(RationalMap([0, 0, 1]), max_deg=DEFAULT_CONFIG.n_terms // 4 + 1)


def test_counterexample_magnitudes():
    rep = demo_counterexamples()
    errs = [c.error for c in rep.cases]
    assert rep.passed
    assert any(abs(e - 2) < 1e-12 for e in errs)
    assert any(abs(e - 8 / 7) < 1e-12 for e in errs)


def test_negative_fourier_suite_skips_boundary():
    rep = check_negative_fourier_suite()
    assert rep.passed
    assert "boundary_lfm" not in rep.maps and "bourdon" not in rep.maps


def test_suite_names():
    assert set(SUITES) == {
        "classification", "adjoint", "kernel", "oracle", "closed_forms",
        "counterexamples", "negative_fourier", "analyticity",
    }
    with pytest.raises(KeyError):
        run_suite("nope")
