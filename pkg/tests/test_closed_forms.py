import numpy as np
import pytest

from hardy_adjoint import (
    BOURDON_MAP,
    RationalMap,
    adjoint_coeffs,
    adjoint_eval,
    bourdon_adjoint_eval,
    branch_solve,
    lfm_adjoint_eval,
    monomial_adjoint_eval,
    quadratic_adjoint_eval,
)
from hardy_adjoint.errors import NotLFMError

from conftest import disk_points

EXT = RationalMap.lfm(2, 0, 1, 4)
ONE = RationalMap([1])


def test_lfm_constant_function(rng):
    for z in disk_points(rng, 10, 0.9):
        assert lfm_adjoint_eval(EXT, ONE, z) == pytest.approx(1, abs=1e-12)


def test_lfm_identity(rng):
    f = RationalMap([0.5, 1j, 2])
    for z in disk_points(rng, 10, 0.9):
        assert lfm_adjoint_eval(RationalMap.identity(), f, z) == pytest.approx(f(z), abs=1e-14)


def test_lfm_linear_is_weighted_composition():
    # phi = (a z + b)/d: C* f(z) = d~/(d~ - b~ z) f(a~ z/(d~ - b~ z))
    phi = RationalMap([0.25, 0.5])
    f = RationalMap([1, -2, 0.5j])
    z = 0.3 + 0.2j
    want = 1 / (1 - 0.25 * z) * f(0.5 * z / (1 - 0.25 * z))
    assert lfm_adjoint_eval(phi, f, z) == pytest.approx(want, abs=1e-15)


def test_lfm_rejects_quadratic():
    with pytest.raises(NotLFMError):
        lfm_adjoint_eval(RationalMap([0, 0, 1]), ONE, 0.1)


def test_monomial_hand_value():
    # z^2 adjoint sends z^4 + z^2 to z^2 + z
    f = RationalMap([0, 0, 1, 0, 1])
    z = 0.3 - 0.4j
    assert monomial_adjoint_eval(2, f, z) == pytest.approx(z**2 + z, abs=1e-15)


def test_quadratic_half_half_at_kernel(rng):
    w = 0.2 + 0.5j
    K = RationalMap.kernel(w)
    pw = 0.5 * w**2 + 0.5 * w
    for z in disk_points(rng, 10, 0.9):
        got = quadratic_adjoint_eval(0.5, 0.5, K, z)
        assert got == pytest.approx(1 / (1 - np.conj(pw) * z), abs=1e-12)


def test_bourdon_constant_matches_engine():
    assert bourdon_adjoint_eval(ONE, 0.3) == pytest.approx(adjoint_eval(BOURDON_MAP, ONE, 0.3), abs=1e-9)


def test_bourdon_kernel(rng):
    for w in disk_points(rng, 5, 0.9):
        pw = BOURDON_MAP(w)
        for z in disk_points(rng, 5, 0.9):
            got = bourdon_adjoint_eval(RationalMap.kernel(w), z)
            assert got == pytest.approx(1 / (1 - np.conj(pw) * z), abs=1e-10)


def test_bourdon_branches_match_solver(rng):
    for z in disk_points(rng, 20, 0.9):
        rt = np.sqrt(3 - 2 * z)
        bs = branch_solve(BOURDON_MAP, z)
        assert len(bs.branches) == 2
        for sign in (-1, 1):
            sigma = (3 * z - 5 + sign * 2 * rt) / (9 * z - 13)
            psi = sign * 2 * z / (rt * (3 * z - 4 + sign * rt))
            b = min(bs.branches, key=lambda br: abs(br.sigma - sigma))
            assert abs(b.sigma - sigma) < 1e-12
            assert abs(b.psi - psi) < 1e-10


def test_bourdon_radial_limit_at_origin():
    f = RationalMap([0.5, 1, -0.25j, 0.1])
    c0 = adjoint_coeffs(BOURDON_MAP, f).coeffs[0]
    for t in (1e-3, 1e-4, 1e-5):
        assert abs(bourdon_adjoint_eval(f, t) - c0) < 10 * t
