import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from hardy_adjoint import ComplexPoly, poly_derivative, poly_eval, poly_roots
from hardy_adjoint.errors import DegreeZeroError
from hardy_adjoint.roots import aberth_batch, flat_roots


def test_eval_examples():
    assert poly_eval(ComplexPoly([1, 0, 1]), 1j) == 0
    assert poly_eval(ComplexPoly.zero(), 3.7 - 2j) == 0
    assert poly_eval(ComplexPoly([0, 2]), 1) == 2


def test_eval_is_vectorized():
    p = ComplexPoly([1, -2, 3])
    z = np.array([0, 1, 2j])
    np.testing.assert_allclose(p(z), 1 - 2 * z + 3 * z**2)


def test_canonical_form():
    p = ComplexPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree() == 1
    assert ComplexPoly([0, 0]).degree() == -1
    assert ComplexPoly([0, 0]).is_zero()


def test_derivative_examples():
    assert poly_derivative(ComplexPoly([0, 0, 0, 1])).coeffs == (0, 0, 3)
    assert poly_derivative(ComplexPoly([5])).is_zero()
    assert poly_derivative(ComplexPoly([13, -10, 1])).coeffs == (-10, 2)


def test_arithmetic():
    p = ComplexPoly([1, 1])
    q = ComplexPoly([-1, 1])
    assert (p * q).coeffs == (-1, 0, 1)
    assert (p + q).coeffs == (0, 2)
    assert (p - p).is_zero()
    assert (p**3).coeffs == (1, 3, 3, 1)
    quo, rem = ComplexPoly([-1, 0, 1]).divmod_linear(1)
    assert quo.coeffs == (1, 1) and rem == 0


def test_reversed():
    p = ComplexPoly([1, 2])
    assert p.reversed(3).coeffs == (0, 0, 2, 1)
    with pytest.raises(ValueError):
        p.reversed(0)


def test_roots_z2_plus_1():
    roots = poly_roots(ComplexPoly([1, 0, 1]))
    assert [m for _, m in roots] == [1, 1]
    np.testing.assert_allclose(sorted(r.imag for r, _ in roots), [-1, 1], atol=1e-15)


def test_roots_of_unity():
    roots = flat_roots(ComplexPoly([-1, 0, 0, 1]))
    want = np.exp(2j * np.pi * np.arange(3) / 3)
    for w in want:
        assert np.min(np.abs(roots - w)) < 1e-14


def test_double_root_detected():
    # (z - 0.3)^2 (z + 2) = z^3 + 1.4 z^2 - 1.11 z + 0.18
    p = ComplexPoly([0.18, -1.11, 1.4, 1])
    assert p.allclose(ComplexPoly.from_roots([0.3, 0.3, -2]), 1e-15)
    roots = poly_roots(p)
    assert len(roots) == 2
    (r1, m1), (r2, m2) = roots
    assert m1 == 1 and abs(r1 + 2) < 1e-13
    assert m2 == 2 and abs(r2 - 0.3) < 1e-10


def test_fourfold_root_merged():
    roots = poly_roots(ComplexPoly.from_roots([1, 1, 1, 1]))
    assert len(roots) == 1
    r, m = roots[0]
    assert m == 4 and abs(r - 1) < 1e-12


def test_close_distinct_roots_not_merged():
    roots = poly_roots(ComplexPoly.from_roots([1, 1.001]))
    assert [m for _, m in roots] == [1, 1]


def test_zero_roots_exact():
    roots = poly_roots(ComplexPoly([0, 0, 1, 1]))
    assert (0j, 2) in roots
    assert any(abs(r + 1) < 1e-15 and m == 1 for r, m in roots)


def test_constant_has_no_roots():
    with pytest.raises(DegreeZeroError):
        poly_roots(ComplexPoly([3]))
    with pytest.raises(DegreeZeroError):
        poly_roots(ComplexPoly.zero())


@pytest.mark.parametrize("deg", [2, 5, 8, 20, 40])
def test_roots_against_companion_eigenvalues(deg):
    rng = np.random.default_rng(deg)
    c = rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)
    p = ComplexPoly(c)
    ours = flat_roots(p)
    ref = np.roots(c[::-1])
    for r in ref:
        assert np.min(np.abs(ours - r)) < 1e-8 * (1 + abs(r))
    assert max(abs(p(r)) for r in ours) <= 1e-10 * (1 + p.norm1())


def test_batch_matches_single():
    rng = np.random.default_rng(3)
    C = rng.normal(size=(7, 5)) + 1j * rng.normal(size=(7, 5))
    batch = aberth_batch(C, seed=1)
    for row, roots in zip(C, batch):
        single = flat_roots(ComplexPoly(row), seed=9)
        for r in single:
            assert np.min(np.abs(roots - r)) < 1e-12 * (1 + abs(r))


unit_disk = st.builds(
    lambda r, t: np.sqrt(r) * np.exp(2j * np.pi * t),
    st.floats(0.05, 1.0),
    st.floats(0, 1),
)


@settings(max_examples=60, deadline=None)
@given(st.lists(unit_disk, min_size=1, max_size=4), st.lists(unit_disk, min_size=1, max_size=4))
def test_roots_of_product_are_union(ra, rb):
    p = ComplexPoly.from_roots(ra)
    q = ComplexPoly.from_roots(rb)
    got = flat_roots(p * q)
    want = np.array(ra + rb)
    assert got.size == want.size
    pq = p * q
    for w in want:
        # forward error of an m-fold root under rounding of the coefficients
        m = int(np.sum(np.abs(want - w) < 1e-12))
        dm = abs(pq.derivative(m)(w)) / math.factorial(m)
        cond = (np.finfo(float).eps * pq.abs_eval(w) / dm) ** (1.0 / m)
        assert np.min(np.abs(got - w)) <= 100 * cond + 1e-14


@settings(max_examples=60, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=1, allow_nan=False, allow_infinity=False),
                min_size=3, max_size=9))
def test_root_residual(coeffs):
    p = ComplexPoly(coeffs)
    assume(p.degree() >= 1 and abs(p.lead) > 1e-6 * p.norm1())
    for r, m in poly_roots(p):
        if m == 1:
            # backward error; equals the absolute bound 1e-10 (1 + |p|_1) for |r| <= 1
            assert abs(p(r)) <= 1e-10 * (1 + p.abs_eval(r))
