"""Rational maps: evaluation, derivatives, the tilde transform and friends."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import (
    DegenerateError,
    IndeterminateError,
    NotLFMError,
    ZeroDenominatorError,
)
from .polynomial import ComplexPoly
from .roots import poly_roots

COPRIME_TOL = 1e-9
VANISH_RTOL = 1e-14


class PointAtInfinity:
    """The point at infinity of the Riemann sphere (singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __reduce__(self):
        return (PointAtInfinity, ())


INFINITY = PointAtInfinity()
ExtendedValue = Union[complex, PointAtInfinity]


def is_infinite(v) -> bool:
    return v is INFINITY


def _as_poly(p) -> ComplexPoly:
    if isinstance(p, ComplexPoly):
        return p
    if np.isscalar(p):
        return ComplexPoly([p])
    return ComplexPoly(p)


def _remove_common_roots(num: ComplexPoly, den: ComplexPoly, tol: float, seed: int):
    while num.degree() >= 1 and den.degree() >= 1:
        small, other = (num, den) if num.degree() <= den.degree() else (den, num)
        common = None
        for r, _ in poly_roots(small, seed=seed):
            scale = other.abs_eval(r)
            if scale == 0 or abs(other(r)) <= tol * scale:
                common = r
                break
        if common is None:
            break
        num, _ = num.divmod_linear(common)
        den, _ = den.divmod_linear(common)
    return num, den


@dataclass(frozen=True, init=False)
class RationalMap:
    """Reduced quotient ``num / denom`` with a monic denominator.

    Common roots of numerator and denominator (detected by a relative residual
    test at ``coprime_tol``) are divided out on construction.
    """

    num: ComplexPoly
    denom: ComplexPoly

    def __init__(self, num, denom=1, coprime_tol: float = COPRIME_TOL, reduce: bool = True):
        num = _as_poly(num)
        denom = _as_poly(denom)
        if denom.is_zero():
            raise ZeroDenominatorError("denominator is identically zero")
        if num.is_zero():
            num, denom = ComplexPoly.zero(), ComplexPoly([1])
        else:
            # exact z-power factors first, then numerical common roots
            k = min(num.valuation(), denom.valuation())
            num, denom = num.shift_down(k), denom.shift_down(k)
            if reduce:
                num, denom = _remove_common_roots(num, denom, coprime_tol, seed=0)
        lead = denom.lead
        with np.errstate(over="ignore", invalid="ignore"):
            nm = num.array / lead
            den = denom.array / lead
        if not (np.all(np.isfinite(nm)) and np.all(np.isfinite(den))):
            raise ValueError("coefficients overflow when the denominator is made monic")
        den[-1] = 1.0  # complex division of lead by itself need not round to 1
        object.__setattr__(self, "num", ComplexPoly(nm))
        object.__setattr__(self, "denom", ComplexPoly(den))

    @classmethod
    def lfm(cls, a, b, c, d) -> RationalMap:
        """The linear fractional map ``(a z + b) / (c z + d)``."""
        return cls(ComplexPoly([b, a]), ComplexPoly([d, c]))

    @classmethod
    def polynomial(cls, coeffs) -> RationalMap:
        return cls(ComplexPoly(coeffs), ComplexPoly([1]))

    @classmethod
    def kernel(cls, w) -> RationalMap:
        """Reproducing kernel ``1 / (1 - conj(w) z)`` as a rational function."""
        return cls(ComplexPoly([1]), ComplexPoly([1, -np.conj(w)]))

    @classmethod
    def identity(cls) -> RationalMap:
        return cls(ComplexPoly([0, 1]))

    def degree(self) -> int:
        return max(self.num.degree(), self.denom.degree(), 0)

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.denom.degree() == 0

    def is_polynomial(self) -> bool:
        return self.denom.degree() == 0

    def __call__(self, z):
        """Vectorized evaluation; poles evaluate to complex infinity."""
        with np.errstate(divide="ignore", invalid="ignore"):
            return self.num(z) / self.denom(z)

    def poles(self) -> list[tuple[complex, int]]:
        if self.denom.degree() < 1:
            return []
        return poly_roots(self.denom)

    def allclose(self, other: RationalMap, atol: float = 1e-12) -> bool:
        return self.num.allclose(other.num, atol) and self.denom.allclose(other.denom, atol)

    def __repr__(self) -> str:
        return f"RationalMap(num={list(self.num.coeffs)!r}, denom={list(self.denom.coeffs)!r})"


def rat_eval(R: RationalMap, z) -> ExtendedValue:
    """Value of ``R`` at a scalar ``z``; ``INFINITY`` at a pole."""
    n = complex(R.num(z))
    d = complex(R.denom(z))
    n_small = abs(n) <= VANISH_RTOL * R.num.abs_eval(z)
    d_small = abs(d) <= VANISH_RTOL * R.denom.abs_eval(z)
    if d_small and n_small:
        raise IndeterminateError(f"0/0 at z={z!r}")
    if d_small:
        return INFINITY
    return n / d


def rat_derivative(R: RationalMap) -> RationalMap:
    p, q = R.num, R.denom
    return RationalMap(p.derivative() * q - p * q.derivative(), q * q)


def tilde_transform(R: RationalMap) -> RationalMap:
    """The rational map ``z -> conj(R(1 / conj(z)))``.

    Conjugating and reversing both coefficient lists to the common degree
    ``d = max(deg num, deg denom)`` multiplies top and bottom by ``z**d``.
    """
    d = max(R.num.degree(), R.denom.degree())
    return RationalMap(R.num.conj().reversed(d), R.denom.conj().reversed(d))


def map_at_infinity(R: RationalMap) -> ExtendedValue:
    dn, dd = R.num.degree(), R.denom.degree()
    if R.num.is_zero() or dn < dd:
        return 0j
    if dn > dd:
        return INFINITY
    return complex(R.num.lead / R.denom.lead)


def lfm_coefficients(R: RationalMap) -> tuple[complex, complex, complex, complex]:
    """``(a, b, c, d)`` with ``R(z) = (a z + b) / (c z + d)``."""
    if R.num.degree() > 1 or R.denom.degree() > 1:
        raise NotLFMError("map is not linear fractional")
    n = list(R.num.coeffs) + [0j] * (2 - len(R.num.coeffs))
    m = list(R.denom.coeffs) + [0j] * (2 - len(R.denom.coeffs))
    return n[1], n[0], m[1], m[0]


def invert_lfm(R: RationalMap) -> RationalMap:
    a, b, c, d = lfm_coefficients(R)
    # scale first so that ad - bc cannot overflow
    m = max(abs(a), abs(b), abs(c), abs(d))
    a, b, c, d = a / m, b / m, c / m, d / m
    det = a * d - b * c
    if abs(det) <= 1e-14 * (abs(a * d) + abs(b * c)) or det == 0:
        raise DegenerateError("ad - bc = 0; the map is constant")
    return RationalMap.lfm(d, -b, -c, a)


@dataclass(frozen=True)
class SelfMapReport:
    ok: bool
    max_boundary_modulus: float
    min_pole_modulus: float

    def __bool__(self) -> bool:
        return self.ok


def is_self_map_of_disk(R: RationalMap, n_samples: int = 1024, tol: float = 1e-9) -> SelfMapReport:
    """Check that ``R`` maps the unit disk into itself.

    By the maximum principle it suffices that ``R`` has no poles in the closed
    disk and that ``|R| <= 1`` on the unit circle.
    """
    if n_samples < 256:
        raise ValueError("n_samples must be at least 256")
    poles = [r for r, _ in R.poles()]
    min_pole = min((abs(r) for r in poles), default=np.inf)
    if min_pole <= 1 + tol:
        return SelfMapReport(False, np.inf, float(min_pole))
    zeta = np.exp(2j * np.pi * np.arange(n_samples) / n_samples)
    mx = float(np.max(np.abs(R(zeta))))
    return SelfMapReport(mx <= 1 + tol, mx, float(min_pole))
