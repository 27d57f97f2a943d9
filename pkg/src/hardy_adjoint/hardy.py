"""Truncated Hardy-space computations on the monomial basis.

Functions are represented by their first ``N`` Taylor coefficients. Coefficients
of analytic functions are extracted from equispaced samples on a circle of
radius ``r`` by the FFT (a discrete Cauchy integral); the extraction error is
the aliased tail of the series, roughly ``(r / R)**M`` for a function analytic
in ``|z| < R``, while rounding in coefficient ``n`` grows like ``r**-n``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PoleCollisionError, RadiusTooSmallError
from .polynomial import ComplexPoly
from .rational import RationalMap

POLE_GUARD = 1e-6


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """First ``N`` Taylor coefficients; ``coeffs[n]`` multiplies ``z**n``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size == 0:
            raise ValueError("a truncated series needs at least one coefficient")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_poly(cls, p, N: int | None = None) -> TruncatedSeries:
        a = np.asarray(p.coeffs if isinstance(p, ComplexPoly) else p, dtype=complex)
        N = a.size if N is None else N
        out = np.zeros(N, dtype=complex)
        out[: min(N, a.size)] = a[:N]
        return cls(out)

    @classmethod
    def monomial(cls, n: int, N: int) -> TruncatedSeries:
        c = np.zeros(N, dtype=complex)
        c[n] = 1
        return cls(c)

    @property
    def N(self) -> int:
        return self.coeffs.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def padded(self, N: int) -> np.ndarray:
        out = np.zeros(N, dtype=complex)
        n = min(N, self.N)
        out[:n] = self.coeffs[:n]
        return out

    def to_poly(self) -> ComplexPoly:
        return ComplexPoly(self.coeffs)

    def __call__(self, z):
        return self.to_poly()(z)

    def __len__(self) -> int:
        return self.N

    def __repr__(self) -> str:
        return f"TruncatedSeries(N={self.N}, coeffs={np.array2string(self.coeffs[:6], precision=4)}...)"


@dataclass(frozen=True, eq=False)
class BoundarySamples:
    """Values at ``radius * exp(1j * (phase + 2 pi k / M))``, k = 0..M-1."""

    values: np.ndarray
    radius: float = 1.0
    phase: float = 0.0

    def __post_init__(self):
        v = np.array(self.values, dtype=complex).ravel()
        M = v.size
        if M < 1 or M & (M - 1):
            raise ValueError("sample count must be a power of two")
        if not 0 < self.radius <= 1:
            raise ValueError("radius must lie in (0, 1]")
        object.__setattr__(self, "values", v)

    @property
    def M(self) -> int:
        return self.values.size

    def points(self) -> np.ndarray:
        return circle_points(self.radius, self.M, self.phase)


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Matrix of ``C_phi`` on ``{z**n}``; column j holds the coefficients of ``phi**j``."""

    entries: np.ndarray

    @property
    def N(self) -> int:
        return self.entries.shape[0]


def circle_points(r: float, M: int, phase: float = 0.0) -> np.ndarray:
    return r * np.exp(1j * (phase + 2 * np.pi * np.arange(M) / M))


def sample_circle(func, r: float, M: int, phase: float = 0.0) -> BoundarySamples:
    """Sample a vectorized callable on the circle of radius ``r``."""
    return BoundarySamples(func(circle_points(r, M, phase)), r, phase)


def inner_product(f: TruncatedSeries, g: TruncatedSeries) -> complex:
    N = max(f.N, g.N)
    return complex(np.sum(f.padded(N) * np.conj(g.padded(N))))


def kernel_at(w, N: int) -> TruncatedSeries:
    """Truncated reproducing kernel ``K_w(z) = 1 / (1 - conj(w) z)``."""
    w = complex(w)
    if not abs(w) < 1:
        raise ValueError("kernel point must lie in the open unit disk")
    return TruncatedSeries(np.conj(w) ** np.arange(N))


def _fourier(s: BoundarySamples) -> np.ndarray:
    return np.fft.fft(s.values) / s.M


def series_from_samples(s: BoundarySamples, N: int) -> TruncatedSeries:
    """Taylor coefficients from samples of a function analytic on ``|z| <= r``."""
    n = min(N, s.M)
    with np.errstate(under="ignore"):
        scale = s.radius ** np.arange(n)
    if n and scale[-1] < 1e-300:
        raise RadiusTooSmallError(f"radius {s.radius} underflows at order {n - 1}")
    c = _fourier(s)[:n] / (scale * np.exp(1j * s.phase * np.arange(n)))
    out = np.zeros(N, dtype=complex)
    out[:n] = c
    return TruncatedSeries(out)


def riesz_project(s: BoundarySamples, N: int | None = None) -> TruncatedSeries:
    """Orthogonal projection of boundary data onto H^2 (drop negative frequencies)."""
    if s.radius != 1:
        raise ValueError("projection needs samples on the unit circle")
    half = s.M // 2
    N = half if N is None else N
    n = min(N, half)
    c = _fourier(s)[:n] * np.exp(-1j * s.phase * np.arange(n))
    out = np.zeros(N, dtype=complex)
    out[:n] = c
    return TruncatedSeries(out)


def negative_fourier_coeffs(s: BoundarySamples, n_max: int) -> np.ndarray:
    """Fourier coefficients ``c_{-1}, ..., c_{-n_max}`` of boundary data."""
    if s.radius != 1:
        raise ValueError("Fourier coefficients need samples on the unit circle")
    if n_max >= s.M // 2:
        raise ValueError("n_max must be below M / 2")
    X = _fourier(s)
    n = np.arange(1, n_max + 1)
    return X[s.M - n] * np.exp(1j * s.phase * n)


def _as_evaluator(f):
    if isinstance(f, RationalMap):
        poles = np.array([r for r, _ in f.poles()], dtype=complex)
        return f, poles
    if isinstance(f, TruncatedSeries):
        return f.to_poly(), np.array([], dtype=complex)
    if isinstance(f, ComplexPoly):
        return f, np.array([], dtype=complex)
    raise TypeError(f"cannot compose {type(f).__name__}")


def _min_distance(points, poles) -> float:
    if poles.size == 0:
        return np.inf
    return float(np.min(np.abs(points[:, None] - poles[None, :])))


def _guarded_samples(func_poles, phi: RationalMap, r: float, M: int):
    """Sample ``phi`` on a grid kept away from its poles and from poles of ``f``."""
    f_poles = func_poles
    phi_poles = np.array([p for p, _ in phi.poles()], dtype=complex)
    for phase in (0.0, np.pi / M):
        z = circle_points(r, M, phase)
        if _min_distance(z, phi_poles) <= POLE_GUARD:
            continue
        w = phi(z)
        if not np.all(np.isfinite(w)) or _min_distance(w, f_poles) <= POLE_GUARD:
            continue
        return w, phase
    raise PoleCollisionError("sampling grid meets a pole even after a half-step shift")


def compose_series(f, phi: RationalMap, N: int = 64, r: float = 0.5, M: int = 512) -> TruncatedSeries:
    """First ``N`` Taylor coefficients of ``f o phi``."""
    ev, f_poles = _as_evaluator(f)
    w, phase = _guarded_samples(f_poles, phi, r, M)
    vals = ev(w)
    if not np.all(np.isfinite(vals)):
        raise PoleCollisionError("f o phi is not finite on the sampling circle")
    return series_from_samples(BoundarySamples(vals, r, phase), N)


def comp_op_matrix(phi: RationalMap, N: int = 64, r: float = 1.0, M: int = 512) -> OperatorMatrix:
    """Matrix of the composition operator truncated to ``span{1, z, ..., z**(N-1)}``.

    Every column is a power of ``phi``, which is analytic on a neighbourhood of
    the closed disk, so the unit circle is the default sampling radius: it keeps
    rounding in high-order coefficients at machine level.
    """
    w, phase = _guarded_samples(np.array([], dtype=complex), phi, r, M)
    powers = w[:, None] ** np.arange(N)[None, :]
    n = min(N, M)
    C = np.fft.fft(powers, axis=0)[:n] / M
    scale = (r ** np.arange(n)) * np.exp(1j * phase * np.arange(n))
    A = np.zeros((N, N), dtype=complex)
    A[:n] = C / scale[:, None]
    return OperatorMatrix(A)


def oracle_adjoint_apply(
    phi: RationalMap, g: TruncatedSeries, N: int | None = None, r: float = 1.0, M: int = 512
) -> TruncatedSeries:
    """Brute-force adjoint: the conjugate transpose of the truncated matrix applied to ``g``."""
    N = g.N if N is None else N
    A = comp_op_matrix(phi, N, r, M).entries
    return TruncatedSeries(A.conj().T @ g.padded(N))
