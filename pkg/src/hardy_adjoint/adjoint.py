"""Adjoint of a composition operator with rational symbol.

For a rational self-map ``phi`` of the unit disk,

    (C_phi^* f)(z) = sum_j psi_j(z) f(sigma_j(z)) + f(0) / (1 - conj(phi(inf)) z),

where the sigma_j(z) are all solutions ``s`` of ``phi~(s) = 1/z`` with
``phi~(s) = conj(phi(1/conj(s)))``, ``psi_j = z sigma_j' / sigma_j`` and the
last term is dropped when ``phi(inf)`` is infinite. Writing ``phi~ = p~/q~``,
the branch values are the roots of ``z p~(s) - q~(s)`` and implicit
differentiation gives ``psi_j = -1 / (z s_j phi~'(s_j))``.
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .config import DEFAULT_CONFIG, AdjointConfig
from .errors import (
    BranchPointProximityError,
    InvalidMapError,
    JitterExhaustedError,
    NonConvergenceError,
    NotSelfMapError,
    NumericalError,
    OriginNotSupportedError,
    PoleInDiskError,
    SingularPointError,
)
from .hardy import BoundarySamples, TruncatedSeries, circle_points, series_from_samples
from .polynomial import ComplexPoly
from .rational import (
    INFINITY,
    RationalMap,
    is_self_map_of_disk,
    map_at_infinity,
    tilde_transform,
)
from .roots import aberth_batch, horner_batch, poly_roots


class MapKind(enum.Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    EXTERIOR = "Exterior"
    INFINITY = "Infinity"
    CONSTANT = "Constant"


@dataclass(frozen=True)
class MapClass:
    kind: MapKind
    phi_inf: object  # complex or INFINITY

    @property
    def name(self) -> str:
        return self.kind.value


BOUNDARY_TOL = 1e-12


def classify_map(phi: RationalMap, check: bool = True) -> MapClass:
    """Classify ``phi`` by the modulus of its value at infinity."""
    if check:
        rep = is_self_map_of_disk(phi)
        if not rep.ok:
            raise NotSelfMapError(
                f"map does not take the disk into itself (max |phi| on circle = "
                f"{rep.max_boundary_modulus:.6g}, nearest pole at {rep.min_pole_modulus:.6g})"
            )
    v = map_at_infinity(phi)
    if phi.is_constant():
        return MapClass(MapKind.CONSTANT, v)
    if v is INFINITY:
        return MapClass(MapKind.INFINITY, v)
    m = abs(v)
    if abs(m - 1) <= BOUNDARY_TOL:
        return MapClass(MapKind.BOUNDARY, v)
    return MapClass(MapKind.INTERIOR if m < 1 else MapKind.EXTERIOR, v)


@dataclass(frozen=True)
class Branch:
    sigma: complex
    psi: complex
    multiplicity: int = 1
    residual: float = 0.0


@dataclass(frozen=True)
class BranchSet:
    """Branch values of sigma at ``z`` with their weights psi."""

    z: complex
    branches: tuple
    degree_deficit: int = 0
    zero_branches: int = 0
    escaped_branches: int = 0

    @property
    def sigmas(self) -> np.ndarray:
        return np.array([b.sigma for b in self.branches], dtype=complex)

    @property
    def psis(self) -> np.ndarray:
        return np.array([b.psi for b in self.branches], dtype=complex)


@dataclass(frozen=True)
class _TildeData:
    pt: np.ndarray
    qt: np.ndarray
    dpt: ComplexPoly
    dqt: ComplexPoly
    pt_poly: ComplexPoly
    qt_poly: ComplexPoly
    degree: int


@lru_cache(maxsize=256)
def _tilde_data(phi: RationalMap) -> _TildeData:
    t = tilde_transform(phi)
    D = max(t.num.degree(), t.denom.degree())
    pt = np.zeros(D + 1, dtype=complex)
    qt = np.zeros(D + 1, dtype=complex)
    pt[: len(t.num.coeffs)] = t.num.array
    qt[: len(t.denom.coeffs)] = t.denom.array
    return _TildeData(pt, qt, t.num.derivative(), t.denom.derivative(), t.num, t.denom, D)


# per-row status codes of the batched solver
_OK, _ORIGIN, _BRANCH_POINT, _ZERO, _ESCAPED, _RESIDUAL, _NONFINITE = range(7)
_STATUS_ERRORS = {
    _ORIGIN: (OriginNotSupportedError, "branch equation degenerates at z = 0"),
    _BRANCH_POINT: (BranchPointProximityError, "z is too close to a branch point"),
    _ZERO: (SingularPointError, "a branch value is 0 at this z"),
    _ESCAPED: (SingularPointError, "a branch value escaped to infinity at this z"),
    _RESIDUAL: (NonConvergenceError, "branch residual above tolerance"),
    _NONFINITE: (NonConvergenceError, "non-finite branch weight"),
}


def _psi_and_residual(td: _TildeData, z, s):
    ps, qs = td.pt_poly(s), td.qt_poly(s)
    dps, dqs = td.dpt(s), td.dqt(s)
    with np.errstate(divide="ignore", invalid="ignore"):
        # phi~' = (p~' q~ - p~ q~') / q~^2
        psi = -(qs * qs) / (z * s * (dps * qs - ps * dqs))
        resid = np.abs(z * ps / qs - 1)
    return psi, resid


def _solve_batch(phi: RationalMap, zs: np.ndarray, cfg: AdjointConfig):
    """Branch values and weights for every point of ``zs``.

    Returns ``(sigma, psi, status)`` with shapes (K, D), (K, D), (K,). Rows
    whose status is not ``_OK`` hold NaN.
    """
    td = _tilde_data(phi)
    zs = np.asarray(zs, dtype=complex).ravel()
    K, D = zs.size, td.degree
    sigma = np.full((K, D), np.nan + 0j)
    psi = np.full((K, D), np.nan + 0j)
    status = np.full(K, _OK)
    if D == 0:
        return sigma, psi, status

    status[zs == 0] = _ORIGIN
    C = zs[:, None] * td.pt[None, :] - td.qt[None, :]
    scale = np.max(np.abs(C), axis=1)
    escaped = np.abs(C[:, -1]) <= 1e-13 * scale
    status[escaped & (status == _OK)] = _ESCAPED
    rows = np.flatnonzero(status == _OK)
    if rows.size == 0:
        return sigma, psi, status

    s = aberth_batch(C[rows], seed=cfg.seed)
    z = zs[rows, None]
    st = np.full(rows.size, _OK)

    smax = np.max(np.abs(s), axis=1)
    st[np.min(np.abs(s), axis=1) <= cfg.delta_bp] = _ZERO
    if D > 1:
        gap = np.abs(s[:, :, None] - s[:, None, :])
        gap[:, np.eye(D, dtype=bool)] = np.inf
        near = np.min(gap, axis=(1, 2)) <= max(cfg.delta_bp, cfg.cluster_rtol) * (1 + smax)
        st[near & (st == _OK)] = _BRANCH_POINT

    p_val, _, p_scale = horner_batch(C[rows], s)
    root_bad = np.any(np.abs(p_val) > cfg.tol_root * p_scale, axis=1)
    w, resid = _psi_and_residual(td, z, s)
    bad_resid = root_bad | (np.max(resid, axis=1) > cfg.tol_branch * np.abs(zs[rows]))
    st[bad_resid & (st == _OK)] = _RESIDUAL
    st[~np.all(np.isfinite(w), axis=1) & (st == _OK)] = _NONFINITE

    good = st == _OK
    sigma[rows[good]] = s[good]
    psi[rows[good]] = w[good]
    status[rows] = st
    return sigma, psi, status


def _raise_for(code: int, z):
    exc, msg = _STATUS_ERRORS[code]
    raise exc(f"{msg} (z={complex(z)!r})")


def branch_solve(phi: RationalMap, z, cfg: AdjointConfig = DEFAULT_CONFIG) -> BranchSet:
    """All branches ``(sigma_j(z), psi_j(z))`` at a single nonzero point."""
    z = complex(z)
    if z == 0:
        raise OriginNotSupportedError("branch equation degenerates at z = 0")
    td = _tilde_data(phi)
    if td.degree == 0:
        return BranchSet(z, ())
    sig, ps, status = _solve_batch(phi, np.array([z]), cfg)
    code = int(status[0])
    if code in (_ZERO, _ESCAPED):
        return _degenerate_branch_set(phi, z, cfg)
    if code != _OK:
        _raise_for(code, z)
    _, resid = _psi_and_residual(td, z, sig[0])
    branches = tuple(
        Branch(complex(a), complex(b), 1, float(r)) for a, b, r in zip(sig[0], ps[0], resid)
    )
    return BranchSet(z, branches)


def _degenerate_branch_set(phi, z, cfg) -> BranchSet:
    """Slow path for points where a branch sits at 0 or at infinity."""
    td = _tilde_data(phi)
    P = (z * td.pt_poly - td.qt_poly).trim(1e-13)
    escaped = td.degree - max(P.degree(), 0)
    branches, zeros = [], 0
    if P.degree() >= 1:
        for r, m in poly_roots(P, cluster_rtol=cfg.cluster_rtol, seed=cfg.seed):
            if abs(r) <= cfg.delta_bp:
                zeros += m
                continue
            if m > 1:
                raise BranchPointProximityError(f"z is too close to a branch point (z={z!r})")
            w, resid = _psi_and_residual(td, z, np.array([r]))
            branches.append(Branch(complex(r), complex(w[0]), m, float(resid[0])))
    if zeros or escaped:
        warnings.warn(
            f"at z={z!r}: {zeros} branch value(s) at 0 and {escaped} at infinity were excluded",
            RuntimeWarning,
            stacklevel=3,
        )
    return BranchSet(z, tuple(branches), zeros + escaped, zeros, escaped)


def _as_rational(f) -> RationalMap:
    if isinstance(f, RationalMap):
        return f
    if isinstance(f, TruncatedSeries):
        return RationalMap.polynomial(f.coeffs)
    if isinstance(f, ComplexPoly):
        return RationalMap(f)
    if np.isscalar(f):
        return RationalMap.polynomial([f])
    raise TypeError(f"unsupported test function type {type(f).__name__}")


def _check_test_function(f: RationalMap):
    for r, _ in f.poles():
        if abs(r) <= 1:
            raise PoleInDiskError(f"test function has a pole at {r:.6g} in the closed disk")


def _correction(mc: MapClass, f0: complex, z):
    if mc.kind is MapKind.INFINITY:
        return np.zeros_like(z)
    with np.errstate(divide="ignore", invalid="ignore"):
        return f0 / (1 - np.conj(mc.phi_inf) * z)


def _adjoint_values(phi, f, zs, cfg, mc=None):
    """Adjoint formula at many points; returns ``(values, status)``."""
    mc = classify_map(phi) if mc is None else mc
    zs = np.asarray(zs, dtype=complex)
    f0 = complex(f(0))
    corr = _correction(mc, f0, zs)
    if mc.kind is MapKind.CONSTANT:
        return corr, np.full(zs.shape, _OK)
    sigma, psi, status = _branch_grid(phi, tuple(zs.ravel()), cfg)
    with np.errstate(invalid="ignore"):
        vals = np.sum(psi * f(sigma), axis=1).reshape(zs.shape) + corr
    return vals, status.reshape(zs.shape)


@lru_cache(maxsize=64)
def _branch_grid(phi, zs_tuple, cfg):
    return _solve_batch(phi, np.array(zs_tuple, dtype=complex), cfg)


def branch_sum(phi: RationalMap, f, zs, cfg: AdjointConfig = DEFAULT_CONFIG):
    """The raw weighted sum ``sum_j psi_j f(sigma_j)`` (no correction term).

    Returns ``(values, ok)``; points where the branch solve failed are NaN.
    """
    f = _as_rational(f)
    zs = np.asarray(zs, dtype=complex)
    sigma, psi, status = _branch_grid(phi, tuple(zs.ravel()), cfg)
    vals = np.sum(psi * f(sigma), axis=1).reshape(zs.shape)
    return vals, (status == _OK).reshape(zs.shape)


def adjoint_eval(phi: RationalMap, f, z, cfg: AdjointConfig = DEFAULT_CONFIG) -> complex:
    """Value of ``C_phi^* f`` at a point of the open disk.

    At ``z = 0`` the branch equation degenerates, so the value is taken from the
    constant Taylor coefficient produced by ``adjoint_coeffs``.
    """
    z = complex(z)
    if not abs(z) < 1:
        raise ValueError("evaluation point must lie in the open unit disk")
    f = _as_rational(f)
    _check_test_function(f)
    mc = classify_map(phi)
    if z == 0:
        return complex(adjoint_coeffs(phi, f, cfg.with_(n_terms=1)).coeffs[0])
    if mc.kind is MapKind.CONSTANT:
        return complex(_correction(mc, complex(f(0)), z))
    bs = branch_solve(phi, z, cfg)
    if bs.degree_deficit:
        raise SingularPointError(
            f"formula not evaluable at z={z!r}: {bs.zero_branches} branch(es) at 0, "
            f"{bs.escaped_branches} at infinity"
        )
    total = complex(np.sum(bs.psis * f(bs.sigmas))) if bs.branches else 0j
    return total + complex(_correction(mc, complex(f(0)), z))


_JITTER = ((1.0, False), (1.0, True), (1.0025, False), (0.9975, False),
           (1.005, False), (0.995, False), (1.01, False), (0.99, False))


def adjoint_coeffs(
    phi: RationalMap, f, cfg: AdjointConfig = DEFAULT_CONFIG, radius: float | None = None
) -> TruncatedSeries:
    """First ``cfg.n_terms`` Taylor coefficients of ``C_phi^* f``.

    The formula is sampled on ``|z| = radius`` and the coefficients are read off
    by FFT. If a sample lands on a branch point or a removable singularity of
    the formula, the grid is rotated by half a step and then the radius is
    jittered by up to 1%.
    """
    f = _as_rational(f)
    _check_test_function(f)
    mc = classify_map(phi)
    r0 = cfg.radius if radius is None else radius
    M = cfg.samples
    for factor, shifted in _JITTER:
        r = min(r0 * factor, 1 - 1e-9)
        phase = np.pi / M if shifted else 0.0
        z = circle_points(r, M, phase)
        vals, status = _adjoint_values(phi, f, z, cfg, mc)
        if np.all(status == _OK) and np.all(np.isfinite(vals)):
            return series_from_samples(BoundarySamples(vals, r, phase), cfg.n_terms)
    raise JitterExhaustedError(f"no admissible sampling circle near r={r0}")


def uncorrected_cg_eval(phi: RationalMap, f, z, cfg: AdjointConfig = DEFAULT_CONFIG) -> complex:
    """Backward shift applied to the branch sum with weight ``z^2 sigma'/sigma``.

    This is the earlier formula, with no projection and no correction term. It
    is kept as a baseline: it agrees with the adjoint for linear maps
    ``(az + b)/d`` and fails, for instance, for ``2z/(z+4)``.
    """
    f = _as_rational(f)
    z = complex(z)
    if z == 0:
        raise OriginNotSupportedError("evaluate the backward shift away from 0")
    if phi.is_constant():
        raise InvalidMapError("baseline formula is stated for nonconstant maps")

    def weighted(points):
        s, ok = branch_sum(phi, f, points, cfg)
        if not np.all(ok):
            raise NumericalError("branch solve failed while evaluating the baseline")
        return points * s

    # value at 0 of z * sum psi f(sigma), by the mean value over a small circle
    ring = circle_points(1e-2, 64, np.pi / 64)
    at_zero = complex(np.mean(weighted(ring)))
    return complex((weighted(np.array([z]))[0] - at_zero) / z)


def adjoint_eval_many(phi: RationalMap, f, zs, cfg: AdjointConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Vectorized ``adjoint_eval`` over nonzero points; failed points come back NaN."""
    f = _as_rational(f)
    _check_test_function(f)
    zs = np.asarray(zs, dtype=complex)
    if np.any(np.abs(zs) >= 1):
        raise ValueError("evaluation points must lie in the open unit disk")
    vals, status = _adjoint_values(phi, f, zs, cfg)
    return np.where(status == _OK, vals, np.nan)
