"""Simultaneous (Aberth-Ehrlich) root finding for complex polynomials.

The batched solver works on a stack of polynomials of equal degree so that the
adjoint engine can solve the branch equation at hundreds of sample points in a
single vectorized pass.
"""
from __future__ import annotations

import numpy as np

from .errors import DegreeZeroError, NonConvergenceError
from .polynomial import ComplexPoly

EPS = np.finfo(float).eps
MAX_ITER = 500
CLUSTER_RTOL = 1e-7


def horner_batch(A, z):
    """Evaluate rows of ``A`` (ascending coeffs) and their derivatives at ``z``.

    ``A`` has shape (K, d+1) and ``z`` shape (K, n). Also returns the running
    bound ``sum |a_k| |z|^k`` used as the backward-error yardstick.
    """
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    bound = np.zeros(z.shape)
    az = np.abs(z)
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(A.shape[1] - 1, -1, -1):
            dp = dp * z + p
            p = p * z + A[:, k : k + 1]
            bound = bound * az + np.abs(A[:, k : k + 1])
    return p, dp, bound


def _initial_guesses(A, rng):
    K, n1 = A.shape
    d = n1 - 1
    monic = A / A[:, -1:]
    k = np.arange(1, d + 1)
    # Fujiwara-type bound: every root lies within 2 * max |a_{d-k}|^(1/k).
    rho = np.max(np.abs(monic[:, d - k]) ** (1.0 / k), axis=1)
    rho = np.where(rho > 0, rho, 1.0)
    theta0 = rng.uniform(0, 2 * np.pi, size=(K, 1))
    jitter = rng.uniform(-0.25, 0.25, size=(K, d)) * (2 * np.pi / d)
    radius = rho[:, None] * rng.uniform(0.9, 1.1, size=(K, d))
    return radius * np.exp(1j * (theta0 + 2 * np.pi * np.arange(d) / d + jitter))


def aberth_batch(C, seed: int = 0, max_iter: int = MAX_ITER) -> np.ndarray:
    """Roots of every row of ``C`` by Aberth-Ehrlich iteration plus Newton polish.

    Parameters
    ----------
    C : array_like, shape (K, d+1)
        Ascending coefficients; the last column must be nonzero.
    seed : int
        Seed for the random perturbation of the initial circle.
    max_iter : int
        Iteration cap; exceeding it raises ``NonConvergenceError``.

    Returns
    -------
    ndarray, shape (K, d)
    """
    A = np.atleast_2d(np.asarray(C, dtype=complex))
    K, n1 = A.shape
    d = n1 - 1
    if d < 1:
        raise DegreeZeroError("polynomial of degree zero has no roots")
    if np.any(A[:, -1] == 0):
        raise ValueError("leading coefficients must be nonzero")
    if d == 1:
        return -A[:, :1] / A[:, 1:]

    rng = np.random.default_rng(seed)
    z = _initial_guesses(A, rng)
    active = np.ones(z.shape, dtype=bool)
    eye = np.eye(d, dtype=bool)

    for _ in range(max_iter):
        p, dp, bound = horner_batch(A, z)
        done = np.abs(p) <= 4 * EPS * bound
        active &= ~done
        if not active.any():
            break
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            diff = z[:, :, None] - z[:, None, :]
            diff[:, eye] = np.inf
            s = np.sum(1.0 / diff, axis=2)
            corr = ratio / (1.0 - ratio * s)
        bad = ~np.isfinite(corr)
        if bad.any():
            corr[bad] = 1e-8 * (1 + np.abs(z[bad])) * np.exp(
                1j * rng.uniform(0, 2 * np.pi, size=int(bad.sum()))
            )
        corr = np.where(active, corr, 0)
        z = z - corr
        stalled = np.abs(corr) <= 2 * EPS * np.abs(z)
        active &= ~stalled
    else:
        raise NonConvergenceError(f"Aberth iteration exceeded {max_iter} steps")

    return _newton_polish(A, z)


def _newton_polish(A, z, steps: int = 2):
    for _ in range(steps):
        p, dp, _ = horner_batch(A, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            znew = z - p / dp
        pn, _, _ = horner_batch(A, np.where(np.isfinite(znew), znew, z))
        better = np.isfinite(znew) & (np.abs(pn) < np.abs(p))
        z = np.where(better, znew, z)
    return z


def _clusters(roots: np.ndarray, radius: float) -> list[list[int]]:
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) <= radius:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _polish_cluster(p: ComplexPoly, c: complex, m: int) -> complex:
    """Newton on the (m-1)th derivative, where a root of multiplicity m is simple."""
    g = p.derivative(m - 1)
    dg = g.derivative()
    for _ in range(4):
        den = dg(c)
        if den == 0:
            break
        step = g(c) / den
        c = c - step
        if abs(step) <= EPS * (1 + abs(c)):
            break
    return complex(c)


def _merge_wide(roots: np.ndarray, groups: list[list[int]], scale: float) -> list[list[int]]:
    # An m-fold root is smeared by roughly eps**(1/m). Look for m nearest
    # neighbours inside that radius, largest m first.
    free = {i for g in groups if len(g) == 1 for i in g}
    out = [g for g in groups if len(g) > 1]
    for m in range(len(free), 1, -1):
        radius = 2 * EPS ** (1.0 / m) * scale
        for i in sorted(free):
            if i not in free or len(free) < m:
                continue
            idx = np.array(sorted(free))
            near = idx[np.argsort(np.abs(roots[idx] - roots[i]))[:m]]
            c = np.mean(roots[near])
            if np.max(np.abs(roots[near] - c)) <= radius:
                out.append([int(k) for k in near])
                free -= set(out[-1])
    out.extend([i] for i in sorted(free))
    return out


def _derivative_residual_ok(p: ComplexPoly, c: complex, m: int) -> bool:
    scale = p.abs_eval(c)
    if scale > 0 and abs(p(c)) > 1e-10 * scale:
        return False
    for k in range(1, m):
        dk = p.derivative(k)
        scale = dk.abs_eval(c)
        if scale > 0 and abs(dk(c)) > 1e-6 * scale:
            return False
    return True


def poly_roots(
    p: ComplexPoly,
    cluster_rtol: float = CLUSTER_RTOL,
    seed: int = 0,
    max_iter: int = MAX_ITER,
) -> list[tuple[complex, int]]:
    """All complex roots of ``p`` with multiplicities.

    Roots closer than ``cluster_rtol * (1 + max|root|)`` are merged into one
    root of higher multiplicity, as are groups of m roots lying within the
    ``eps**(1/m)`` spread that an m-fold root suffers in floating point. A merge
    is kept only if ``p`` and its first m-1 derivatives nearly vanish at the
    merged value, which is refined by Newton iteration on the derivative in
    which it becomes simple.
    """
    if p.degree() < 1:
        raise DegreeZeroError("roots requested for a constant polynomial")
    v = p.valuation()
    q = p.shift_down(v)
    out: list[tuple[complex, int]] = []
    if v:
        out.append((0j, v))
    if q.degree() >= 1:
        raw = aberth_batch(q.array[None, :], seed=seed, max_iter=max_iter)[0]
        scale = 1 + np.max(np.abs(raw))
        groups = _merge_wide(raw, _clusters(raw, cluster_rtol * scale), scale)
        for group in groups:
            if len(group) == 1:
                out.append((complex(raw[group[0]]), 1))
                continue
            m = len(group)
            c = _polish_cluster(q, complex(np.mean(raw[group])), m)
            if _derivative_residual_ok(q, c, m):
                out.append((c, m))
            else:
                out.extend((complex(raw[i]), 1) for i in group)
    out.sort(key=lambda rm: (round(rm[0].real, 12), rm[0].imag))
    return out


def flat_roots(p: ComplexPoly, **kwargs) -> np.ndarray:
    """Roots repeated according to multiplicity."""
    return np.array([r for r, m in poly_roots(p, **kwargs) for _ in range(m)], dtype=complex)
