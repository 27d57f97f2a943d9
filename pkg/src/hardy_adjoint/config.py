"""Numerical configuration for the adjoint engine."""
from __future__ import annotations

from dataclasses import dataclass, replace

DEFAULT_SEED = 0x5EED


@dataclass(frozen=True)
class AdjointConfig:
    """Truncation, sampling and tolerance settings.

    Attributes
    ----------
    n_terms : int
        Number of Taylor coefficients kept (N).
    samples : int
        Points on the sampling circle (M); must be a power of two.
    radius : float
        Radius of the circle used to extract Taylor coefficients, in (0, 1).
    tol_root : float
        Relative residual accepted for polynomial roots.
    tol_branch : float
        Branch residual: every branch value s at z satisfies
        ``|phi~(s) z - 1| <= tol_branch * |z|``.
    delta_bp : float
        Branch values closer than this to each other (branch point) or to 0
        are refused.
    cluster_rtol : float
        Relative radius for merging roots into a multiple root.
    coprime_tol : float
        Residual tolerance for cancelling common roots of num and denom.
    seed : int
        Seed for the root finder's initial perturbation.
    """

    n_terms: int = 64
    samples: int = 512
    radius: float = 0.5
    tol_root: float = 1e-12
    tol_branch: float = 1e-9
    delta_bp: float = 1e-6
    cluster_rtol: float = 1e-7
    coprime_tol: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        if self.n_terms < 1:
            raise ValueError("n_terms must be positive")
        if self.samples < 2 or self.samples & (self.samples - 1):
            raise ValueError("samples must be a power of two")
        if not 0 < self.radius < 1:
            raise ValueError("radius must lie in (0, 1)")
        for name in ("tol_root", "tol_branch", "delta_bp", "cluster_rtol", "coprime_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")

    def with_(self, **changes) -> AdjointConfig:
        return replace(self, **changes)


DEFAULT_CONFIG = AdjointConfig()
