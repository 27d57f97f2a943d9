"""Numerical checks of the adjoint formula against independent routes.

Every suite returns a :class:`VerifyReport`; reports are deterministic for a
given seed and configuration and serialize to plain JSON-compatible dicts.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .adjoint import (
    MapKind,
    adjoint_coeffs,
    adjoint_eval,
    adjoint_eval_many,
    branch_solve,
    branch_sum,
    classify_map,
    uncorrected_cg_eval,
)
from .closed_forms import (
    BOURDON_MAP,
    bourdon_adjoint_eval,
    lfm_adjoint_eval,
    monomial_adjoint_eval,
    quadratic_adjoint_eval,
)
from .config import DEFAULT_CONFIG, DEFAULT_SEED, AdjointConfig
from .hardy import (
    TruncatedSeries,
    circle_points,
    compose_series,
    inner_product,
    negative_fourier_coeffs,
    oracle_adjoint_apply,
    sample_circle,
)
from .rational import INFINITY, RationalMap, is_self_map_of_disk


@dataclass(frozen=True)
class TestMap:
    name: str
    map: RationalMap
    class_expected: MapKind
    provenance: str

    __test__ = False  # not a pytest class


QUAD_A, QUAD_B = 0.25, 1 / 3 + 0.2j

CATALOG = (
    TestMap("exterior_lfm", RationalMap.lfm(2, 0, 1, 4), MapKind.EXTERIOR,
            "2z/(z+4): the earlier formula is not analytic on the disk"),
    TestMap("interior_lfm", RationalMap.lfm(1, 0, 2, 4), MapKind.INTERIOR,
            "z/(2z+4): the earlier formula does not fix constants"),
    TestMap("boundary_lfm", RationalMap.lfm(1, 0, 1, 4), MapKind.BOUNDARY,
            "z/(z+4): preimage of the disk bounded by the line Re z = -2"),
    TestMap("square", RationalMap.polynomial([0, 0, 1]), MapKind.INFINITY, "z^2, monomial family"),
    TestMap("cube", RationalMap.polynomial([0, 0, 0, 1]), MapKind.INFINITY, "z^3, monomial family"),
    TestMap("half_quadratic", RationalMap.polynomial([0, 0.5, 0.5]), MapKind.INFINITY,
            "(z^2+z)/2, real quadratic fixing the origin"),
    TestMap("complex_quadratic", RationalMap.polynomial([0, QUAD_B, QUAD_A]), MapKind.INFINITY,
            "a z^2 + b z with a = 1/4, b = 1/3 + i/5"),
    TestMap("bourdon", BOURDON_MAP, MapKind.BOUNDARY,
            "(z^2-6z+9)/(z^2-10z+13), degree-two map with phi(inf) = 1"),
)

CATALOG_BY_NAME = {t.name: t for t in CATALOG}


@dataclass(frozen=True)
class Case:
    digest: str
    error: float
    tolerance: float
    comparison: str = "<="  # "<=" : error must not exceed tolerance; ">=" : must reach it

    @property
    def passed(self) -> bool:
        if not np.isfinite(self.error):
            return False
        if self.comparison == ">=":
            return self.error >= self.tolerance
        return self.error <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "inputs": self.digest,
            "error": float(self.error),
            "tolerance": self.tolerance,
            "comparison": self.comparison,
            "pass": self.passed,
        }


@dataclass
class VerifyReport:
    suite: str
    seed: int
    cases: list = field(default_factory=list)
    maps: set = field(default_factory=set)
    operations: set = field(default_factory=set)

    def add(self, label: str, error: float, tolerance: float, comparison: str = "<="):
        self.cases.append(Case(_digest(label), float(error), tolerance, comparison))

    @property
    def max_error(self) -> float:
        errs = [c.error for c in self.cases if c.comparison == "<="]
        return float(max(errs)) if errs else 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "pass": self.passed,
            "max_error": self.max_error,
            "n_cases": len(self.cases),
            "n_failed": sum(not c.passed for c in self.cases),
            "maps": sorted(self.maps),
            "cases": [c.to_dict() for c in self.cases],
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}: {len(self.cases)} cases, max error {self.max_error:.3e}"


def _digest(label: str) -> str:
    return f"{label}#{hashlib.sha1(label.encode()).hexdigest()[:10]}"


def random_disk_points(rng, n: int, radius: float = 1.0) -> np.ndarray:
    """Points uniformly distributed in the disk ``|z| <= radius``."""
    return radius * np.sqrt(rng.uniform(size=n)) * np.exp(2j * np.pi * rng.uniform(size=n))


def random_poly(rng, max_deg: int) -> np.ndarray:
    return random_disk_points(rng, max_deg + 1)


def _map_name(phi: RationalMap) -> str:
    for t in CATALOG:
        if t.map == phi:
            return t.name
    return repr(phi)


def default_tolerance(phi: RationalMap, interior: float = 1e-8, boundary: float = 1e-6) -> float:
    """The looser tolerance applies to maps with ``|phi(inf)| = 1``."""
    return boundary if classify_map(phi).kind is MapKind.BOUNDARY else interior


def check_adjoint_identity(
    phi: RationalMap,
    trials: int = 100,
    max_deg: int = 8,
    cfg: AdjointConfig = DEFAULT_CONFIG,
    seed: int = DEFAULT_SEED,
    tol: float | None = None,
) -> VerifyReport:
    """Compare ``<C_phi f, g>`` with ``<f, C_phi^* g>`` for random polynomials."""
    tol = default_tolerance(phi) if tol is None else tol
    rng = np.random.default_rng(seed)
    rep = VerifyReport("adjoint", seed, maps={_map_name(phi)}, operations={"adjoint_coeffs"})
    N = cfg.n_terms
    for t in range(trials):
        f = TruncatedSeries.from_poly(random_poly(rng, max_deg), N)
        g = TruncatedSeries.from_poly(random_poly(rng, max_deg), N)
        lhs = inner_product(compose_series(f, phi, N, cfg.radius, cfg.samples), g)
        rhs = inner_product(f, adjoint_coeffs(phi, g, cfg))
        err = abs(lhs - rhs) / (1 + f.norm() * g.norm())
        rep.add(f"{_map_name(phi)}:trial{t}", err, tol)
    return rep


def check_kernel_identity(
    phi: RationalMap,
    n_w: int = 20,
    n_z: int = 20,
    cfg: AdjointConfig = DEFAULT_CONFIG,
    seed: int = DEFAULT_SEED,
    tol: float = 1e-8,
) -> VerifyReport:
    """``C_phi^* K_w = K_{phi(w)}`` at random ``|w|, |z| <= 0.9``."""
    rng = np.random.default_rng(seed)
    rep = VerifyReport("kernel", seed, maps={_map_name(phi)}, operations={"adjoint_eval"})
    ws = random_disk_points(rng, n_w, 0.9)
    zs = random_disk_points(rng, n_z, 0.9)
    for i, w in enumerate(ws):
        K = RationalMap.kernel(w)
        got = adjoint_eval_many(phi, K, zs, cfg)
        want = 1 / (1 - np.conj(phi(w)) * zs)
        rep.add(f"{_map_name(phi)}:w{i}", np.max(np.abs(got - want)), tol)
    # one scalar call per map keeps the single-point path honest
    got = adjoint_eval(phi, RationalMap.kernel(ws[0]), zs[0], cfg)
    rep.add(f"{_map_name(phi)}:scalar", abs(got - 1 / (1 - np.conj(phi(ws[0])) * zs[0])), tol)
    return rep


def check_against_oracle(
    phi: RationalMap,
    max_deg: int = 16,
    cfg: AdjointConfig = DEFAULT_CONFIG,
    seed: int = DEFAULT_SEED,
    tol: float = 1e-7,
) -> VerifyReport:
    """Matrix-adjoint oracle versus the formula on monomials ``z**j``."""
    if max_deg > cfg.n_terms // 4:
        raise ValueError("max_deg must not exceed n_terms / 4")
    rep = VerifyReport("oracle", seed, maps={_map_name(phi)}, operations={"adjoint_coeffs"})
    N = cfg.n_terms
    for j in range(max_deg + 1):
        g = TruncatedSeries.monomial(j, N)
        want = oracle_adjoint_apply(phi, g, N, M=cfg.samples).coeffs[: max_deg + 1]
        got = adjoint_coeffs(phi, g, cfg).coeffs[: max_deg + 1]
        rep.add(f"{_map_name(phi)}:z^{j}", np.max(np.abs(got - want)), tol)
    return rep


def check_closed_forms(cfg: AdjointConfig = DEFAULT_CONFIG, seed: int = DEFAULT_SEED) -> VerifyReport:
    """Engine versus the closed-form adjoints of the special families."""
    rng = np.random.default_rng(seed)
    rep = VerifyReport("closed_forms", seed, operations={"adjoint_eval", "lfm_adjoint_eval", "bourdon_adjoint_eval"})
    zs = random_disk_points(rng, 50, 0.9)
    fs = [RationalMap.polynomial(random_poly(rng, 8)), RationalMap.kernel(0.6 - 0.3j)]

    def compare(name, phi, closed, tol):
        rep.maps.add(name)
        for k, f in enumerate(fs):
            engine = adjoint_eval_many(phi, f, zs, cfg)
            exact = np.array([closed(f, z) for z in zs])
            rep.add(f"{name}:f{k}", np.max(np.abs(engine - exact)), tol)

    lfms = [t for t in CATALOG if t.map.degree() == 1]
    lfms.append(TestMap("linear", RationalMap.lfm(0.5, 0.25, 0, 1), MapKind.INFINITY, "z/2 + 1/4"))
    lfms.append(TestMap("complex_lfm", RationalMap.lfm(0.3 + 0.2j, 0.1j, 0.5 - 0.5j, 2), MapKind.INTERIOR, "complex LFM"))
    for t in lfms:
        compare(t.name, t.map, lambda f, z, phi=t.map: lfm_adjoint_eval(phi, f, z), 1e-10)
    for m in (2, 3, 4):
        compare(f"z^{m}", RationalMap.polynomial([0] * m + [1]),
                lambda f, z, m=m: monomial_adjoint_eval(m, f, z), 1e-12)
    for a, b in ((0.5, 0.5), (QUAD_A, QUAD_B)):
        name = "half_quadratic" if a == 0.5 else "complex_quadratic"
        compare(name, RationalMap.polynomial([0, b, a]),
                lambda f, z, a=a, b=b: quadratic_adjoint_eval(a, b, f, z), 1e-9)
    compare("bourdon", BOURDON_MAP, bourdon_adjoint_eval, 1e-6)
    return rep


def demo_counterexamples(cfg: AdjointConfig = DEFAULT_CONFIG, seed: int = DEFAULT_SEED) -> VerifyReport:
    """The uncorrected formula fails for LFMs with ``c != 0`` and agrees when ``c = 0``."""
    rep = VerifyReport("counterexamples", seed, operations={"uncorrected_cg_eval", "adjoint_eval"})
    one = RationalMap.polynomial([1])
    z = 0.25

    ext = CATALOG_BY_NAME["exterior_lfm"].map
    u = uncorrected_cg_eval(ext, one, z, cfg)
    rep.maps.add("exterior_lfm")
    rep.add("exterior_lfm:deviation>=0.1", abs(u - 1), 0.1, ">=")
    rep.add("exterior_lfm:value=-1", abs(u + 1), 1e-12)
    rep.add("exterior_lfm:corrected=1", abs(adjoint_eval(ext, one, z, cfg) - 1), 1e-12)

    inte = CATALOG_BY_NAME["interior_lfm"].map
    u = uncorrected_cg_eval(inte, one, z, cfg)
    rep.maps.add("interior_lfm")
    rep.add("interior_lfm:deviation>=0.1", abs(u - 1), 0.1, ">=")
    rep.add("interior_lfm:value=-1/7", abs(u + 1 / 7), 1e-12)
    rep.add("interior_lfm:corrected=1", abs(adjoint_eval(inte, one, z, cfg) - 1), 1e-12)

    lin = RationalMap.lfm(0.5, 0.25, 0, 1)
    rng = np.random.default_rng(seed)
    f = RationalMap.polynomial(random_poly(rng, 6))
    for i, zz in enumerate(random_disk_points(rng, 10, 0.9)):
        diff = abs(uncorrected_cg_eval(lin, f, zz, cfg) - adjoint_eval(lin, f, zz, cfg))
        rep.add(f"linear:z{i}", diff, 1e-10)
    return rep


def check_negative_fourier_suite(
    cfg: AdjointConfig = DEFAULT_CONFIG,
    seed: int = DEFAULT_SEED,
    n_max: int = 10,
    M: int = 1024,
    tol: float = 1e-7,
    maps=None,
) -> VerifyReport:
    """Negative Fourier coefficients of the raw branch sum on the unit circle.

    They equal ``g(0) / conj(phi(inf))**n`` when ``|phi(inf)| > 1`` and vanish
    when ``|phi(inf)| < 1`` or ``phi(inf)`` is infinite.
    """
    rng = np.random.default_rng(seed)
    rep = VerifyReport("negative_fourier", seed, operations={"branch_solve"})
    tests = [t for t in CATALOG if t.class_expected is not MapKind.BOUNDARY] if maps is None else maps
    gs = [np.array([1.0 + 0j])] + [random_poly(rng, 4) for _ in range(2)]
    n = np.arange(1, n_max + 1)
    for t in tests:
        mc = classify_map(t.map)
        if mc.kind is MapKind.BOUNDARY:
            continue
        rep.maps.add(t.name)
        for k, gc in enumerate(gs):
            g = RationalMap.polynomial(gc)
            samples = None
            for phase in (np.pi / M, 0.0, np.pi / (2 * M)):
                pts = circle_points(1.0, M, phase)
                vals, ok = branch_sum(t.map, g, pts, cfg)
                if np.all(ok):
                    samples = sample_circle(lambda _: vals, 1.0, M, phase)
                    break
            if samples is None:
                rep.add(f"{t.name}:g{k}", np.inf, tol)
                continue
            c = negative_fourier_coeffs(samples, n_max)
            if mc.phi_inf is INFINITY or abs(mc.phi_inf) < 1:
                want = np.zeros(n_max, dtype=complex)
            else:
                want = gc[0] / np.conj(mc.phi_inf) ** n
            rep.add(f"{t.name}:g{k}", np.max(np.abs(c - want)), tol)
    return rep


def check_analyticity(
    cfg: AdjointConfig = DEFAULT_CONFIG,
    seed: int = DEFAULT_SEED,
    radii=(0.4, 0.6),
    tol: float = 1e-8,
    n_compare: int | None = None,
) -> VerifyReport:
    """Taylor coefficients extracted on two circles must coincide.

    Only the first ``n_terms // 4 + 1`` coefficients are compared by default:
    rounding in coefficient ``n`` extracted on radius ``r`` grows like ``r**-n``.
    """
    n_compare = cfg.n_terms // 4 + 1 if n_compare is None else n_compare
    rep = VerifyReport("analyticity", seed, operations={"adjoint_coeffs"})
    fs = {"1": RationalMap.polynomial([1]), "z^2": RationalMap.polynomial([0, 0, 1])}
    for t in CATALOG:
        rep.maps.add(t.name)
        for fname, f in fs.items():
            a = adjoint_coeffs(t.map, f, cfg, radius=radii[0]).coeffs[:n_compare]
            b = adjoint_coeffs(t.map, f, cfg, radius=radii[1]).coeffs[:n_compare]
            rep.add(f"{t.name}:f={fname}", np.max(np.abs(a - b)), tol)
    return rep


def check_classification(seed: int = DEFAULT_SEED) -> VerifyReport:
    """Catalog maps are disk self-maps of the expected class; branches certify."""
    rep = VerifyReport("classification", seed, operations={"classify_map", "branch_solve"})
    for t in CATALOG:
        rep.maps.add(t.name)
        ok = is_self_map_of_disk(t.map).ok and classify_map(t.map).kind is t.class_expected
        rep.add(f"{t.name}:class", 0.0 if ok else 1.0, 0.0)
        bs = branch_solve(t.map, 0.3 + 0.1j)
        worst = max((b.residual for b in bs.branches), default=0.0)
        rep.add(f"{t.name}:residual", worst, 1e-9 * abs(0.3 + 0.1j))
    return rep


def _per_map(check):
    def run(cfg: AdjointConfig = DEFAULT_CONFIG, seed: int = DEFAULT_SEED, maps=None) -> VerifyReport:
        maps = CATALOG if maps is None else maps
        out = None
        for t in maps:
            rep = check(t.map, cfg=cfg, seed=seed)
            rep.maps = {t.name}
            if out is None:
                out = rep
            else:
                out.cases.extend(rep.cases)
                out.maps |= rep.maps
        return out

    return run


SUITES = {
    "classification": lambda cfg=DEFAULT_CONFIG, seed=DEFAULT_SEED: check_classification(seed),
    "adjoint": _per_map(check_adjoint_identity),
    "kernel": _per_map(check_kernel_identity),
    "oracle": _per_map(check_against_oracle),
    "closed_forms": check_closed_forms,
    "counterexamples": demo_counterexamples,
    "negative_fourier": check_negative_fourier_suite,
    "analyticity": check_analyticity,
}


def run_suite(name: str, cfg: AdjointConfig = DEFAULT_CONFIG, seed: int = DEFAULT_SEED) -> VerifyReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](cfg=cfg, seed=seed)


def run_all(cfg: AdjointConfig = DEFAULT_CONFIG, seed: int = DEFAULT_SEED) -> list[VerifyReport]:
    return [run_suite(name, cfg, seed) for name in SUITES]
