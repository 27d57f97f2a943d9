"""Adjoints of composition operators with rational symbol on the Hardy space H^2."""

from .adjoint import (
    Branch,
    BranchSet,
    MapClass,
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
from .config import DEFAULT_CONFIG, AdjointConfig
from .hardy import (
    BoundarySamples,
    OperatorMatrix,
    TruncatedSeries,
    comp_op_matrix,
    compose_series,
    inner_product,
    kernel_at,
    negative_fourier_coeffs,
    oracle_adjoint_apply,
    riesz_project,
    sample_circle,
    series_from_samples,
)
from .parser import format_map, parse_complex, parse_map
from .polynomial import ComplexPoly, poly_derivative, poly_eval
from .rational import (
    INFINITY,
    RationalMap,
    invert_lfm,
    is_self_map_of_disk,
    map_at_infinity,
    rat_derivative,
    rat_eval,
    tilde_transform,
)
from .roots import poly_roots

__version__ = "0.1.0"
