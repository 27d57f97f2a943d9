"""
Matrix adjoint versus branch formula
====================================

The conjugate transpose of the truncated composition matrix is an independent
oracle for the Taylor coefficients of the adjoint.
"""

import numpy as np

from hardy_adjoint import (AdjointConfig, RationalMap, TruncatedSeries, adjoint_coeffs,
                           comp_op_matrix, oracle_adjoint_apply)

phi = RationalMap.polynomial([0, 1 / 3 + 0.2j, 0.25])
N = 64
A = comp_op_matrix(phi, N).entries
print("column 1 (phi itself):", np.round(A[:4, 1], 6))

cfg = AdjointConfig(n_terms=N)
for j in (0, 1, 5):
    g = TruncatedSeries.monomial(j, N)
    oracle = oracle_adjoint_apply(phi, g).coeffs[:17]
    formula = adjoint_coeffs(phi, RationalMap.polynomial([0] * j + [1]), cfg).coeffs[:17]
    print(f"z^{j}: max difference on 17 coefficients {np.max(np.abs(oracle - formula)):.2e}")
