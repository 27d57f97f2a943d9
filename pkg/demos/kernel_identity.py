"""
Adjoints send kernels to kernels
================================

For every disk self-map, the adjoint of C_phi maps K_w to K_phi(w). We check
this with the branch-sum engine on a random grid.
"""

import numpy as np

from hardy_adjoint import RationalMap, adjoint_eval_many
from hardy_adjoint.verification import CATALOG

rng = np.random.default_rng(7)
ws = 0.9 * np.sqrt(rng.uniform(size=5)) * np.exp(2j * np.pi * rng.uniform(size=5))
zs = 0.9 * np.sqrt(rng.uniform(size=50)) * np.exp(2j * np.pi * rng.uniform(size=50))

for t in CATALOG:
    err = 0.0
    for w in ws:
        got = adjoint_eval_many(t.map, RationalMap.kernel(w), zs)
        want = 1 / (1 - np.conj(t.map(w)) * zs)
        err = max(err, np.nanmax(np.abs(got - want)))
    print(f"{t.name:18s} max error {err:.2e}")
