"""
Branch values and weights
=========================

The adjoint at z sums psi_j f(sigma_j) over the solutions sigma_j of
tilde(phi)(s) = 1/z. This script prints them for a few maps.
"""

import numpy as np

from hardy_adjoint import RationalMap, branch_solve, classify_map

maps = {
    "2z/(z+4)": RationalMap.lfm(2, 0, 1, 4),
    "z^3": RationalMap.polynomial([0, 0, 0, 1]),
    "(z^2+z)/2": RationalMap.polynomial([0, 0.5, 0.5]),
    "bourdon": RationalMap([9, -6, 1], [13, -10, 1]),
}

z = 0.25 + 0.1j
for name, phi in maps.items():
    mc = classify_map(phi)
    bs = branch_solve(phi, z)
    print(f"{name}: class {mc.name}, phi(inf) = {mc.phi_inf}")
    for b in bs.branches:
        print(f"    sigma = {b.sigma:.6f}  psi = {b.psi:.6f}  |sigma| = {abs(b.sigma):.3f}")

# for z^3 the weights are all 1/3 and the branches are the cube roots of z
bs = branch_solve(maps["z^3"], z)
print("cube roots recovered:", np.allclose(np.sort_complex(bs.sigmas**3), z))
