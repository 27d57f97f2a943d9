"""
Roots, multiplicities and the tilde transform
=============================================

"""

import numpy as np

from hardy_adjoint import ComplexPoly, RationalMap, poly_roots, tilde_transform

# a double root at 0.3 and a simple one at -2
p = ComplexPoly.from_roots([0.3, 0.3, -2])
print("coefficients:", np.round(p.array.real, 12))
for r, m in poly_roots(p):
    print(f"  root {r:.12f} multiplicity {m}")

# a fourfold root is smeared by about eps**(1/4) before merging
q = ComplexPoly.from_roots([1, 1, 1, 1])
print("fourfold:", poly_roots(q))

# the tilde transform conj(R(1/conj(z))) is again rational
phi = RationalMap.lfm(2, 0, 1, 4)
T = tilde_transform(phi)
print("tilde of 2z/(z+4):", T)
z = 0.7 - 1.3j
print("pointwise check:", abs(T(z) - np.conj(phi(1 / np.conj(z)))))
