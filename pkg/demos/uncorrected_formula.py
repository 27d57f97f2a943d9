"""
Why the correction term matters
===============================

Dropping the term f(0)/(1 - conj(phi(inf)) z) gives an operator that need not
preserve analyticity or fix constants. Compare both versions on f = 1.
"""

import numpy as np

from hardy_adjoint import RationalMap, adjoint_eval, uncorrected_cg_eval

one = RationalMap([1])
for label, phi in [("2z/(z+4)", RationalMap.lfm(2, 0, 1, 4)),
                   ("z/(2z+4)", RationalMap.lfm(1, 0, 2, 4)),
                   ("z/2+1/4", RationalMap.lfm(0.5, 0.25, 0, 1))]:
    print(label)
    for z in (0.25, -0.4, 0.3j):
        c = adjoint_eval(phi, one, z)
        u = uncorrected_cg_eval(phi, one, z)
        print(f"    z={z!s:6}  corrected {c.real:+.6f}{c.imag:+.6f}i  uncorrected {u.real:+.6f}{u.imag:+.6f}i")

# for 2z/(z+4) the uncorrected value is 2z/(2z-1), which blows up at z = 1/2
zs = np.linspace(0.4, 0.49, 4)
print("uncorrected near 1/2:", [round(uncorrected_cg_eval(RationalMap.lfm(2, 0, 1, 4), one, z).real, 2)
                                for z in zs])
