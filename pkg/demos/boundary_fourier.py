"""
Negative Fourier coefficients on the circle
===========================================

Sampled on the unit circle, the raw branch sum has negative Fourier
coefficients g(0)/conj(phi(inf))**n when |phi(inf)| > 1, and none when
|phi(inf)| < 1. The correction term is what cancels them.
"""

import numpy as np

from hardy_adjoint import RationalMap, branch_sum, negative_fourier_coeffs, sample_circle
from hardy_adjoint.hardy import circle_points

M = 1024
pts = circle_points(1.0, M, np.pi / M)
g = RationalMap([1])

for label, phi in [("2z/(z+4)", RationalMap.lfm(2, 0, 1, 4)), ("z/(2z+4)", RationalMap.lfm(1, 0, 2, 4))]:
    vals, ok = branch_sum(phi, g, pts)
    s = sample_circle(lambda _: vals, 1.0, M, np.pi / M)
    c = negative_fourier_coeffs(s, 6)
    print(label, "all points ok:", bool(ok.all()))
    print("    c_{-n}:", np.round(c.real, 10))
print("2**-n:     ", 2.0 ** -np.arange(1, 7))
