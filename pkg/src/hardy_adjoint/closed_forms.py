"""Closed-form adjoints for special families of symbols.

These are independent of the branch solver and serve as cross-checks for it.
"""
from __future__ import annotations

import numpy as np

from .adjoint import _as_rational
from .errors import DegenerateError
from .rational import RationalMap, lfm_coefficients

BOURDON_MAP = RationalMap([9, -6, 1], [13, -10, 1])


def lfm_adjoint_eval(phi: RationalMap, f, z) -> complex:
    """Adjoint for ``phi = (az+b)/(cz+d)``:

    ``(ad-bc)~ z / ((a~ z - c~)(-b~ z + d~)) f(sigma(z)) + c~ f(0) / (c~ - a~ z)``

    with ``~`` denoting conjugation and ``sigma(z) = (a~ z - c~) / (-b~ z + d~)``.
    """
    a, b, c, d = lfm_coefficients(phi)
    if a * d - b * c == 0:
        raise DegenerateError("constant map")
    f = _as_rational(f)
    z = complex(z)
    ac, bc_, cc, dc = np.conj(a), np.conj(b), np.conj(c), np.conj(d)
    sigma = (ac * z - cc) / (-bc_ * z + dc)
    if c == 0:
        # (a~ d~ z) / (a~ z (-b~ z + d~)) with the common factor a~ z cancelled
        return complex(dc / (-bc_ * z + dc) * f(sigma))
    det = ac * dc - bc_ * cc
    weight = det * z / ((ac * z - cc) * (-bc_ * z + dc))
    return complex(weight * f(sigma) + cc * f(0) / (cc - ac * z))


def monomial_adjoint_eval(m: int, f, z) -> complex:
    """Adjoint for ``phi = z**m``: the mean of ``f`` over the m-th roots of ``z``."""
    f = _as_rational(f)
    z = complex(z)
    roots = abs(z) ** (1.0 / m) * np.exp(1j * (np.angle(z) + 2 * np.pi * np.arange(m)) / m)
    return complex(np.mean(f(roots)))


def quadratic_adjoint_eval(a, b, f, z) -> complex:
    """Adjoint for ``phi = a z**2 + b z`` (two branches, no correction term)."""
    f = _as_rational(f)
    z = complex(z)
    ac, bc_ = np.conj(a), np.conj(b)
    root = np.sqrt(bc_**2 * z**2 + 4 * ac * z)
    total = 0j
    for sign in (-1, 1):
        psi = 0.5 * (1 + sign * bc_ * root / (bc_**2 * z + 4 * ac))
        total += psi * f((bc_ * z + sign * root) / 2)
    return complex(total)


def bourdon_adjoint_eval(f, z) -> complex:
    """Adjoint for ``phi = (z**2 - 6z + 9) / (z**2 - 10z + 13)``."""
    f = _as_rational(f)
    z = complex(z)
    rt = np.sqrt(3 - 2 * z)
    total = 0j
    for sign in (-1, 1):
        psi = sign * 2 * z / (rt * (3 * z - 4 + sign * rt))
        sigma = (3 * z - 5 + sign * 2 * rt) / (9 * z - 13)
        total += psi * f(sigma)
    return complex(total + f(0) / (1 - z))
