"""Complex polynomials with ascending coefficient storage."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from numbers import Number

import numpy as np


def _as_coeff_tuple(coeffs) -> tuple:
    arr = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    if arr.ndim != 1:
        raise ValueError("polynomial coefficients must be one-dimensional")
    if not np.all(np.isfinite(arr)):
        raise ValueError("polynomial coefficients must be finite")
    nz = np.flatnonzero(arr)
    if nz.size == 0:
        return (0j,)
    return tuple(complex(c) for c in arr[: nz[-1] + 1])


@dataclass(frozen=True, init=False)
class ComplexPoly:
    """Polynomial ``sum_k coeffs[k] * z**k`` over the complex numbers.

    Exact trailing zeros are stripped on construction, so the highest stored
    coefficient is nonzero unless the polynomial is identically zero.
    """

    coeffs: tuple

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", _as_coeff_tuple(coeffs))

    @classmethod
    def zero(cls) -> ComplexPoly:
        return cls([0])

    @classmethod
    def constant(cls, c) -> ComplexPoly:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c=1.0) -> ComplexPoly:
        return cls([0] * n + [c])

    @classmethod
    def from_roots(cls, roots, lead=1.0) -> ComplexPoly:
        c = np.array([lead], dtype=complex)
        for r in roots:
            c = np.convolve(c, [-r, 1.0])
        return cls(c)

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.coeffs, dtype=complex)
        a.flags.writeable = False
        return a

    def is_zero(self) -> bool:
        return self.coeffs == (0j,)

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return -1 if self.is_zero() else len(self.coeffs) - 1

    @property
    def lead(self) -> complex:
        return self.coeffs[-1]

    def norm1(self) -> float:
        return float(np.sum(np.abs(self.array)))

    def __call__(self, z):
        """Horner evaluation; ``z`` may be a scalar or an array."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc[()] if acc.ndim == 0 else acc

    def abs_eval(self, z):
        """Evaluate ``sum |c_k| |z|^k``, the scale of rounding errors in ``p(z)``."""
        t = np.abs(np.asarray(z, dtype=complex))
        acc = np.zeros_like(t)
        for c in reversed(self.coeffs):
            acc = acc * t + abs(c)
        return acc[()] if acc.ndim == 0 else acc

    def derivative(self, order: int = 1) -> ComplexPoly:
        a = self.array
        for _ in range(order):
            if a.size <= 1:
                return ComplexPoly.zero()
            a = a[1:] * np.arange(1, a.size)
        return ComplexPoly(a)

    def conj(self) -> ComplexPoly:
        """Polynomial with conjugated coefficients."""
        return ComplexPoly(np.conj(self.array))

    def reversed(self, d: int) -> ComplexPoly:
        """Return ``z**d * p(1/z)`` for ``d >= degree``."""
        if d < self.degree():
            raise ValueError("reversal degree below polynomial degree")
        a = np.zeros(d + 1, dtype=complex)
        a[: len(self.coeffs)] = self.array
        return ComplexPoly(a[::-1])

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (0 for the zero polynomial)."""
        nz = np.flatnonzero(self.array)
        return int(nz[0]) if nz.size else 0

    def shift_down(self, k: int) -> ComplexPoly:
        """Divide by ``z**k``; the low coefficients must be zero."""
        return ComplexPoly(self.array[k:]) if k else self

    def trim(self, rtol: float = 1e-14) -> ComplexPoly:
        """Drop high-order coefficients below ``rtol`` times the largest one."""
        a = self.array
        if a.size == 0:
            return self
        cut = rtol * np.max(np.abs(a))
        n = a.size
        while n > 1 and abs(a[n - 1]) <= cut:
            n -= 1
        return ComplexPoly(a[:n])

    def _coerce(self, other):
        if isinstance(other, ComplexPoly):
            return other
        if isinstance(other, Number):
            return ComplexPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n, dtype=complex)
        a[: len(self.coeffs)] += self.array
        a[: len(other.coeffs)] += other.array
        return ComplexPoly(a)

    __radd__ = __add__

    def __neg__(self):
        return ComplexPoly(-self.array)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ComplexPoly(np.convolve(self.array, other.array))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = ComplexPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod_linear(self, r) -> tuple[ComplexPoly, complex]:
        """Synthetic division by ``(z - r)``; returns quotient and remainder."""
        a = self.array
        if a.size == 1:
            return ComplexPoly.zero(), complex(a[0])
        q = np.zeros(a.size - 1, dtype=complex)
        acc = a[-1]
        for k in range(a.size - 2, -1, -1):
            q[k] = acc
            acc = acc * r + a[k]
        return ComplexPoly(q), complex(acc)

    def compose(self, other: ComplexPoly) -> ComplexPoly:
        out = ComplexPoly.zero()
        for c in reversed(self.coeffs):
            out = out * other + c
        return out

    def allclose(self, other: ComplexPoly, atol: float = 1e-12) -> bool:
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n, dtype=complex)
        b = np.zeros(n, dtype=complex)
        a[: len(self.coeffs)] = self.array
        b[: len(other.coeffs)] = other.array
        return bool(np.all(np.abs(a - b) <= atol))

    def roots(self, **kwargs):
        from .roots import poly_roots

        return poly_roots(self, **kwargs)

    def __repr__(self) -> str:
        return f"ComplexPoly({list(self.coeffs)!r})"


def poly_eval(p: ComplexPoly, z):
    return p(z)


def poly_derivative(p: ComplexPoly) -> ComplexPoly:
    return p.derivative()
