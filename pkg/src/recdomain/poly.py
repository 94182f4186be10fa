"""Dense polynomials with complex coefficients, plus root utilities.

Coefficients are stored ascending: ``coeffs[m]`` multiplies ``x**m``.
The identically-zero polynomial stores an empty tuple and reports
degree -1; for every other polynomial the trailing coefficient is
nonzero and ``degree() == len(coeffs) - 1``.
"""

from __future__ import annotations

import numpy as np


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [complex(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def falling(cls, i: int) -> "Polynomial":
        """t*(t-1)*...*(t-i+1); the weight the i-th derivative puts on x**t."""
        p = cls((1,))
        for m in range(i):
            p = p * cls((-m, 1))
        return p

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> complex:
        return self.coeffs[-1] if self.coeffs else 0j

    def __call__(self, x):
        # Horner; works elementwise on numpy arrays as well as scalars.
        out = x * 0j
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def magnitude_at(self, x) -> float:
        """Sum |c_m| * |x|**m, a conditioning scale for evaluations near roots."""
        ax = abs(x)
        out = 0.0
        for c in reversed(self.coeffs):
            out = out * ax + abs(c)
        return out

    def derivative(self) -> "Polynomial":
        return Polynomial([m * c for m, c in enumerate(self.coeffs)][1:])

    def conjugate_coefficients(self) -> "Polynomial":
        return Polynomial([c.conjugate() for c in self.coeffs])

    def shifted(self, offset: complex) -> "Polynomial":
        """Polynomial q with q(x) = p(x + offset)."""
        out = Polynomial()
        base = Polynomial((offset, 1))
        for c in reversed(self.coeffs):
            out = out * base + Polynomial((c,))
        return out

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for m, c in enumerate(b):
            out[m] += c
        return Polynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial()
            out = [0j] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([other * c for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def newton_polish(p: Polynomial, root: complex, iterations: int = 16) -> complex:
    dp = p.derivative()
    r = complex(root)
    for _ in range(iterations):
        slope = dp(r)
        if slope == 0:
            break
        step = p(r) / slope
        r -= step
        if abs(step) <= 1e-15 * (1.0 + abs(r)):
            break
    return r


def polynomial_roots(p: Polynomial, polish: bool = True) -> list[complex]:
    """All complex roots, via the companion matrix, Newton-polished.

    Sorted by (modulus, real, imag) so output order is reproducible.
    """
    if p.degree() < 1:
        return []
    raw = np.roots(np.array(p.coeffs[::-1], dtype=complex))
    roots = [complex(r) for r in raw]
    if polish:
        roots = [newton_polish(p, r) for r in roots]
    return sorted(roots, key=lambda z: (abs(z), z.real, z.imag))


def real_roots(p: Polynomial, imag_tol: float = 1e-7) -> list[float]:
    out = [r.real for r in polynomial_roots(p)
           if abs(r.imag) <= imag_tol * (1.0 + abs(r.real))]
    return sorted(out)
