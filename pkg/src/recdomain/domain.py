"""Absolute-convergence domain and the characteristic-root comparison radius.

Membership in the domain D = { x : sum_m |alpha_m x^m| < 1 } depends only
on |x|, so D is a disk; its radius is the unique positive root of
sum_m |alpha_m| r^m = 1.  The characteristic (Poincare-Perron) radius is
the smallest modulus among the roots of 1 - sum_j alpha_j x^j; it is
reported for comparison only, since it reflects conditional rather than
absolute convergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import RootFindingFailed
from .poly import Polynomial, polynomial_roots

RADIUS_REL_TOL = 1e-12
RESIDUAL_REL_TOL = 1e-8
TIE_REL_TOL = 1e-9


def contains(alphas, x: complex):
    """(membership, margin) with margin = 1 - sum_m |alpha_m| |x|^m."""
    margin = 1.0
    power = 1.0
    ax = abs(x)
    for a in alphas:
        power *= ax
        margin -= abs(a) * power
    return margin > 0.0, margin


def abs_radius(alphas, rel_tol: float = RADIUS_REL_TOL) -> float:
    """Radius of the absolute-convergence disk, by bisection.

    The map r -> sum |alpha_m| r^m is strictly increasing once any
    coefficient is nonzero, so the bracketing is unconditional.
    """
    mods = [abs(a) for a in alphas]
    if not any(mods):
        return math.inf

    def g(r: float) -> float:
        total = 0.0
        power = 1.0
        for m in mods:
            power *= r
            total += m * power
        return total

    hi = 1.0
    while g(hi) < 1.0:
        hi *= 2.0
    if g(hi) == 1.0:
        return hi
    lo = hi / 2.0 if hi > 1.0 else 0.0
    while hi - lo > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        val = g(mid)
        if val == 1.0:
            return mid
        if val < 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def pp_radius(alphas):
    """(smallest root modulus, all roots) of 1 - sum_j alpha_j x^j = 0.

    Roots come from the companion matrix of the characteristic polynomial
    and are Newton-polished; a root whose residual exceeds
    RESIDUAL_REL_TOL times the evaluation scale aborts the computation.
    """
    char = Polynomial([1.0] + [-a for a in alphas])
    if char.degree() < 1:
        return math.inf, []
    roots = polynomial_roots(char)
    for r in roots:
        scale = max(char.magnitude_at(r), 1e-300)
        if abs(char(r)) > RESIDUAL_REL_TOL * scale:
            raise RootFindingFailed(
                f"root {r!r} has residual {abs(char(r)):.3g} "
                f"(scale {scale:.3g})")
    return abs(roots[0]), roots


@dataclass(frozen=True)
class DomainReport:
    """Radii and roots derived from a vector of coefficient limits."""

    limits: tuple
    abs_radius: float
    pp_radius: float
    characteristic_roots: tuple
    smallest_roots_tied: bool

    def margin_at(self, x: complex) -> float:
        return contains(self.limits, x)[1]


def domain_report(alphas, rel_tol: float = RADIUS_REL_TOL) -> DomainReport:
    r_abs = abs_radius(alphas, rel_tol)
    r_pp, roots = pp_radius(alphas)
    tied = (len(roots) >= 2
            and abs(abs(roots[0]) - abs(roots[1])) <= TIE_REL_TOL * abs(roots[0]))
    return DomainReport(tuple(complex(a) for a in alphas), r_abs, r_pp,
                        tuple(roots), tied)


def boundary_samples(radius: float, count: int = 256):
    """(theta, re, im) samples of the domain boundary circle, for plotting."""
    if not math.isfinite(radius):
        raise ValueError("the boundary circle is only defined for a finite radius")
    out = []
    for i in range(count):
        theta = 2.0 * math.pi * i / count
        out.append((theta, radius * math.cos(theta), radius * math.sin(theta)))
    return out
