"""Deriving the normalized recurrence from an ODE with polynomial coefficients.

Substituting y = x^lam * sum_n d_n x^n into

    a_j(x) y^(j) + ... + a_1(x) y' + a_0(x) y = 0

and collecting powers of x turns each monomial a_{i,s} x^s of a_i into a
contribution a_{i,s} * F_i(n + lam) * d_n at the power offset o = i - s,
where F_i(t) = t(t-1)...(t-i+1).  Grouping by offset gives layer equations

    sum_o C_o(m_o + lam) d_{m_o} = 0,        C_o(t) = sum_{i-s=o} a_{i,s} F_i(t),

and the layer whose highest offset term carries d_{n+1} normalizes to

    d_{n+1} = sum_{l=1..k} alpha_l(n) d_{n+1-l},
    alpha_l(n) = -C_{o_max - l}(n + 1 - l + lam) / C_{o_max}(n + 1 + lam),

with k the offset spread.  The lowest layer reads C_{o_max}(lam) * d_0 = 0,
so C_{o_max} is exactly the indicial polynomial, and layers below the full
relation reproduce the truncated seed sums of the engine (absent terms are
the ones whose d-index would be negative).

Only expansion about x = 0 is supported; shift the equation externally for
other points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import RationalIndexFunction
from .engine import RecurrenceSpec, SequenceWindow
from .errors import (CoefficientPole, NotAnIndicialRoot, SpecValidationError,
                     UnsupportedExpansionPoint)
from .poly import Polynomial, polynomial_roots

_INDICIAL_REL_TOL = 1e-8


@dataclass(frozen=True)
class ODESpec:
    """Coefficients a_0(x) .. a_order(x) of a homogeneous linear ODE."""

    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) < 2:
            raise SpecValidationError("the equation must have order >= 1")
        if self.coefficients[-1].is_zero():
            raise SpecValidationError("the highest-derivative coefficient is zero")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1


def _offset_groups(ode: ODESpec):
    """C_o(t) for every offset o = i - s with a nonzero monomial a_{i,s} x^s."""
    groups: dict[int, Polynomial] = {}
    for i, poly_x in enumerate(ode.coefficients):
        falling = Polynomial.falling(i)
        for s, coef in enumerate(poly_x.coeffs):
            if coef == 0:
                continue
            o = i - s
            groups[o] = groups.get(o, Polynomial()) + coef * falling
    return {o: p for o, p in groups.items() if not p.is_zero()}


def _leading_group(ode: ODESpec):
    groups = _offset_groups(ode)
    o_max = max(groups)
    lead = groups[o_max]
    if lead.degree() < ode.order:
        # The top derivative does not reach the lowest layer: the expansion
        # point is an irregular singularity and the normalization breaks down.
        raise UnsupportedExpansionPoint(
            f"indicial polynomial has degree {lead.degree()} < order {ode.order}; "
            "x = 0 is not an ordinary or regular-singular point")
    return groups, o_max, lead


def indicial_polynomial(ode: ODESpec) -> Polynomial:
    """Polynomial in lam whose roots are the admissible series exponents."""
    _, _, lead = _leading_group(ode)
    return lead


def indicial_root_values(ode: ODESpec):
    return polynomial_roots(indicial_polynomial(ode))


def derive_recurrence(ode: ODESpec, lam: complex) -> RecurrenceSpec:
    groups, o_max, lead = _leading_group(ode)
    scale = max(lead.magnitude_at(lam), 1e-300)
    if abs(lead(lam)) > _INDICIAL_REL_TOL * scale:
        raise NotAnIndicialRoot(
            f"lam = {lam!r} leaves the lowest layer nonzero "
            f"(|value| = {abs(lead(lam)):.3g}, scale {scale:.3g})")

    k = max(o_max - min(groups), 1)
    den = lead.shifted(1 + lam)
    funcs = []
    for l in range(1, k + 1):
        source = groups.get(o_max - l, Polynomial())
        if source.is_zero():
            funcs.append(RationalIndexFunction.zero())
            continue
        num = (-source).shifted(1 - l + lam)
        # Prefer the widest valid start index; coefficient l is only used
        # from n = l-1, so a pole strictly below that is harmless.
        try:
            funcs.append(RationalIndexFunction(num, den, 0))
        except CoefficientPole:
            try:
                funcs.append(RationalIndexFunction(num, den, l - 1))
            except CoefficientPole as exc:
                raise UnsupportedExpansionPoint(
                    f"coefficient of the leading unknown vanishes at n = {exc.index}",
                    index=exc.index) from exc
    return RecurrenceSpec(k, tuple(funcs))


def _falling_value(t: complex, i: int) -> complex:
    out = 1.0 + 0j
    for m in range(i):
        out *= t - m
    return out


def series_residual(ode: ODESpec, lam: complex, window: SequenceWindow,
                    x: complex) -> float:
    """Relative residual of the truncated series in the source equation.

    Derivatives are taken termwise: the i-th derivative of x^(n+lam) is
    F_i(n+lam) x^(n+lam-i).  The residual is normalized by the sum of the
    per-derivative term magnitudes, so 0 means the series solves the
    equation to roundoff at x.
    """
    if x == 0:
        raise ValueError("evaluate the residual away from the expansion point")
    total = 0j
    scale = 0.0
    for i, a_poly in enumerate(ode.coefficients):
        ai = a_poly(x)
        deriv = 0j
        mag = 0.0
        for n, d in enumerate(window.values):
            term = d * _falling_value(n + lam, i) * x ** (n + lam - i)
            deriv += term
            mag += abs(term)
        total += ai * deriv
        scale += abs(ai) * mag
    return abs(total) / max(scale, 1e-300)
