"""Recurrence coefficients as rational functions of the index.

A coefficient alpha_l(n) is stored as a ratio of two polynomials in n.
Its limit for large n is read off the degrees exactly, and a certified
tail index N guarantees |alpha_l(n)| stays inside an inflated band
(1 + epsilon)*|limit| for every n >= N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CertificationFailed, CoefficientPole, DivergentLimit, SpecValidationError
from .poly import Polynomial, real_roots

_POLE_REL_TOL = 1e-12


def _integer_zero_at_or_after(den: Polynomial, n_min: int):
    """First integer n >= n_min where den vanishes, or None.

    Candidate integers come from the real roots of den; each candidate is
    confirmed by direct evaluation against the local conditioning scale.
    """
    if den.degree() < 1:
        return None
    hits = []
    for r in real_roots(den, imag_tol=1e-6):
        for m in {math.floor(r), round(r), math.ceil(r)}:
            if m < n_min:
                continue
            scale = den.magnitude_at(m)
            if abs(den(m)) <= _POLE_REL_TOL * max(scale, 1e-300):
                hits.append(int(m))
    return min(hits) if hits else None


@dataclass(frozen=True)
class RationalIndexFunction:
    """numerator(n) / denominator(n), guaranteed finite for integer n >= n_min."""

    numerator: Polynomial
    denominator: Polynomial
    n_min: int = 0

    def __post_init__(self):
        if self.denominator.is_zero():
            raise SpecValidationError("denominator is identically zero")
        bad = _integer_zero_at_or_after(self.denominator, self.n_min)
        if bad is not None:
            raise CoefficientPole(bad)

    @classmethod
    def constant(cls, value: complex) -> "RationalIndexFunction":
        return cls(Polynomial((value,)), Polynomial((1,)), 0)

    @classmethod
    def zero(cls) -> "RationalIndexFunction":
        return cls(Polynomial(), Polynomial((1,)), 0)

    def __call__(self, n) -> complex:
        den = self.denominator(n)
        if abs(den) <= _POLE_REL_TOL * max(self.denominator.magnitude_at(n), 1e-300):
            raise CoefficientPole(n)
        return self.numerator(n) / den

    def evaluate_array(self, ns: np.ndarray) -> np.ndarray:
        """Vectorized evaluation; callers must stay at indices >= n_min."""
        return self.numerator(ns) / self.denominator(ns)


def limit_of(f: RationalIndexFunction) -> complex:
    """Limit of f(n) as n grows, decided exactly by degree comparison.

    Zero limits are exact: perturbing non-leading coefficients cannot
    change the degree bookkeeping, hence cannot turn a zero limit nonzero.
    """
    deg_num = f.numerator.degree()
    deg_den = f.denominator.degree()
    if deg_num > deg_den:
        raise DivergentLimit(
            f"numerator degree {deg_num} exceeds denominator degree {deg_den}")
    if deg_num < deg_den:
        return 0j
    return f.numerator.leading() / f.denominator.leading()


def _last_real_feature(f: RationalIndexFunction):
    """Largest real critical point or pole of |f| on the real axis, or None.

    |f(t)|^2 = P(t)/Q(t) with P = num*conj(num), Q = den*conj(den); its
    critical points are the real roots of P'Q - PQ'.  Beyond the largest
    such root (and the largest real pole) |f| is monotone, so a finite
    scan plus this bound covers all remaining integers.
    """
    p = f.numerator * f.numerator.conjugate_coefficients()
    q = f.denominator * f.denominator.conjugate_coefficients()
    g = p.derivative() * q - p * q.derivative()
    candidates = real_roots(g) + real_roots(f.denominator)
    return max(candidates) if candidates else None


def certify_tail(f: RationalIndexFunction, limit: complex, epsilon: float,
                 horizon: int = 10 ** 6) -> int:
    """Smallest N with |f(n)| <= (1+epsilon)*|limit| for every integer n >= N.

    (For limit == 0 the band is |f(n)| <= epsilon.)  The range [N, horizon]
    is scanned directly; indices beyond the horizon are covered by the
    monotonicity certificate from _last_real_feature, which makes the scan
    a proof rather than a sample.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    horizon = int(horizon)
    if horizon < f.n_min:
        raise ValueError(f"horizon {horizon} lies below the start index {f.n_min}")
    bound = epsilon if limit == 0 else (1.0 + epsilon) * abs(limit)

    last = _last_real_feature(f)
    if last is not None and last >= horizon:
        raise CertificationFailed(
            f"|f| has a critical point or pole at n ~ {last:.6g}, beyond the "
            f"horizon {horizon}; enlarge the horizon")

    ns = np.arange(f.n_min, horizon + 1, dtype=float)
    bad = np.abs(f.evaluate_array(ns)) > bound
    if not bad.any():
        return f.n_min
    where = np.nonzero(bad)[0]
    first_bad = f.n_min + int(where[0])
    last_bad = f.n_min + int(where[-1])
    if last_bad >= horizon:
        raise CertificationFailed(
            f"bound {bound:.6g} still violated at the horizon {horizon}",
            first_violation=first_bad)
    return last_bad + 1


@dataclass(frozen=True)
class LimitProfile:
    """Coefficient limits with a certified inflation band.

    ``inflated[l]`` is (1+epsilon)*limits[l]; for a zero limit the slot
    holds epsilon itself, which still majorizes |alpha_l(n)| for n >= N.
    """

    limits: tuple
    epsilon: float
    tail_index: int
    inflated: tuple


def certify_profile(spec, epsilon: float = 0.05, horizon: int = 10 ** 6) -> LimitProfile:
    """Limits plus a single tail index valid for every coefficient of spec."""
    limits = [limit_of(f) for f in spec.coefficients]
    tails = [certify_tail(f, lim, epsilon, horizon)
             for f, lim in zip(spec.coefficients, limits)]
    inflated = [complex(epsilon) if lim == 0 else (1.0 + epsilon) * lim
                for lim in limits]
    return LimitProfile(tuple(limits), float(epsilon), max(tails), tuple(inflated))
