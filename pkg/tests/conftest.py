import cmath

import numpy as np

from recdomain import HeunParams, Polynomial, RationalIndexFunction, RecurrenceSpec


def heun_defaults(a) -> HeunParams:
    """Default exponent parameters used across the suite: alpha=beta=gamma=delta=1, q=0."""
    return HeunParams(a, 1, 1, 1, 1, 0)


def random_rational_spec(rng: np.random.Generator, k: int) -> RecurrenceSpec:
    """A k-coefficient spec alpha_l(n) = z_l (n + b_l) / (n + c_l).

    Positive integer b_l, c_l keep every denominator pole strictly below
    n = 0, so the spec certifies quickly at any epsilon.
    """
    funcs = []
    for _ in range(k):
        mag = rng.uniform(0.3, 1.2)
        z = mag * cmath.exp(1j * rng.uniform(0.0, 2.0 * cmath.pi))
        b = int(rng.integers(1, 7))
        c = int(rng.integers(1, 7))
        funcs.append(RationalIndexFunction(Polynomial([z * b, z]),
                                           Polynomial([c, 1])))
    return RecurrenceSpec(k, tuple(funcs))


def radius_for_target(mods, target: float) -> float:
    """r with sum_m mods[m-1] * r^m = target, by plain bisection (test oracle)."""
    def g(r):
        total, power = 0.0, 1.0
        for m in mods:
            power *= r
            total += m * power
        return total

    hi = 1.0
    while g(hi) < target:
        hi *= 2.0
    lo = 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
