"""Closed-form generating function and its exact multinomial expansion.

The constant-coefficient sequence c_{k+1,n} has generating function
1 / (1 - sum_j alpha_j x^j).  Expanding that geometric series multinomially
expresses c_{k+1,n} as an exact finite sum over index tuples, which serves
as an independent oracle for the iteration engine.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .errors import OutsideDomain, PoleAtX

POLE_TOL = 1e-14


def gf_value(alphas, x: complex) -> complex:
    den = 1.0 + 0j
    power = 1.0 + 0j
    for a in alphas:
        power *= x
        den -= a * power
    if abs(den) < POLE_TOL:
        raise PoleAtX(f"1 - sum alpha_j x^j = {den!r} at x = {x!r}")
    return 1.0 / den


@lru_cache(maxsize=None)
def _weighted_tuples(k: int, n: int):
    """All tuples (i_k, ..., i_1) of nonnegative ints with sum j*i_j = n,
    each with its multinomial weight (sum i)! / prod i_j!.

    Enumeration descends from the largest part, so the tuple component
    order is reversed relative to the part index.
    """
    out = []

    def descend(part, remaining, counts):
        if part == 1:
            counts = counts + (remaining,)
            weight = factorial(sum(counts))
            for c in counts:
                weight //= factorial(c)
            out.append((counts, weight))
            return
        for i in range(remaining // part, -1, -1):
            descend(part - 1, remaining - part * i, counts + (i,))

    descend(k, n, ())
    return tuple(out)


def multinomial_coefficient(alphas, n: int):
    """Exact value of c_{k+1,n} from the multinomial expansion.

    alphas must be exact (ints or Fractions); the result is exact and must
    agree with run_constant at index n when that is run exactly too.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    k = len(alphas)
    if k == 0:
        return 1 if n == 0 else 0
    total = 0
    for counts, weight in _weighted_tuples(k, n):
        term = weight
        for part, count in zip(range(k, 0, -1), counts):
            if count:
                term *= alphas[part - 1] ** count
        total += term
    return total


def abs_majorant_value(alphas, x: complex) -> float:
    """Value of the modulus-majorant series sum_r (sum_j |alpha_j x^j|)^r."""
    s = 0.0
    power = 1.0
    ax = abs(x)
    for a in alphas:
        power *= ax
        s += abs(a) * power
    if s >= 1.0:
        raise OutsideDomain(f"sum |alpha_j x^j| = {s:.6g} >= 1")
    return 1.0 / (1.0 - s)
