"""Machine checks of the domination bounds and empirical convergence probes.

check_domination replays the inequality chain that proves the convergence
test: beyond a certified tail index N, the true |d_{N+j}| must stay under a
window combination of the constant-coefficient majorant c_{k+1,j} built
from the inflated moduli |alpha~_l|.  The probes (classify_convergence,
empirical_radius) are evidence rather than proof; their thresholds are
explicit and configurable.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .coefficients import LimitProfile
from .domain import abs_radius
from .engine import RecurrenceSpec, run_constant, run_variable
from .errors import CoefficientPole

DIVERGENCE_CAP = 1e50
CONVERGENCE_FLOOR = 1e-12
QUIET_RUN = 50


class Classification(enum.Enum):
    CONVERGED = "converged"
    DIVERGED = "diverged"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class DominationReport:
    """Outcome of the majorant check over j = 1..checked_up_to.

    min_slack is the smallest bound - |d_{N+j}| gap; violations lists the
    absolute sequence indices where the gap is negative, so violations is
    empty exactly when min_slack >= 0.  inflated_radius is the radius of
    the inflated-modulus domain, which shrinks as epsilon grows; the gap
    between it and the plain domain radius is the verification cost.
    """

    tail_index: int
    epsilon: float
    checked_up_to: int
    min_slack: float
    violations: tuple
    inflated_radius: float


def check_domination(spec: RecurrenceSpec, profile: LimitProfile,
                     j_max: int) -> DominationReport:
    """Verify |d_{N+j}| against the case-table window bounds for j <= j_max.

    The window shapes, with c_j the majorant sequence from the inflated
    moduli a_l = |alpha~_l| and the convention c_{<0} = 0:

      k = 1:  c_j |d_N|
      k = 2:  c_j |d_N| + c_{j-1} a_2 |d_{N-1}|
      k = 3:  c_j |d_N| + (c_{j+1} - c_j a_1) |d_{N-1}| + c_{j-1} a_3 |d_{N-2}|
      k = 4:  c_j |d_N| + (c_{j+1} - c_j a_1) |d_{N-1}|
              + (c_{j+2} - c_{j+1} a_1 - c_j a_2) |d_{N-2}| + c_{j-1} a_4 |d_{N-3}|
      k >= 5: the relaxed form c_j |d_N| + sum_i c_{j+1+i} |d_{N-1-i}|
              + c_{j-1} a_k |d_{N-k+1}|  (drops the negative corrections).

    N is lifted to at least k-1 so the back window d_{N-k+1}..d_N exists;
    the certified bound still covers every n >= N after lifting.
    """
    if j_max < 1:
        raise ValueError("j_max must be at least 1")
    k = spec.k
    n0 = max(profile.tail_index, k - 1)
    absd = [abs(v) for v in run_variable(spec, n0 + j_max).values]
    mods = [abs(z) for z in profile.inflated]
    c = run_constant(mods, j_max + k).values

    def cc(i: int) -> float:
        return c[i] if i >= 0 else 0.0

    slacks = []
    violations = []
    for j in range(1, j_max + 1):
        if k == 1:
            bound = cc(j) * absd[n0]
        elif k == 2:
            bound = cc(j) * absd[n0] + cc(j - 1) * mods[1] * absd[n0 - 1]
        elif k == 3:
            bound = (cc(j) * absd[n0]
                     + (cc(j + 1) - cc(j) * mods[0]) * absd[n0 - 1]
                     + cc(j - 1) * mods[2] * absd[n0 - 2])
        elif k == 4:
            bound = (cc(j) * absd[n0]
                     + (cc(j + 1) - cc(j) * mods[0]) * absd[n0 - 1]
                     + (cc(j + 2) - cc(j + 1) * mods[0] - cc(j) * mods[1]) * absd[n0 - 2]
                     + cc(j - 1) * mods[3] * absd[n0 - 3])
        else:
            bound = cc(j) * absd[n0] + cc(j - 1) * mods[k - 1] * absd[n0 - k + 1]
            for i in range(k - 2):
                bound += cc(j + 1 + i) * absd[n0 - 1 - i]
        slack = bound - absd[n0 + j]
        slacks.append(slack)
        if slack < 0:
            violations.append(n0 + j)
    return DominationReport(n0, profile.epsilon, j_max, min(slacks),
                            tuple(violations), abs_radius(mods))


def _coefficient_table(spec: RecurrenceSpec, n_max: int):
    """alpha_l(n) for n = 0..n_max-1; slots below n = l-1 are never read."""
    tables = []
    for l, f in enumerate(spec.coefficients, start=1):
        column = np.zeros(n_max, dtype=complex)
        if not f.numerator.is_zero():
            ns = np.arange(l - 1, n_max, dtype=float)
            column[l - 1:] = f.evaluate_array(ns)
            if not np.isfinite(column[l - 1:]).all():
                bad = l - 1 + int(np.nonzero(~np.isfinite(column[l - 1:]))[0][0])
                raise CoefficientPole(bad)
        tables.append(column.tolist())
    return tables


def _probe(spec: RecurrenceSpec, x: complex, n_max: int,
           divergence_cap: float, convergence_floor: float):
    """Iterate the scaled terms e_n = d_n x^n and classify their tail.

    Scaling the recurrence by x^l keeps the iteration finite wherever the
    series itself is bounded, even when d_n alone would overflow.
    """
    x = complex(x)
    k = spec.k
    tables = _coefficient_table(spec, n_max)
    weights = [x ** l for l in range(1, k + 1)]
    terms = [1.0 + 0j]
    total = 1.0 + 0j
    comp = 0j
    max_sum = 1.0
    quiet = 0
    recent: list[float] = [1.0]
    for m in range(1, n_max + 1):
        v = 0j
        for l in range(1, min(m, k) + 1):
            v += tables[l - 1][m - 1] * weights[l - 1] * terms[m - l]
        terms.append(v)
        mag = abs(v)
        recent.append(mag)
        if len(recent) > QUIET_RUN:
            recent.pop(0)
        if mag != mag or mag > divergence_cap:
            return Classification.DIVERGED, mag
        piece = v - comp
        fresh = total + piece
        comp = (fresh - total) - piece
        total = fresh
        max_sum = max(max_sum, abs(total))
        if mag < convergence_floor * max_sum:
            quiet += 1
            if quiet >= QUIET_RUN:
                return Classification.CONVERGED, max(recent)
        else:
            quiet = 0
    label = Classification.CONVERGED if quiet >= QUIET_RUN else Classification.INCONCLUSIVE
    return label, max(recent)


def classify_convergence(spec: RecurrenceSpec, x: complex, n_max: int = 10 ** 5,
                         divergence_cap: float = DIVERGENCE_CAP,
                         convergence_floor: float = CONVERGENCE_FLOOR) -> Classification:
    """Converged when the last 50 terms fall under convergence_floor times
    the largest partial-sum magnitude; Diverged when any term passes
    divergence_cap; Inconclusive otherwise."""
    if n_max < 100:
        raise ValueError("n_max must be at least 100")
    return _probe(spec, x, int(n_max), divergence_cap, convergence_floor)[0]


def classify_with_tail(spec: RecurrenceSpec, x: complex, n_max: int = 10 ** 5):
    """(classification, magnitude of the largest recent term); for sweeps."""
    if n_max < 100:
        raise ValueError("n_max must be at least 100")
    return _probe(spec, x, int(n_max), DIVERGENCE_CAP, CONVERGENCE_FLOOR)


def empirical_radius(spec: RecurrenceSpec, tol: float, n_max: int = 10 ** 5,
                     probe_cap: float = 64.0):
    """Bracket the observed convergence radius between a classified-Converged
    and a classified-Diverged |x|.

    Probes along the positive axis (the radius is phase-independent).  An
    Inconclusive midpoint never gets assigned to either side; the search
    tries two offset splits and otherwise returns the wider interval.
    Returns (r_lo, inf) when divergence is never observed up to probe_cap.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo = 0.0
    hi = None
    r = 1.0
    while r <= probe_cap:
        label = classify_convergence(spec, r, n_max)
        if label is Classification.DIVERGED:
            hi = r
            break
        if label is Classification.CONVERGED:
            lo = max(lo, r)
        r *= 2.0
    if hi is None:
        return lo, math.inf
    while hi - lo > tol:
        moved = False
        for frac in (0.5, 0.382, 0.618):
            mid = lo + frac * (hi - lo)
            label = classify_convergence(spec, mid, n_max)
            if label is Classification.CONVERGED and mid > lo:
                lo = mid
                moved = True
                break
            if label is Classification.DIVERGED and mid < hi:
                hi = mid
                moved = True
                break
        if not moved:
            break
    return lo, hi
