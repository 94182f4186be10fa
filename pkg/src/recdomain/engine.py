"""Iteration of constant- and variable-coefficient recurrences.

Both sequence kinds share one update rule.  With the convention that
values at negative indices are zero,

    v_m = sum_{i=1..min(m, k)} alpha_i(m-1) * v_{m-i}

reproduces the truncated seed sums for m < k and the full (k+1)-term
relation from m = k on, so seeds never need a separate code path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import RationalIndexFunction
from .errors import NonFinite, SpecValidationError

OVERFLOW_LIMIT = 1e300


@dataclass(frozen=True)
class RecurrenceSpec:
    """A (k+1)-term recurrence d_{n+1} = sum_l alpha_l(n) d_{n+1-l}.

    Coefficient l is only ever evaluated at indices n >= l-1 (seed rows
    included), so each rational function must be finite from there on.
    """

    k: int
    coefficients: tuple
    start_index: int | None = None  # filled with k - 1 when omitted

    def __post_init__(self):
        if self.k < 1 or len(self.coefficients) != self.k:
            raise SpecValidationError(
                f"expected {self.k} coefficient functions, got {len(self.coefficients)}")
        for l, f in enumerate(self.coefficients, start=1):
            if f.n_min > l - 1:
                raise SpecValidationError(
                    f"coefficient {l} must be valid from n = {l - 1}, "
                    f"but starts at n = {f.n_min}")
        if self.start_index is None:
            object.__setattr__(self, "start_index", self.k - 1)

    @classmethod
    def constant(cls, alphas) -> "RecurrenceSpec":
        funcs = tuple(RationalIndexFunction.constant(a) for a in alphas)
        return cls(len(funcs), funcs)


@dataclass(frozen=True)
class SequenceWindow:
    """Sequence values for indices 0..n_max; values[0] is always 1."""

    values: tuple
    kind: str  # "constant" or "variable"


def _checked(value, index):
    mag = abs(value)
    if mag != mag or mag > OVERFLOW_LIMIT:  # NaN or overflow
        raise NonFinite(index)
    return value


def run_constant(alphas, n_max: int) -> SequenceWindow:
    """Constant-coefficient run; exact when alphas are ints or Fractions."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    alphas = list(alphas)
    k = len(alphas)
    values = [1]
    for m in range(1, n_max + 1):
        v = sum(alphas[i - 1] * values[m - i] for i in range(1, min(m, k) + 1))
        values.append(_checked(v, m))
    return SequenceWindow(tuple(values), "constant")


def run_variable(spec: RecurrenceSpec, n_max: int) -> SequenceWindow:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    funcs = spec.coefficients
    k = spec.k
    values = [1.0 + 0j]
    for m in range(1, n_max + 1):
        v = 0j
        for i in range(1, min(m, k) + 1):
            v += funcs[i - 1](m - 1) * values[m - i]
        values.append(_checked(v, m))
    return SequenceWindow(tuple(values), "variable")


def partial_sums(seq: SequenceWindow, x: complex, m_max: int) -> list:
    """S_m = sum_{n<=m} values[n] * x**n for m = 0..m_max, Kahan-compensated."""
    if not 0 <= m_max <= len(seq.values) - 1:
        raise ValueError("m_max must lie inside the available window")
    out = []
    total = 0j
    comp = 0j
    power = 1.0 + 0j
    for n in range(m_max + 1):
        term = seq.values[n] * power - comp
        fresh = total + term
        comp = (fresh - total) - term
        total = fresh
        out.append(total)
        power *= x
    return out
