"""The Heun equation's 3-term recurrence, the flagship concrete instance.

For the equation

    y'' + (gamma/x + delta/(x-1) + eps_h/(x-a)) y' + (alpha*beta*x - q) /
          (x (x-1) (x-a)) y = 0,      eps_h = alpha + beta - gamma - delta + 1,

substituting y = x^lam * sum d_n x^n gives d_{n+1} = A_n d_n + B_n d_{n-1}
where A_n and B_n are ratios of quadratics in n over the shared denominator
(n + 1 + lam)(n + gamma + lam), with large-n limits A = (1+a)/a and
B = -1/a.  The exponent eps_h is always derived from the other parameters,
never accepted independently, and is named eps_h to keep it apart from the
tail-certification bound epsilon.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import RationalIndexFunction
from .domain import DomainReport, domain_report
from .engine import RecurrenceSpec
from .errors import CoefficientPole, DenominatorPole, SpecValidationError
from .frobenius import ODESpec
from .poly import Polynomial


@dataclass(frozen=True)
class HeunParams:
    a: complex
    alpha: complex
    beta: complex
    gamma: complex
    delta: complex
    q: complex

    def __post_init__(self):
        if self.a == 0:
            raise SpecValidationError("singularity parameter a must be nonzero")

    @property
    def epsilon_h(self) -> complex:
        return self.alpha + self.beta - self.gamma - self.delta + 1


def indicial_roots(params: HeunParams):
    return 0j, 1 - complex(params.gamma)


def heun_recurrence(params: HeunParams, lam: complex = 0j) -> RecurrenceSpec:
    """The k = 2 recurrence for the exponent lam.

    Raises DenominatorPole when (n+1+lam)(n+gamma+lam) vanishes at some
    integer n >= 0, e.g. lam = 0 with gamma a nonpositive integer.
    """
    a, al, be, ga, de, q = (complex(params.a), complex(params.alpha),
                            complex(params.beta), complex(params.gamma),
                            complex(params.delta), complex(params.q))
    den = Polynomial([(1 + lam) * (ga + lam), 1 + ga + 2 * lam, 1])
    num1 = Polynomial([
        (lam * (al + be - de + lam + a * (ga + de - 1 + lam)) + q) / a,
        (al + be - de + 2 * lam + a * (ga + de - 1 + 2 * lam)) / a,
        (1 + a) / a,
    ])
    num2 = Polynomial([
        -((al - 1 + lam) * (be - 1 + lam)) / a,
        -(al + be - 2 + 2 * lam) / a,
        -1 / a,
    ])
    try:
        f1 = RationalIndexFunction(num1, den, 0)
        f2 = RationalIndexFunction(num2, den, 0)
    except CoefficientPole as exc:
        raise DenominatorPole(exc.index) from exc
    return RecurrenceSpec(2, (f1, f2))


def heun_domain(params: HeunParams, lam: complex = 0j) -> DomainReport:
    """Convergence report from the coefficient limits ((1+a)/a, -1/a).

    The limits do not depend on lam, but the recurrence is built first so
    denominator poles surface exactly as in heun_recurrence.
    """
    heun_recurrence(params, lam)
    a = complex(params.a)
    return domain_report(((1 + a) / a, -1 / a))


def heun_ode(params: HeunParams) -> ODESpec:
    """The same equation with denominators cleared, as polynomial data:

    x(x-1)(x-a) y'' + [gamma(x-1)(x-a) + delta x(x-a) + eps_h x(x-1)] y'
                    + (alpha beta x - q) y = 0
    """
    a, al, be, ga, de, q = (complex(params.a), complex(params.alpha),
                            complex(params.beta), complex(params.gamma),
                            complex(params.delta), complex(params.q))
    eh = params.epsilon_h
    a2 = Polynomial([0, a, -(1 + a), 1])
    a1 = Polynomial([ga * a, -(ga * (1 + a) + de * a + eh), ga + de + eh])
    a0 = Polynomial([-q, al * be])
    return ODESpec((a0, a1, a2))
