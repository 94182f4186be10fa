"""Convergence domains for power series defined by multi-term recurrences.

Given d_{n+1} = alpha_1(n) d_n + ... + alpha_k(n) d_{n-k+1} with rational
coefficient functions (the shape produced by series solutions of linear
ODEs), this package certifies their limits, computes the disk of guaranteed
absolute convergence sum_m |alpha_m x^m| < 1, compares it with the
characteristic-root radius, and machine-checks the domination bounds that
justify the test.
"""

from .coefficients import (LimitProfile, RationalIndexFunction, certify_profile,
                           certify_tail, limit_of)
from .domain import (DomainReport, abs_radius, boundary_samples, contains,
                     domain_report, pp_radius)
from .engine import (RecurrenceSpec, SequenceWindow, partial_sums, run_constant,
                     run_variable)
from .errors import (CertificationFailed, CoefficientPole, DenominatorPole,
                     DivergentLimit, NonFinite, NotAnIndicialRoot, OutsideDomain,
                     PoleAtX, RecdomainError, RootFindingFailed,
                     SpecValidationError, UnsupportedExpansionPoint)
from .frobenius import (ODESpec, derive_recurrence, indicial_polynomial,
                        indicial_root_values, series_residual)
from .genfunc import abs_majorant_value, gf_value, multinomial_coefficient
from .heun import (HeunParams, heun_domain, heun_ode, heun_recurrence,
                   indicial_roots)
from .poly import Polynomial, polynomial_roots, real_roots
from .verify import (Classification, DominationReport, check_domination,
                     classify_convergence, classify_with_tail, empirical_radius)

__version__ = "0.1.0"

__all__ = [
    "CertificationFailed", "Classification", "CoefficientPole",
    "DenominatorPole", "DivergentLimit", "DomainReport", "DominationReport",
    "HeunParams", "LimitProfile", "NonFinite", "NotAnIndicialRoot", "ODESpec",
    "OutsideDomain", "PoleAtX", "Polynomial", "RationalIndexFunction",
    "RecdomainError", "RecurrenceSpec", "RootFindingFailed", "SequenceWindow",
    "SpecValidationError", "UnsupportedExpansionPoint", "abs_majorant_value",
    "abs_radius", "boundary_samples", "certify_profile", "certify_tail",
    "check_domination", "classify_convergence", "classify_with_tail",
    "contains", "derive_recurrence", "domain_report", "empirical_radius",
    "gf_value", "heun_domain", "heun_ode", "heun_recurrence",
    "indicial_polynomial", "indicial_root_values", "indicial_roots",
    "limit_of", "multinomial_coefficient", "partial_sums", "polynomial_roots",
    "pp_radius", "real_roots", "run_constant", "run_variable",
    "series_residual",
]
