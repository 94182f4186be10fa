"""Exception types shared across the library."""


class RecdomainError(Exception):
    """Base class for every failure raised by this package."""


class SpecValidationError(RecdomainError):
    """Input data failed structural validation."""


class DivergentLimit(RecdomainError):
    """A recurrence coefficient grows without bound in the index.

    The convergence test requires every coefficient to have a finite
    limit; callers must reject the recurrence when this is raised.
    """


class CertificationFailed(RecdomainError):
    """No tail index could be certified within the requested horizon."""

    def __init__(self, message, first_violation=None):
        super().__init__(message)
        self.first_violation = first_violation


class NonFinite(RecdomainError):
    """A sequence value left the representable range (|value| > 1e300)."""

    def __init__(self, index):
        super().__init__(f"sequence value non-finite at index {index}")
        self.index = index


class CoefficientPole(RecdomainError):
    """A coefficient denominator vanishes at a used integer index."""

    def __init__(self, index):
        super().__init__(f"coefficient denominator vanishes at n = {index}")
        self.index = index


class PoleAtX(RecdomainError):
    """Evaluation point sits on (or numerically at) the characteristic variety."""


class OutsideDomain(RecdomainError):
    """The majorant series is evaluated outside its convergence domain."""


class RootFindingFailed(RecdomainError):
    """A polished polynomial root still has an unacceptable residual."""


class DenominatorPole(RecdomainError):
    """The shared recurrence denominator vanishes at a nonnegative integer."""

    def __init__(self, index):
        super().__init__(f"recurrence denominator vanishes at n = {index}")
        self.index = index


class NotAnIndicialRoot(RecdomainError):
    """The exponent does not annul the lowest collected layer of the series."""


class UnsupportedExpansionPoint(RecdomainError):
    """The expansion point at 0 does not admit the normalized recurrence."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index
