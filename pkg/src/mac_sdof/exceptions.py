"""Exception types raised across the package."""


class MacSdofError(Exception):
    """Base class for all errors raised by mac_sdof."""


class DimensionMismatch(MacSdofError, ValueError):
    """Channel matrices do not share a receiver dimension."""


class ToleranceViolation(MacSdofError, ArithmeticError):
    """A computed factorization failed one of its own invariant checks."""


class SingularMatrix(MacSdofError, ArithmeticError):
    pass


class InvalidDims(MacSdofError, ValueError):
    """Rank tuple violates max(r1, r2) <= r0 <= r1 + r2 or has negatives."""


class InvalidSizes(MacSdofError, ValueError):
    pass


class InfeasibleAllocation(MacSdofError, ValueError):
    pass
