"""Exception types shared across the library."""


class SingularMatrixError(ValueError):
    """The corner value lands on (or within tolerance of) a singular configuration."""


class PivotBreakdownError(SingularMatrixError):
    """Dense elimination hit a pivot below threshold; the input is numerically singular."""


class UnsupportedCaseError(ValueError):
    """The requested quantity is only defined for a different (b, b_tilde) regime."""


class DivergenceError(RuntimeError):
    """Fixed-point iteration diverged (successive differences kept growing).

    The partially computed result, when available, is attached as ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
