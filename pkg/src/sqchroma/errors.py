"""Exception types shared across the package."""


class SqchromaError(Exception):
    """Base class for package-specific failures."""


class BudgetExceeded(SqchromaError):
    """An exact search ran out of its node budget.

    Carries the best bounds proven before the abort: ``lower <= answer <= upper``
    (either bound may be None when nothing was established).
    """

    def __init__(self, message: str, lower=None, upper=None, nodes=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


class AlgorithmInvariantViolation(SqchromaError):
    """A proof-backed runtime assertion failed.

    Raised only when an invariant guaranteed by the underlying theory is
    observed to be false; it signals an implementation bug, never an
    expected condition on valid input.
    """


class LayoutMismatch(SqchromaError):
    """A ConvexLayout does not describe the graph it was paired with."""


class NotInducedCycle(SqchromaError):
    """The vertex sequence handed to a structure check is not an induced
    cycle of length at least four in the square."""


class RetryExhausted(SqchromaError):
    """A randomized generator failed its post-construction check repeatedly."""
