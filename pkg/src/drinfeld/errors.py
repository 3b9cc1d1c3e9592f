"""Exception types shared across the library."""


class DrinfeldError(Exception):
    """Base class for library errors."""


class PreconditionError(DrinfeldError, ValueError):
    """An operation's stated precondition was violated."""


class InseparableError(PreconditionError):
    """Torsion polynomial is inseparable (ideal meets the characteristic)."""


class ScopeError(DrinfeldError):
    """The input is valid mathematics but outside this library's scope."""


class BudgetExhausted(DrinfeldError):
    """A semi-decision search ran out of its step budget.

    ``progress`` carries a machine-readable report of what was tried.
    """

    def __init__(self, message, progress=None):
        super().__init__(message)
        self.progress = progress or {}
