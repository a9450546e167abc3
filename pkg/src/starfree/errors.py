"""Exception hierarchy shared by all modules."""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ToolkitError, ValueError):
    """Malformed or out-of-domain input.

    May carry a ``violation`` attribute when the offending input is a
    coloring that failed verification.
    """

    def __init__(self, message, violation=None):
        super().__init__(message)
        self.violation = violation


class PreconditionError(ToolkitError, ValueError):
    """A documented precondition of an operation does not hold."""


class CascadeViolationError(PreconditionError):
    """A color class adjacent to the collapsed one escapes the common element.

    Carries the offending vertex index and its color in ``offender``.
    """

    def __init__(self, message, offender=None):
        super().__init__(message)
        self.offender = offender


class ResourceLimitError(ToolkitError, RuntimeError):
    """Instance exceeds a configured size or budget limit."""


class InternalConsistencyError(ToolkitError, RuntimeError):
    """An invariant that should be unconditionally true failed.

    Reaching this either exposes a bug or falsifies a theorem; both
    deserve a loud stop rather than a best-effort answer.
    """
