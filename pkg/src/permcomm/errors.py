"""Exception hierarchy shared by every module."""


class PermCommError(Exception):
    """Base class for all errors raised by permcomm."""


class BadCycleNotation(PermCommError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DegreeMismatch(PermCommError, ValueError):
    pass


class EnumerationCapExceeded(PermCommError):
    """An operation needed a full element list (or coset table) above the cap."""


class NotAMember(PermCommError, ValueError):
    pass


class NotNormal(PermCommError, ValueError):
    pass


class NotSoluble(PermCommError, ValueError):
    pass


class HallSearchFailed(PermCommError, RuntimeError):
    """Greedy Hall search ended below the pi-part; indicates a bug."""


class UnknownSelector(PermCommError, ValueError):
    pass


class DuplicateLabel(PermCommError, ValueError):
    pass


class IoFailure(PermCommError, OSError):
    pass


class FormulaMismatch(PermCommError, AssertionError):
    """The pair-count and centralizer-sum routes disagreed."""


class PreconditionNotMet(PermCommError, ValueError):
    pass
