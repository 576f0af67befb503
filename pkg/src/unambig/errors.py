"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates an operation's stated requirements."""


class ParseError(DomainError):
    """Malformed text input; the message names the offending token."""


class ResourceError(RuntimeError):
    """An enumeration guard or search budget was exceeded."""


class BudgetError(ResourceError):
    """A search ran out of node budget before reaching a verdict."""


class InconsistencyError(RuntimeError):
    """A computed result contradicts an established combinatorial fact.

    Raised by scans when an exhaustive search disagrees with a proven
    statement; always indicates an implementation bug, never new math.
    """
