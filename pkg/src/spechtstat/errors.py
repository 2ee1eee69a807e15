"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class ResourceLimitError(RuntimeError):
    """A factorial-cost computation was requested above its configured ceiling."""


class ParseError(ValueError):
    """A text file or string could not be parsed; the message carries a line number."""
