"""Exception hierarchy shared by every module."""


class PermPairError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(PermPairError, ValueError):
    """Operands live on different ground sets, or a mapping is not a bijection."""


class DomainError(PermPairError, ValueError):
    """An operation was called outside its precondition (e.g. ``a == b``)."""


class DegenerateError(PermPairError, ValueError):
    """The result would be empty or otherwise degenerate."""


class ParseError(PermPairError, ValueError):
    """Malformed cycle notation.  ``line`` and ``column`` are 1-based."""

    def __init__(self, message, text="", line=1, column=1):
        self.text = text
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
