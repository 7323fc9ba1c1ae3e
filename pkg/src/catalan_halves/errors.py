"""Exception hierarchy shared by every module of the package."""


class RiordanError(Exception):
    """Base class for all errors raised by this package."""


class PrecisionError(RiordanError):
    """A coefficient beyond the known precision was requested.

    The caller should rebuild the inputs at a higher precision.
    """


class SequenceLengthError(PrecisionError, ValueError):
    """A sequence prefix is too short for the requested transform."""


class DomainError(RiordanError, ValueError):
    """An operation's mathematical precondition does not hold."""


class ValidationError(DomainError):
    """A (g, f) pair is not a valid Riordan array."""


class CatalogError(RiordanError, KeyError):
    """Unknown gallery name."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ParseError(RiordanError):
    """Syntax error in a generating-function expression or data file."""

    def __init__(self, message, position=None, expected=()):
        self.message = message
        self.position = position
        self.expected = tuple(expected)
        super().__init__(str(self))

    def __str__(self):
        text = self.message
        if self.position is not None:
            text = f"{text} at offset {self.position}"
        if self.expected:
            text = f"{text} (expected one of: {', '.join(self.expected)})"
        return text


class UnknownIdentifierError(ParseError):
    """An expression names a symbol with no value."""
