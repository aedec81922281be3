"""Exception hierarchy shared by every module of the package."""


class ChevError(Exception):
    """Base class for all package errors."""


class IncompatibleRingError(ChevError, ValueError):
    """Operands live in different polynomial rings."""


class ParseError(ChevError, ValueError):
    """Malformed polynomial or word text.

    ``pos`` is the 0-based character offset into the parsed text; ``line``
    and ``column`` are 1-based and are what the CLI reports.
    """

    def __init__(self, message, text="", pos=0):
        self.message = message
        self.text = text
        self.pos = pos
        before = text[:pos]
        self.line = before.count("\n") + 1
        self.column = pos - (before.rfind("\n") + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column})")


class UnknownVariableError(ParseError):
    """A variable name outside x1..xk was referenced."""


class IndexRangeError(ChevError, IndexError):
    """A row, column or variable index is out of range."""


class UnsupportedError(ChevError, ValueError):
    """The input is well-formed but outside what the operation supports."""


class ConstructionError(ChevError, RuntimeError):
    """A factorization could not be certified; indicates a defect."""
