"""Exception hierarchy shared by every module of the package."""

from dataclasses import dataclass


class XFormError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(XFormError, ValueError):
    pass


class NotSpatial(XFormError, ValueError):
    pass


class EnumerationGuard(XFormError):
    """A requested enumeration would exceed the configured instance cap."""


class BoundTooSmall(XFormError, ValueError):
    pass


class EmptyTarget(XFormError, ValueError):
    pass


class MixedLengths(XFormError, ValueError):
    pass


class PatternFormatError(XFormError, ValueError):
    """Malformed ``.pat`` text."""


@dataclass(frozen=True)
class ParseDiagnostic:
    byte_offset: int
    message: str
    kind: str  # "SyntaxError" | "KindError" | "WidthError"

    def __str__(self):
        return f"{self.kind} at offset {self.byte_offset}: {self.message}"


class ParseError(XFormError, ValueError):
    """Raised by the form parser; ``diagnostic`` locates the problem."""

    kind = "SyntaxError"

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.message = message
        self.diagnostic = None
        if offset is not None:
            self.diagnostic = ParseDiagnostic(offset, message, self.kind)

    def __str__(self):
        if self.diagnostic is not None:
            return str(self.diagnostic)
        return self.message


class FormSyntaxError(ParseError):
    kind = "SyntaxError"


class WidthError(ParseError):
    kind = "WidthError"


class KindError(ParseError):
    """NOT or AND applied to a general (non-spatial) operand.

    Raised without a diagnostic when a tree is built directly, and with one
    when the parser builds it.
    """

    kind = "KindError"
