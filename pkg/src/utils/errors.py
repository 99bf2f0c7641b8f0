"""Typed errors raised by the Zernike library and CLI."""

from typing import Any, Dict, Optional


class ZernikeError(Exception):
    """Base error carrying the offending indices as context."""

    kind = "error"

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.context = dict(context or {})

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "errorType": self.kind,
            "message": self.message,
            "context": self.context,
        }

    def __repr__(self) -> str:
        where = ", ".join(f"{k}={v}" for k, v in self.context.items()) or "no context"
        return f"{type(self).__name__}({where}): {self.message}"


class InvalidIndexError(ZernikeError):
    """An index tuple violates its parity or range constraints."""

    kind = "invalid-index"


class InvalidArgumentError(ZernikeError):
    """Arguments are individually valid but not as a combination."""

    kind = "invalid-argument"


class OutOfRangeError(ZernikeError):
    """A recurrence step leaves its valid grid or hits a zero denominator."""

    kind = "out-of-range"


class FixtureFormatError(ZernikeError):
    """A fixture line cannot be parsed."""

    kind = "fixture-format"

    def __init__(
        self,
        message: str,
        file: Optional[str] = None,
        line: Optional[int] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        ctx = dict(context or {})
        if file is not None:
            ctx["file"] = file
        if line is not None:
            ctx["line"] = line
        super().__init__(message, ctx)
        self.file = file
        self.line = line


class UsageError(ZernikeError):
    """Bad command-line family, suite or range."""

    kind = "usage"
