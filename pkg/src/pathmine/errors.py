"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: ValidationError -> 1 (usage),
ParseError / missing files -> 2 (parse), anything else -> 3 (runtime).
"""


class PathmineError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(PathmineError, ValueError):
    """A precondition on arguments or configuration was violated."""


class ParseError(PathmineError, ValueError):
    """Malformed input text. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
