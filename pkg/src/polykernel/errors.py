"""Exception hierarchy shared by every stage of the pipeline.

The CLI maps these onto its exit codes, so new error kinds should
subclass one of the three leaves below rather than ``KernelError``.
"""

from __future__ import annotations


class KernelError(Exception):
    """Base class for all errors raised by polykernel."""


class ParseError(KernelError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        if line is None:
            super().__init__(message)
        else:
            super().__init__(f"{line}:{column or 1}: {message}")


class ValidationError(KernelError):
    pass


class DegenerateSpecError(ValidationError):
    """The specification has no solution-symbol occurrences (s = 0)."""


class BudgetExceeded(KernelError):
    pass


class InvariantViolation(KernelError):
    """A guarantee that the construction relies on did not hold."""
