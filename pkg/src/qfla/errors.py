"""Exception hierarchy.

Every error that carries a concrete location exposes it as
``first_failure`` so callers (and the CLI) can report it uniformly.
"""

from __future__ import annotations


class QflaError(Exception):
    kind = "error"

    def __init__(self, message: str, first_failure: tuple | None = None):
        super().__init__(message)
        self.first_failure = first_failure


class DimensionMismatch(QflaError, ValueError):
    kind = "dimension-mismatch"


class SizeExceeded(QflaError, ValueError):
    kind = "size-exceeded"


class NotSkewError(QflaError, ValueError):
    kind = "not-skew"


class PreconditionError(QflaError, ValueError):
    kind = "precondition"


class InvalidBialgebra(QflaError):
    kind = "invalid-bialgebra"


class CYBEViolation(PreconditionError):
    """[[r,r]] != 0; ``first_failure`` is the offending tensor index."""

    kind = "cybe-violation"

    def __init__(self, message: str, first_failure: tuple | None = None, value=None):
        super().__init__(message, first_failure)
        self.value = value


class ActingAlgebraMismatch(QflaError, ValueError):
    kind = "acting-algebra-mismatch"


class WorkspaceError(QflaError):
    """Any problem found while reading a workspace file."""

    kind = "workspace"

    def __init__(self, message: str, line: int, column: int = 1, lexeme: str = "",
                 expected: frozenset | None = None):
        self.line = line
        self.column = column
        self.lexeme = lexeme
        self.expected = frozenset(expected or ())
        where = f"line {line}, column {column}"
        if lexeme:
            where += f", at {lexeme!r}"
        if self.expected:
            message += " (expected one of: " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(f"{where}: {message}", (line, column))


class ParseError(WorkspaceError):
    kind = "syntax"


class DuplicateName(WorkspaceError):
    kind = "duplicate-name"


class UnresolvedReference(WorkspaceError):
    kind = "unresolved-reference"


class AntisymmetryConflict(WorkspaceError):
    kind = "antisymmetry-conflict"
