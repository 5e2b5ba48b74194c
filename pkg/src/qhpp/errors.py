"""Exception types shared across the package.

Each CLI-visible failure mode has its own class so the command layer can
map it to a stable exit code without string matching.
"""

from __future__ import annotations


class QhppError(Exception):
    """Base class for all package errors."""


class ParseError(QhppError):
    """Malformed system file or expression.

    Carries 1-based line and column of the offending token when known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {column})" if column is not None else ")")
        super().__init__(message + where)


class ZeroSystemError(ParseError):
    """One component is identically zero, so p*q vanishes identically.

    Everything downstream assumes p*q is not the zero polynomial; the
    parser rejects such input rather than letting the weight search
    produce vacuous answers.
    """

    def __init__(self, component: str):
        super().__init__(f"component {component} is identically zero (p*q must not vanish)")


class NotQuasiHomogeneousError(QhppError):
    """The system admits no positive weight vector."""


class CommonFactorError(QhppError):
    """The two components share a nonconstant polynomial factor."""

    def __init__(self, factor_text: str):
        self.factor_text = factor_text
        super().__init__(f"components share the factor {factor_text}")


class UnsupportedDegreeError(QhppError):
    """Catalog or census requested for a degree that is not built in."""


class NoRowMatchedError(QhppError):
    """A computed sign tuple matches no published classification row.

    The row tables are consumed as published; gaps are surfaced instead of
    being papered over with a nearest match.  The message carries the full
    tuple so the discrepancy can be logged.
    """


class BadWindowError(QhppError):
    """Plot window string is malformed or degenerate."""


class InternalInvariantError(QhppError):
    """A structural property the analysis relies on failed to hold.

    Raised instead of silently producing a wrong classification; seeing one
    of these is a bug report, not a user error.
    """
