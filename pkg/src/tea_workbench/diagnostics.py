"""Coded findings emitted by the parser and the structural validator.

Severity is two-valued: ``error`` blocks downstream use of a case,
``warning`` does not. Codes are stable identifiers published in the
rule table (W1..W8) and the parser code table (P-xxx).
"""

from __future__ import annotations

from dataclasses import dataclass

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class SourceSpan:
    """1-based location of a token or region in a `.tea` source text."""

    line: int
    column: int
    length: int = 0

    def __post_init__(self):
        if self.line < 1 or self.column < 1 or self.length < 0:
            raise ValueError(f"invalid span {self.line}:{self.column}+{self.length}")


@dataclass(frozen=True)
class Diagnostic:
    code: str
    severity: str
    message: str
    node_ref: str | None = None
    span: SourceSpan | None = None

    def __post_init__(self):
        if self.severity not in (ERROR, WARNING):
            raise ValueError(f"unknown severity {self.severity!r}")
        if not self.message:
            raise ValueError("diagnostic message must be non-empty")

    @property
    def is_error(self) -> bool:
        return self.severity == ERROR


def sort_key(diag: Diagnostic):
    return (diag.severity, diag.code, diag.node_ref or "")


def has_errors(diagnostics) -> bool:
    return any(d.is_error for d in diagnostics)


def to_json_obj(diag: Diagnostic) -> dict:
    """Render one diagnostic as the wire/CLI JSON object."""
    return {
        "code": diag.code,
        "severity": diag.severity,
        "message": diag.message,
        "node": diag.node_ref,
        "line": diag.span.line if diag.span else None,
        "column": diag.span.column if diag.span else None,
    }
