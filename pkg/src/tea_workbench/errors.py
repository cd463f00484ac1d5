"""Exception hierarchy shared across the engine."""

from __future__ import annotations


class TeaError(Exception):
    """Base class for all engine errors."""


class ConstructionError(TeaError):
    """A value failed its construction invariants (empty text, bad id, ...)."""


class NotFoundError(TeaError):
    """A referenced node, map, or resource does not exist."""


class DuplicateIdError(TeaError):
    """An id is already taken in its namespace."""


class ForbiddenError(TeaError):
    """The operation is structurally disallowed (e.g. removing the root)."""


class DecodeError(TeaError):
    """A serialized case violates the canonical schema.

    ``path`` names the offending location, e.g. ``$.claims[2].children``.
    """

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class SchemaError(TeaError):
    """A tabular input is missing a required column or names a bad one."""


class EmptyTableError(TeaError):
    """A prediction table contains a header but no data rows."""


class FileError(TeaError):
    """An I/O failure, carrying the path involved."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class PreconditionError(TeaError):
    """An operation was invoked on a case that fails structural validation.

    ``diagnostics`` lists the blocking findings.
    """

    def __init__(self, message: str, diagnostics):
        super().__init__(message)
        self.diagnostics = list(diagnostics)


class ConflictError(TeaError):
    """An optimistic-concurrency write lost the race (revision mismatch)."""
