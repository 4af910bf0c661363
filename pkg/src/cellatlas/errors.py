"""Exception hierarchy. Each class carries the CLI exit code it maps to."""

from __future__ import annotations


class CellAtlasError(Exception):
    exit_code = 1


class ValidationError(CellAtlasError, ValueError):
    """Malformed input: bad partition, bad symbol rows, bad family data."""

    exit_code = 2


class AmbientMismatchError(ValidationError):
    """Two F2 objects living in different ambient spaces were combined."""


class MembershipError(ValidationError):
    """A symbol was used with a family it does not belong to."""


class ShapeMismatchError(ValidationError):
    """A TL pattern was used with a family or pattern of a different shape."""


class NotSpecialError(CellAtlasError):
    exit_code = 3


class DomainError(CellAtlasError):
    """Valid input outside the computable domain."""

    exit_code = 4


class DegenerateFamilyError(DomainError):
    pass


class UnknownOrbitError(DomainError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class InconsistencyError(CellAtlasError):
    """A structural identity failed. Always a bug."""

    exit_code = 5
