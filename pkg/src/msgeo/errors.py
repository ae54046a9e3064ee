"""Exception hierarchy.

Every domain error carries a stable ``code`` (the class name) and a
``detail`` mapping, which the CLI serialises verbatim.
"""

from __future__ import annotations

from typing import Any


class MetricGeometryError(ValueError):
    """Base class for all domain errors raised by msgeo."""

    def __init__(self, message: str = "", **detail: Any):
        self.detail = detail
        super().__init__(message or self.code)

    @property
    def code(self) -> str:
        return type(self).__name__


# space validation
class NonSquare(MetricGeometryError):
    pass


class NonZeroDiagonal(MetricGeometryError):
    pass


class AsymmetricAt(MetricGeometryError):
    pass


class NegativeAt(MetricGeometryError):
    pass


class ZeroOffDiagonal(MetricGeometryError):
    pass


class TriangleViolation(MetricGeometryError):
    pass


class DuplicateLabel(MetricGeometryError):
    pass


class NonFinite(MetricGeometryError):
    pass


# parameters and guards
class InvalidParams(MetricGeometryError):
    pass


class SingletonSpace(MetricGeometryError):
    pass


class TooLarge(MetricGeometryError):
    pass


class InvalidPartition(MetricGeometryError):
    pass


class EmptySet(MetricGeometryError):
    pass


class IndexOutOfRange(MetricGeometryError):
    pass


class SOutOfRange(MetricGeometryError):
    pass


class EmptyC(MetricGeometryError):
    pass


class InvalidCorrespondence(MetricGeometryError):
    pass


class WrongCardinality(MetricGeometryError):
    pass


class TOutOfRange(MetricGeometryError):
    pass


class LambdaTooSmall(MetricGeometryError):
    pass


class NOutOfRange(MetricGeometryError):
    pass


class DegenerateDiameter(MetricGeometryError):
    pass


class InvalidAB(MetricGeometryError):
    pass


class InvalidGraph(MetricGeometryError):
    pass


class MOutOfRange(MetricGeometryError):
    pass


class NoEdgeCover(MetricGeometryError):
    pass


class OracleMismatch(MetricGeometryError):
    """A GH-route value disagreed with its brute-force oracle."""


# I/O
class ParseError(MetricGeometryError):
    pass


class FileNotFound(MetricGeometryError):
    pass
