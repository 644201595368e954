"""
Exception hierarchy shared by all core modules.

Input validation failures also derive from ValueError so callers that only
know about the builtin still catch them.
"""
from typing import Optional


class CircumradiusError(Exception):
    """Base class for every error raised by the toolkit."""


class DimensionMismatchError(CircumradiusError, ValueError):
    def __init__(self, expected: int, got: int, what: str = "point"):
        super().__init__(f"{what} has dimension {got}, expected {expected}")
        self.expected = expected
        self.got = got


class InvalidNormError(CircumradiusError, ValueError):
    """Norm parameters do not describe a norm (non-SPD matrix, asymmetric polytope, ...)."""


class InvalidMetricError(CircumradiusError, ValueError):
    """Distances violate the metric axioms beyond tolerance."""


class CoincidentPointsError(CircumradiusError, ValueError):
    """Points that must be mutually distinct coincide."""


class DegenerateTriangleError(CircumradiusError, ValueError):
    """Operation needs a non-collinear triangle."""


class UnsupportedDimensionError(CircumradiusError, ValueError):
    def __init__(self, dim: int, minimum: int = 2):
        super().__init__(f"dimension {dim} not supported, need dim >= {minimum}")
        self.dim = dim
        self.minimum = minimum


class NotEmbeddableError(CircumradiusError):
    """A sphere triple plus its center admits no Euclidean embedding."""

    def __init__(self, rho: float, r: float):
        reason = "collinear triple" if rho == float("inf") else "circumradius exceeds sphere radius"
        super().__init__(f"not embeddable: {reason} (rho={rho!r}, r={r!r})")
        self.rho = rho
        self.r = r


class ConfigError(CircumradiusError, ValueError):
    def __init__(self, message: str, location: Optional[str] = None):
        text = f"{location}: {message}" if location else message
        super().__init__(text)
        self.location = location
        self.message = message


class PointCloudFormatError(CircumradiusError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None, source: str = "<input>"):
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")
        self.line = line
        self.source = source


class ZeroDirectionError(CircumradiusError, ValueError):
    """A direction vector that must be nonzero is zero."""
