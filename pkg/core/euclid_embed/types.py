from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional

import numpy as np

from core.errors import CoincidentPointsError, InvalidMetricError
from core.menger.circumradius import METRIC_TOL


@dataclass(frozen=True)
class Embedding:
    points: np.ndarray  # (k, dim) Euclidean coordinates
    labels: tuple[str, ...]

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[0] != len(self.labels):
            raise ValueError(f"{len(self.labels)} labels for points of shape {pts.shape}")
        object.__setattr__(self, "points", pts)

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def distances(self) -> np.ndarray:
        diff = self.points[:, None, :] - self.points[None, :, :]
        return np.linalg.norm(diff, axis=-1)

    def translated(self, t: np.ndarray) -> "Embedding":
        return Embedding(self.points + t, self.labels)

    def lifted(self, dim: int) -> "Embedding":
        """Pad coordinates with zeros up to dim."""
        pad = np.zeros((self.points.shape[0], dim - self.dim))
        return Embedding(np.hstack([self.points, pad]), self.labels)


@dataclass(frozen=True)
class DistanceMatrix4:
    """Symmetric 4x4 matrix of a metric on four mutually distinct points."""

    d: np.ndarray
    labels: tuple[str, ...] = ("p0", "p1", "p2", "p3")
    metric_tol: float = METRIC_TOL

    def __post_init__(self):
        d = np.asarray(self.d, dtype=np.float64)
        if d.shape != (4, 4):
            raise InvalidMetricError(f"distance matrix must be 4x4, got {d.shape}")
        if not np.all(np.isfinite(d)) or np.any(d < 0):
            raise InvalidMetricError("distances must be finite and nonnegative")
        scale = np.max(d)
        if not np.allclose(d, d.T, rtol=0, atol=self.metric_tol * scale):
            raise InvalidMetricError("distance matrix is not symmetric")
        if np.any(np.diag(d) != 0):
            raise InvalidMetricError("distance matrix diagonal must be zero")
        off = d[~np.eye(4, dtype=bool)]
        if np.any(off <= 0):
            raise CoincidentPointsError("off-diagonal distances must be positive")
        d = 0.5 * (d + d.T)
        for i, j, k in combinations(range(4), 3):
            s = sorted((d[i, j], d[j, k], d[i, k]), reverse=True)
            if s[0] > s[1] + s[2] + self.metric_tol * sum(s):
                raise InvalidMetricError(f"triangle inequality violated on triple {(i, j, k)}")
        object.__setattr__(self, "d", d)

    @staticmethod
    def from_points(points, metric) -> "DistanceMatrix4":
        """metric: callable (x, y) -> distance"""
        pts = [np.asarray(p, dtype=np.float64) for p in points]
        return DistanceMatrix4(np.array([[metric(p, q) if i != j else 0.0 for j, q in enumerate(pts)]
                                         for i, p in enumerate(pts)]))

    @property
    def scale(self) -> float:
        return float(np.max(self.d))


class ObstructionKind(str, Enum):
    NEGATIVE_SQUARED_HEIGHT = "negative_squared_height"
    COLLINEAR_INCONSISTENT = "collinear_inconsistent"


@dataclass(frozen=True)
class Obstruction:
    kind: ObstructionKind
    value: float  # squared height, or worst distance mismatch for collinear configurations
    base: tuple[int, int, int]  # indices of the triple used as base
    apex: int


@dataclass(frozen=True)
class FourPointVerdict:
    embeddable: bool
    embedding: Optional[Embedding] = None
    obstruction: Optional[Obstruction] = None
    squared_height: float = field(default=0.0)
