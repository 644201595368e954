"""
Weighted point clouds: the finite stand-in for a set X and a measure on it.

Weights are user supplied (counting measure, polygonal arclength, ...).
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Union

import numpy as np

from core.errors import CoincidentPointsError, DimensionMismatchError, InvalidMetricError, PointCloudFormatError
from core.menger.circumradius import METRIC_TOL
from core.normspace.space import NormSpec, norms, pairwise_distances, sphere_point

DISTINCT_TOL = 1e-12

Parametrization = Callable[[float], np.ndarray]


def _check_metric(d: np.ndarray, tol: float = METRIC_TOL) -> np.ndarray:
    if not np.all(np.isfinite(d)) or np.any(d < 0):
        raise InvalidMetricError("distances must be finite and nonnegative")
    if np.any(np.diag(d) != 0):
        raise InvalidMetricError("distance matrix diagonal must be zero")
    if not np.allclose(d, d.T, rtol=0, atol=tol * np.max(d)):
        raise InvalidMetricError("distance matrix is not symmetric")
    d = 0.5 * (d + d.T)
    # d(i,j) <= d(i,k) + d(k,j), one intermediate point at a time
    for k in range(d.shape[0]):
        via = d[:, k, None] + d[None, k, :]
        bad = np.argwhere(d > via + tol * (d + via))
        if bad.size:
            i, j = bad[0]
            raise InvalidMetricError(f"triangle inequality violated on triple {(int(i), int(j), k)}")
    return d


@dataclass(frozen=True, eq=False)
class WeightedPointCloud:
    points: np.ndarray  # (m, n)
    weights: np.ndarray  # (m,)
    spec: Optional[NormSpec] = None  # Euclidean when neither spec nor distances are given
    distances: Optional[np.ndarray] = None  # raw metric, overrides spec
    _d: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=np.float64))
        w = np.asarray(self.weights, dtype=np.float64)
        if w.shape != (pts.shape[0],):
            raise ValueError(f"{w.shape[0] if w.ndim else 0} weights for {pts.shape[0]} points")
        if np.any(~np.isfinite(w)) or np.any(w <= 0):
            raise ValueError("weights must be positive and finite")

        if self.distances is not None:
            d = np.asarray(self.distances, dtype=np.float64)
            if d.shape != (pts.shape[0], pts.shape[0]):
                raise ValueError(f"distance matrix of shape {d.shape} for {pts.shape[0]} points")
            d = _check_metric(d)
        else:
            spec = self.spec or NormSpec.euclidean(pts.shape[1])
            if spec.dim != pts.shape[1]:
                raise DimensionMismatchError(spec.dim, pts.shape[1], "point cloud")
            object.__setattr__(self, "spec", spec)
            d = pairwise_distances(spec, pts)

        m = pts.shape[0]
        if m > 1:
            off = d[np.triu_indices(m, 1)]
            if np.min(off) <= DISTINCT_TOL * np.max(off):
                raise CoincidentPointsError("point cloud contains (numerically) coincident points")

        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "_d", d)

    @staticmethod
    def uniform(points, spec: Optional[NormSpec] = None) -> "WeightedPointCloud":
        """Counting measure."""
        pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
        return WeightedPointCloud(pts, np.ones(pts.shape[0]), spec)

    @staticmethod
    def from_distances(distances, weights=None) -> "WeightedPointCloud":
        d = np.asarray(distances, dtype=np.float64)
        m = d.shape[0]
        return WeightedPointCloud(np.arange(m, dtype=np.float64)[:, None],
                                  np.ones(m) if weights is None else weights, distances=d)

    def __len__(self) -> int:
        return self.points.shape[0]

    def distance_matrix(self) -> np.ndarray:
        return self._d

    def scaled(self, factor: float, weight_factor: float = 1.0) -> "WeightedPointCloud":
        d = None if self.distances is None else self.distances * factor
        return WeightedPointCloud(self.points * factor, self.weights * weight_factor, self.spec, d)

    def permuted(self, order) -> "WeightedPointCloud":
        order = np.asarray(order)
        d = None if self.distances is None else self.distances[np.ix_(order, order)]
        return WeightedPointCloud(self.points[order], self.weights[order], self.spec, d)

    def with_point(self, point, weight: float = 1.0) -> "WeightedPointCloud":
        if self.distances is not None:
            raise ValueError("cannot add a point to a cloud given by a raw distance matrix")
        return WeightedPointCloud(
            np.vstack([self.points, np.asarray(point, dtype=np.float64)]),
            np.append(self.weights, weight),
            self.spec,
        )


# ---------- parametrizations ----------
def circle(radius: float = 1.0, center=(0.0, 0.0)) -> Parametrization:
    c = np.asarray(center, dtype=np.float64)
    return lambda t: c + radius * np.array([np.cos(2 * np.pi * t), np.sin(2 * np.pi * t)])


def segment(a, b) -> Parametrization:
    pa, pb = np.asarray(a, dtype=np.float64), np.asarray(b, dtype=np.float64)
    return lambda t: pa + t * (pb - pa)


def sphere_curve(spec: NormSpec, radius: float = 1.0, center=None) -> Parametrization:
    """Boundary of a planar ball of the given norm, traversed by Euclidean angle."""
    c = np.zeros(2) if center is None else np.asarray(center, dtype=np.float64)
    return lambda t: sphere_point(spec, c, radius, (np.cos(2 * np.pi * t), np.sin(2 * np.pi * t)))


def sample_curve(spec: NormSpec, parametrization: Parametrization, n: int, closed: bool = True) -> WeightedPointCloud:
    """
    n samples at uniform parameter values, weighted by polygonal arclength.

    Each sample carries half of each adjacent polygon edge, so the weights
    sum to the polygon length under spec.
    """
    if n < 3:
        raise ValueError(f"need at least 3 samples, got {n}")
    ts = np.arange(n) / n if closed else np.linspace(0.0, 1.0, n)
    pts = np.array([parametrization(float(t)) for t in ts], dtype=np.float64)

    edges = np.diff(np.vstack([pts, pts[:1]]) if closed else pts, axis=0)
    lengths = norms(spec, edges)
    if np.any(lengths == 0):
        raise CoincidentPointsError("consecutive curve samples coincide")

    if closed:
        weights = 0.5 * (lengths + np.roll(lengths, 1))
    else:
        weights = 0.5 * (np.append(lengths, 0.0) + np.insert(lengths, 0, 0.0))
    return WeightedPointCloud(pts, weights, spec)


# ---------- text format ----------
def load_point_cloud(
    path: Union[str, Path],
    dim: Optional[int] = None,
    spec: Optional[NormSpec] = None,
) -> WeightedPointCloud:
    """
    One point per line: coordinates, then an optional weight; '#' starts a comment.

    Without dim (or spec) every column is a coordinate and weights are 1.
    """
    path = Path(path)
    if dim is None and spec is not None:
        dim = spec.dim

    rows, width = [], None
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [float(tok) for tok in line.split()]
        except ValueError as e:
            raise PointCloudFormatError(f"not a number ({e})", lineno, str(path)) from None
        if width is None:
            width = len(values)
        elif len(values) != width:
            raise PointCloudFormatError(f"expected {width} columns, got {len(values)}", lineno, str(path))
        rows.append(values)

    if not rows:
        raise PointCloudFormatError("no points", source=str(path))
    table = np.array(rows)
    if dim is None or width == dim:
        points, weights = table, np.ones(len(table))
    elif width == dim + 1:
        points, weights = table[:, :dim], table[:, dim]
    else:
        raise PointCloudFormatError(f"{width} columns do not fit dimension {dim}", source=str(path))

    if np.any(weights <= 0):
        raise PointCloudFormatError("weights must be positive", source=str(path))
    return WeightedPointCloud(points, weights, spec)
