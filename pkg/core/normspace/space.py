"""
NormSpec and the point-level operations on (R^n, ||.||).

NormSpec is an immutable value; its gauge (facets, Cholesky factor, ...) is
built once in __post_init__ and reused by every evaluation.
"""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from core.errors import DimensionMismatchError, InvalidNormError, ZeroDirectionError
from core.normspace.factory import create_gauge
from core.normspace.gauges.base import Gauge
from core.normspace.types import P_INF, NormKind, PExponent, Point, is_inf

AXIOM_TOL = 1e-12


def _freeze(array) -> Optional[tuple]:
    if array is None:
        return None
    a = np.asarray(array, dtype=np.float64)
    return tuple(map(tuple, a)) if a.ndim == 2 else tuple(a.tolist())


@dataclass(frozen=True)
class NormSpec:
    kind: NormKind
    dim: int
    p: Optional[PExponent] = None
    weights: Optional[tuple[float, ...]] = None
    matrix: Optional[tuple[tuple[float, ...], ...]] = None
    vertices: Optional[tuple[tuple[float, ...], ...]] = None
    gauge: Gauge = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidNormError(f"dim must be >= 1, got {self.dim}")
        object.__setattr__(self, "kind", NormKind(self.kind))
        gauge = create_gauge(
            self.kind,
            dim=self.dim,
            p=self.p,
            weights=self.weights,
            matrix=self.matrix,
            vertices=self.vertices,
        )
        if gauge.dim != self.dim:
            raise InvalidNormError(f"{self.kind.value} parameters describe dim {gauge.dim}, spec says {self.dim}")
        object.__setattr__(self, "gauge", gauge)

    # ---------- constructors ----------
    @staticmethod
    def pnorm(p: PExponent, dim: int) -> "NormSpec":
        return NormSpec(NormKind.PNORM, dim, p=p if is_inf(p) else float(p))

    @staticmethod
    def euclidean(dim: int) -> "NormSpec":
        return NormSpec.pnorm(2.0, dim)

    @staticmethod
    def linf(dim: int) -> "NormSpec":
        return NormSpec.pnorm(P_INF, dim)

    @staticmethod
    def weighted_pnorm(p: PExponent, weights) -> "NormSpec":
        w = _freeze(weights)
        return NormSpec(NormKind.WEIGHTED_PNORM, len(w), p=p if is_inf(p) else float(p), weights=w)

    @staticmethod
    def quadratic(matrix) -> "NormSpec":
        m = _freeze(matrix)
        return NormSpec(NormKind.QUADRATIC, len(m), matrix=m)

    @staticmethod
    def polyhedral(vertices) -> "NormSpec":
        v = _freeze(vertices)
        return NormSpec(NormKind.POLYHEDRAL, len(v[0]), vertices=v)

    @property
    def label(self) -> str:
        if self.kind in (NormKind.PNORM, NormKind.WEIGHTED_PNORM):
            return f"{self.kind.value}(p={self.p}, dim={self.dim})"
        return f"{self.kind.value}(dim={self.dim})"


def as_point(x, dim: int, what: str = "point") -> Point:
    a = np.asarray(x, dtype=np.float64)
    if a.shape != (dim,):
        raise DimensionMismatchError(dim, a.shape[-1] if a.ndim else 0, what)
    return a


def norms(spec: NormSpec, x: np.ndarray) -> np.ndarray:
    """Vectorized norm along the last axis of x."""
    a = np.asarray(x, dtype=np.float64)
    if a.shape[-1] != spec.dim:
        raise DimensionMismatchError(spec.dim, a.shape[-1], "vector batch")
    return spec.gauge(a)


def norm(spec: NormSpec, x) -> float:
    return float(spec.gauge(as_point(x, spec.dim)))


def dist(spec: NormSpec, x, y) -> float:
    return norm(spec, as_point(x, spec.dim) - as_point(y, spec.dim))


def sphere_point(spec: NormSpec, x0, r: float, direction) -> Point:
    """x0 + r * direction / ||direction||, a point of the sphere of radius r about x0."""
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r}")
    d = as_point(direction, spec.dim, "direction")
    length = norm(spec, d)
    if length == 0:
        raise ZeroDirectionError("direction vector is zero")
    return as_point(x0, spec.dim, "center") + (r / length) * d


def antipode(x0, v) -> Point:
    """Reflection of v through x0; stays on every sphere about x0 that contains v."""
    c = np.asarray(x0, dtype=np.float64)
    p = np.asarray(v, dtype=np.float64)
    if c.shape != p.shape:
        raise DimensionMismatchError(c.shape[-1], p.shape[-1])
    return 2.0 * c - p


def check_norm_axioms(spec: NormSpec, samples: int = 1000, seed: int = 0, tol: float = AXIOM_TOL) -> None:
    """
    Sampled check of positivity, absolute homogeneity and the triangle inequality.

    Raises InvalidNormError on the first violated axiom.
    """
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((samples, spec.dim))
    y = rng.standard_normal((samples, spec.dim))
    c = rng.standard_normal(samples) * np.exp(rng.uniform(-3, 3, samples))

    nx, ny = spec.gauge(x), spec.gauge(y)
    if spec.gauge(np.zeros(spec.dim)) != 0:
        raise InvalidNormError("norm of the origin is not zero")
    if np.any(nx <= 0):
        raise InvalidNormError("norm is not positive on a nonzero vector")

    ncx = spec.gauge(c[:, None] * x)
    if np.any(np.abs(ncx - np.abs(c) * nx) > tol * ncx):
        raise InvalidNormError("absolute homogeneity violated")

    nxy = spec.gauge(x + y)
    if np.any(nxy > (nx + ny) * (1 + tol)):
        raise InvalidNormError("triangle inequality violated")


def pairwise_distances(spec: NormSpec, points) -> np.ndarray:
    """Symmetric (m, m) matrix of ||p_i - p_j||."""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != spec.dim:
        raise DimensionMismatchError(spec.dim, pts.shape[-1] if pts.ndim else 0, "point set")
    d = spec.gauge(pts[:, None, :] - pts[None, :, :])
    # exact symmetry, whatever the gauge does with -x
    return np.triu(d, 1) + np.triu(d, 1).T
