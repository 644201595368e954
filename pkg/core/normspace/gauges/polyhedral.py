import numpy as np
from scipy.spatial import ConvexHull, QhullError

from core.errors import InvalidNormError
from core.normspace.gauges.base import Gauge

SYMMETRY_TOL = 1e-9
INTERIOR_TOL = 1e-12


class PolyhedralGauge(Gauge):
    """
    Minkowski functional of a centrally symmetric polytope given by its vertices.

    Facets are enumerated once; evaluation is max_f <a_f, x> / h_f where
    {y : <a_f, y> <= h_f} are the facet half-spaces.
    """

    def __init__(self, vertices):
        v = np.asarray(vertices, dtype=np.float64)
        if v.ndim != 2 or v.shape[0] < 2:
            raise InvalidNormError(f"vertices must be an (m, n) array with m >= 2, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise InvalidNormError("vertices have non-finite entries")

        scale = np.max(np.abs(v))
        if scale == 0:
            raise InvalidNormError("all vertices are zero")
        # every v needs its mirror image -v in the set
        gaps = np.min(np.linalg.norm(v[:, None, :] + v[None, :, :], axis=-1), axis=1)
        if np.any(gaps > SYMMETRY_TOL * scale):
            raise InvalidNormError("vertex set is not symmetric (v in set does not imply -v in set)")

        self.dim = v.shape[1]
        self.vertices = v
        self._facets = self._facet_matrix(v, scale)

    @staticmethod
    def _facet_matrix(v: np.ndarray, scale: float) -> np.ndarray:
        if v.shape[1] == 1:
            return np.array([[1.0], [-1.0]]) / np.max(np.abs(v))

        try:
            hull = ConvexHull(v)
        except QhullError as e:
            raise InvalidNormError("vertices do not span a full-dimensional polytope") from e

        normals = hull.equations[:, :-1]
        offsets = -hull.equations[:, -1]  # normal . y <= offset inside
        if np.any(offsets <= INTERIOR_TOL * scale):
            raise InvalidNormError("origin is not strictly inside the polytope")
        return np.unique(normals / offsets[:, None], axis=0)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return np.max(np.asarray(x) @ self._facets.T, axis=-1)
