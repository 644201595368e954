import numpy as np

from core.errors import InvalidNormError
from core.normspace.gauges.base import Gauge


class QuadraticGauge(Gauge):
    """sqrt(x^T Q x) for a symmetric positive-definite Q, evaluated as ||L^T x||_2."""

    def __init__(self, matrix):
        q = np.asarray(matrix, dtype=np.float64)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise InvalidNormError(f"quadratic form must be square, got shape {q.shape}")
        if not np.all(np.isfinite(q)):
            raise InvalidNormError("quadratic form has non-finite entries")
        if not np.allclose(q, q.T, rtol=1e-12, atol=1e-12 * np.max(np.abs(q))):
            raise InvalidNormError("quadratic form is not symmetric")
        try:
            self._chol = np.linalg.cholesky(q)
        except np.linalg.LinAlgError as e:
            raise InvalidNormError("quadratic form is not positive definite") from e

        self.dim = q.shape[0]
        self.matrix = q

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return np.linalg.norm(np.asarray(x) @ self._chol, axis=-1)
