import numpy as np

from core.errors import InvalidNormError
from core.normspace.gauges.base import Gauge
from core.normspace.types import PExponent, is_inf


def _check_exponent(p: PExponent) -> None:
    if p is None:
        raise InvalidNormError("p-norm needs an exponent p")
    if is_inf(p):
        return
    if isinstance(p, str) or not np.isfinite(p) or p < 1:
        raise InvalidNormError(f"p must be a real >= 1 or 'inf', got {p!r}")


class PNormGauge(Gauge):
    """(sum |x_i|^p)^(1/p); max |x_i| for p = inf."""

    def __init__(self, dim: int, p: PExponent):
        _check_exponent(p)
        self.dim = dim
        self.p = p

    def __call__(self, x: np.ndarray) -> np.ndarray:
        ax = np.abs(x)
        if is_inf(self.p):
            return np.max(ax, axis=-1)
        if self.p == 1:
            return np.sum(ax, axis=-1)
        if self.p == 2:
            return np.linalg.norm(x, axis=-1)

        # factor out the largest coordinate so |x_i|^p cannot overflow
        m = np.max(ax, axis=-1)
        safe = np.where(m > 0, m, 1.0)
        s = np.sum((ax / safe[..., None]) ** self.p, axis=-1)
        return np.where(m > 0, m * s ** (1.0 / self.p), 0.0)


class WeightedPNormGauge(Gauge):
    """(sum w_i |x_i|^p)^(1/p); max w_i |x_i| for p = inf."""

    def __init__(self, dim: int, p: PExponent, weights):
        _check_exponent(p)
        w = np.asarray(weights, dtype=np.float64)
        if w.shape != (dim,):
            raise InvalidNormError(f"expected {dim} weights, got {w.shape}")
        if not np.all(np.isfinite(w)) or np.any(w <= 0):
            raise InvalidNormError("weights must be positive and finite")

        self.dim = dim
        self.p = p
        self.weights = w
        # weighted p-norm == plain p-norm of the rescaled coordinates
        self._scale = w if is_inf(p) else w ** (1.0 / p)
        self._inner = PNormGauge(dim, p)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self._inner(np.asarray(x) * self._scale)
