"""
Thickness and integral Menger curvature of a weighted point cloud.

    thickness = min over distinct triples of r(x_i, x_j, x_k)
    M_p       = sum over ordered distinct triples of w_i w_j w_k / r(x_i, x_j, x_k)^p

Degenerate triples have r = inf: they contribute 0 to M_p and never lower the
thickness. Triples are enumerated unordered (i < j < k) in chunks of fixed
first index; M_p counts each of them 6 times.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from core.energies.cloud import WeightedPointCloud
from core.log import get_logger
from core.menger.circumradius import circumradius_array
from core.menger.types import INFINITE, ExtendedRadius

logger = get_logger(__name__)


@dataclass(frozen=True)
class EnergyOptions:
    exact_limit: int = 1024  # larger clouds use Monte Carlo for M_p
    samples: int = 200_000
    seed: int = 0
    workers: int = 1


@dataclass(frozen=True)
class EnergyEstimate:
    value: float
    standard_error: float  # 0 for exact enumeration
    triples: int  # ordered triples summed or sampled
    exact: bool


def _chunk_radii(d: np.ndarray, i: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Circumradii of all triples (i, j, k) with i < j < k, plus j and k."""
    m = d.shape[0]
    j, k = np.triu_indices(m - i - 1, 1)
    j, k = j + i + 1, k + i + 1
    return circumradius_array(d[i, j], d[j, k], d[k, i]), j, k


def _map_chunks(fn, m: int, workers: int) -> list:
    starts = range(max(m - 2, 0))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, starts))
    return [fn(i) for i in starts]


def thickness(cloud: WeightedPointCloud, options: EnergyOptions = EnergyOptions()) -> ExtendedRadius:
    """Exact infimum; INFINITE for fewer than 3 points or when every triple is collinear."""
    if len(cloud) < 3:
        return INFINITE
    d = cloud.distance_matrix()

    def chunk_min(i: int) -> float:
        radii, _, _ = _chunk_radii(d, i)
        return float(np.min(radii)) if radii.size else math.inf

    best = min(_map_chunks(chunk_min, len(cloud), options.workers))
    return INFINITE if math.isinf(best) else ExtendedRadius(best)


def _exact_energy(cloud: WeightedPointCloud, p: float, options: EnergyOptions) -> EnergyEstimate:
    d, w = cloud.distance_matrix(), cloud.weights

    def chunk_sum(i: int) -> float:
        radii, j, k = _chunk_radii(d, i)
        return float(np.sum(w[i] * w[j] * w[k] * radii ** (-p)))

    m = len(cloud)
    total = 6.0 * math.fsum(_map_chunks(chunk_sum, m, options.workers))
    return EnergyEstimate(total, 0.0, m * (m - 1) * (m - 2), True)


def _sampled_energy(cloud: WeightedPointCloud, p: float, options: EnergyOptions) -> EnergyEstimate:
    d, w = cloud.distance_matrix(), cloud.weights
    m, n = len(cloud), options.samples
    rng = np.random.default_rng(options.seed)

    # uniform ordered triples of distinct indices
    i = rng.integers(m, size=n)
    j = rng.integers(m - 1, size=n)
    j += j >= i
    lo, hi = np.minimum(i, j), np.maximum(i, j)
    k = rng.integers(m - 2, size=n)
    k += k >= lo
    k += k >= hi

    terms = w[i] * w[j] * w[k] * circumradius_array(d[i, j], d[j, k], d[k, i]) ** (-p)
    count = m * (m - 1) * (m - 2)
    return EnergyEstimate(
        value=count * float(np.mean(terms)),
        standard_error=count * float(np.std(terms, ddof=1)) / math.sqrt(n),
        triples=n,
        exact=False,
    )


def estimate_menger_energy(cloud: WeightedPointCloud, p: float, options: EnergyOptions = EnergyOptions()) -> EnergyEstimate:
    if not p > 0:
        raise ValueError(f"p must be positive, got {p}")
    if len(cloud) < 3:
        return EnergyEstimate(0.0, 0.0, 0, True)
    if len(cloud) <= options.exact_limit:
        estimate = _exact_energy(cloud, p, options)
    else:
        estimate = _sampled_energy(cloud, p, options)
    logger.debug("M_%g over %d points: %r", p, len(cloud), estimate)
    return estimate


def menger_energy(cloud: WeightedPointCloud, p: float, options: EnergyOptions = EnergyOptions()) -> float:
    return estimate_menger_energy(cloud, p, options).value
