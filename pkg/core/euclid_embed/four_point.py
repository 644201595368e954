"""
Euclidean embeddability of four-point metric spaces.

The constructive test embeds the best-conditioned triple in the plane and
trilaterates the fourth point; the space embeds in R^3 iff the fourth point's
squared height above the base plane is nonnegative. The order-4 Cayley-Menger
determinant gives an independent oracle whose sign convention is calibrated
on random Euclidean data instead of being trusted from a formula.
"""
import math
from itertools import combinations
from typing import Optional

import numpy as np

from core.euclid_embed.embedding import embed_triangle
from core.euclid_embed.types import (
    DistanceMatrix4,
    Embedding,
    FourPointVerdict,
    Obstruction,
    ObstructionKind,
)
from core.log import get_logger
from core.menger.types import TriangleSides

logger = get_logger(__name__)

HEIGHT_TOL = 1e-9
REPRODUCTION_TOL = 1e-9
FLAT_BASE_TOL = 1e-12
CM_BAND = 1e-9


def _minus_d(d: np.ndarray, i: int, j: int, k: int) -> float:
    a, b, c = sorted((d[i, j], d[j, k], d[k, i]), reverse=True)
    return (a + (b + c)) * max(c - (a - b), 0.0) * (c + (a - b)) * (a + (b - c))


def _reproduces(coords: np.ndarray, d: np.ndarray) -> float:
    got = np.linalg.norm(coords[:, None, :] - coords[None, :, :], axis=-1)
    return float(np.max(np.abs(got - d)) / np.max(d))


def _collinear(dm: DistanceMatrix4) -> FourPointVerdict:
    d = dm.d
    i, j = np.unravel_index(np.argmax(d), d.shape)
    t = (d[i] ** 2 - d[j] ** 2 + d[i, j] ** 2) / (2.0 * d[i, j])
    coords = np.zeros((4, 3))
    coords[:, 0] = t
    mismatch = _reproduces(coords, d)
    if mismatch > REPRODUCTION_TOL:
        apex = next(k for k in range(4) if k not in (i, j))
        base = tuple(sorted({int(i), int(j), next(k for k in range(4) if k not in (i, j, apex))}))
        return FourPointVerdict(
            embeddable=False,
            obstruction=Obstruction(ObstructionKind.COLLINEAR_INCONSISTENT, mismatch, base, apex),
        )
    return FourPointVerdict(embeddable=True, embedding=Embedding(coords, dm.labels))


def four_point_embeddable(dm: DistanceMatrix4, height_tol: float = HEIGHT_TOL) -> FourPointVerdict:
    d, scale = dm.d, dm.scale
    bases = [(tri, next(k for k in range(4) if k not in tri)) for tri in combinations(range(4), 3)]
    (i, j, k), apex = max(bases, key=lambda b: _minus_d(d, *b[0]))

    if math.sqrt(_minus_d(d, i, j, k)) <= FLAT_BASE_TOL * scale * scale:
        return _collinear(dm)

    plane = embed_triangle(TriangleSides(d[i, j], d[j, k], d[k, i])).points
    kx, ky = plane[2]
    a = d[i, j]
    ri, rj, rk = d[i, apex] ** 2, d[j, apex] ** 2, d[k, apex] ** 2

    # sphere equations about the base points, differences are linear in (x, y)
    x = (ri - rj + a * a) / (2.0 * a)
    y = (ri - rk + kx * kx + ky * ky - 2.0 * kx * x) / (2.0 * ky)
    h2 = ri - x * x - y * y

    if h2 < -height_tol * scale * scale:
        logger.debug("four points not embeddable: squared height %.3e", h2)
        return FourPointVerdict(
            embeddable=False,
            obstruction=Obstruction(ObstructionKind.NEGATIVE_SQUARED_HEIGHT, h2, (i, j, k), apex),
            squared_height=h2,
        )

    coords = np.zeros((4, 3))
    coords[[i, j, k], :2] = plane
    # +height representative of the two mirror images
    coords[apex] = (x, y, math.sqrt(max(h2, 0.0)))
    return FourPointVerdict(embeddable=True, embedding=Embedding(coords, dm.labels), squared_height=h2)


def cayley_menger_determinant(distances) -> float:
    """Determinant of the distance matrix of squared distances bordered by ones."""
    d = np.asarray(distances, dtype=np.float64)
    n = d.shape[0]
    cm = np.ones((n + 1, n + 1))
    cm[0, 0] = 0.0
    cm[1:, 1:] = d * d
    return float(np.linalg.det(cm))


def calibrate_cayley_menger_sign(samples: int = 100, seed: int = 0) -> int:
    """
    Sign s such that s * det >= 0 for Euclidean four-point data.

    Raises RuntimeError if random Euclidean tetrahedra disagree on the sign.
    """
    rng = np.random.default_rng(seed)
    signs = set()
    for _ in range(samples):
        pts = rng.uniform(-1.0, 1.0, size=(4, 3))
        det = cayley_menger_determinant(np.linalg.norm(pts[:, None] - pts[None], axis=-1))
        signs.add(int(np.sign(det)))
    signs.discard(0)
    if len(signs) != 1:
        raise RuntimeError(f"Cayley-Menger sign is not stable on Euclidean data: {signs}")
    sign = signs.pop()
    logger.debug("calibrated Cayley-Menger sign: %+d", sign)
    return sign


def cayley_menger_embeddable(dm: DistanceMatrix4, sign: int, band: float = CM_BAND) -> Optional[bool]:
    """
    Sign test of the order-4 determinant, normalized by scale^6.

    Returns None inside the boundary band where the sign is not meaningful.
    """
    value = sign * cayley_menger_determinant(dm.d) / dm.scale ** 6
    if abs(value) <= band:
        return None
    return value > 0
