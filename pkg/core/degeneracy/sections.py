"""
2-D sections of R^n and sphere points parametrized by a section angle.

A section is an (n, 2) matrix with Euclidean-orthonormal columns; the norm
restricted to it is again a norm, so distances measured inside a section are
the ambient distances.
"""
import numpy as np

from core.normspace.space import NormSpec, norms


def section_bases(dim: int, count: int, seed: int) -> list[np.ndarray]:
    """
    Coordinate plane (e1, e2) first, then count - 1 random planes.

    The k-th section only depends on seed and k, so a larger count extends
    the list without changing its prefix.
    """
    first = np.zeros((dim, 2))
    first[0, 0] = first[1, 1] = 1.0
    if dim == 2:
        return [first]

    rng = np.random.default_rng(seed)
    bases = [first]
    for _ in range(count - 1):
        q, _ = np.linalg.qr(rng.standard_normal((dim, 2)))
        bases.append(q)
    return bases


def sphere_vectors(spec: NormSpec, basis: np.ndarray, r: float, angles) -> np.ndarray:
    """Vectors of norm r pointing along basis @ (cos t, sin t), shape (..., n)."""
    t = np.asarray(angles, dtype=np.float64)
    e = np.stack([np.cos(t), np.sin(t)], axis=-1) @ basis.T
    return (r / norms(spec, e))[..., None] * e
