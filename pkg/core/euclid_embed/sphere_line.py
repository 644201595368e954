import math

import numpy as np

from core.errors import ZeroDirectionError

TANGENT_TOL = 1e-12


def sphere_line_intersect(x0, r: float, a, v) -> list[np.ndarray]:
    """
    Points a + t v at Euclidean distance r from x0; at most two.

    t solves t^2 + 2<a-x0, v> t + ||a-x0||^2 - r^2 = 0 for unit v (v is normalized here).
    """
    c = np.asarray(x0, dtype=np.float64)
    base = np.asarray(a, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    length = np.linalg.norm(v)
    if length == 0:
        raise ZeroDirectionError("line direction is zero")
    v = v / length

    offset = base - c
    beta = float(offset @ v)
    gamma = float(offset @ offset) - r * r
    disc = beta * beta - gamma

    if abs(disc) <= TANGENT_TOL * max(r * r, beta * beta):
        return [base - beta * v]
    if disc < 0:
        return []

    # stable pair of roots, t1 * t2 = gamma
    t1 = -beta - math.copysign(math.sqrt(disc), beta)
    t2 = gamma / t1
    return [base + t * v for t in sorted((t1, t2))]
