"""
Triples of prescribed circumradius on spheres of (R^2, max-norm).

On the unit sphere:
- d < 2/sqrt(3): u=(-1,1-s), v=(-1+s,1), w=(-1,1) is equilateral with side
  s = d sqrt(3).
- d >= 2/sqrt(3): u=(-1,1-s), v=(1,1-s), w=(0,1) is isosceles with sides
  (s, s, 2), radius s^2 / (2 sqrt(s^2-1)), s in (1, 2].
- d = inf: (0,1), (1,0), (-1,0) is collinear.
Other spheres follow by translation and scaling.
"""
import math
from typing import Optional, Union

import numpy as np

from core.menger.types import ExtendedRadius

EQUILATERAL_LIMIT = 2.0 / math.sqrt(3.0)

Triple = tuple[np.ndarray, np.ndarray, np.ndarray]


def equilateral_triple(s: float) -> Triple:
    """Side s in (0, 2), circumradius s / sqrt(3)."""
    if not 0 < s < 2:
        raise ValueError(f"equilateral family needs s in (0, 2), got {s}")
    return np.array([-1.0, 1.0 - s]), np.array([-1.0 + s, 1.0]), np.array([-1.0, 1.0])


def isosceles_triple(s: float) -> Triple:
    """Sides (s, s, 2) for s in (1, 2], circumradius s^2 / (2 sqrt(s^2 - 1))."""
    if not 1 < s <= 2:
        raise ValueError(f"isosceles family needs s in (1, 2], got {s}")
    return np.array([-1.0, 1.0 - s]), np.array([1.0, 1.0 - s]), np.array([0.0, 1.0])


def collinear_triple() -> Triple:
    return np.array([0.0, 1.0]), np.array([1.0, 0.0]), np.array([-1.0, 0.0])


def _isosceles_side(d: float) -> float:
    # s^4 - 4 d^2 s^2 + 4 d^2 = 0 in t = s^2, the two roots multiply to 4 d^2;
    # the larger one is only admissible up to d = 2/sqrt(3) where it gives s = 2
    larger = 2.0 * d * d + 2.0 * d * math.sqrt(d * d - 1.0)
    t = larger if larger <= 4.0 * (1 + 1e-12) else 4.0 * d * d / larger
    return min(math.sqrt(t), 2.0)


def achieve_circumradius_linf(
    d: Union[float, str, ExtendedRadius],
    x0: Optional[np.ndarray] = None,
    rho: float = 1.0,
) -> Triple:
    """Three points of the max-norm sphere of radius rho about x0 with circumradius d."""
    target = d if isinstance(d, ExtendedRadius) else ExtendedRadius.of(d)
    if target.value <= 0:
        raise ValueError(f"target circumradius must be positive, got {d!r}")
    if not rho > 0:
        raise ValueError(f"sphere radius must be positive, got {rho}")

    unit_d = target.value / rho
    if target.is_infinite:
        triple = collinear_triple()
    elif unit_d < EQUILATERAL_LIMIT:
        triple = equilateral_triple(unit_d * math.sqrt(3.0))
    else:
        triple = isosceles_triple(_isosceles_side(unit_d))

    if x0 is None and rho == 1.0:
        return triple
    center = np.zeros(2) if x0 is None else np.asarray(x0, dtype=np.float64)
    return tuple(center + rho * p for p in triple)
