"""
Circumradius r(u,v,w) = abc / sqrt(-D) of the Euclidean triangle with the
triple's side lengths, with D the Cayley-Menger determinant

    D = -(a+b+c)(a+b-c)(a-b+c)(-a+b+c).

-D is always evaluated on sides sorted a >= b >= c as

    (a+(b+c)) (c-(a-b)) (c+(a-b)) (a+(b-c))

which keeps full relative precision for needle triangles.
"""
import math

import numpy as np

from core.errors import CoincidentPointsError, InvalidMetricError
from core.menger.types import INFINITE, ExtendedRadius, TriangleSides
from core.normspace.space import NormSpec, as_point, norm

# triangle inequality may fail by METRIC_TOL * perimeter (norm rounding)
METRIC_TOL = 1e-9
# INFINITE once the radius would exceed max(a,b,c) / DEGENERACY_TOL
DEGENERACY_TOL = 1e-14
# triangle-inequality slack below this fraction of the perimeter is rounding noise: collinear
SLACK_TOL = 16 * np.finfo(np.float64).eps


def _validate(sides: TriangleSides, metric_tol: float) -> tuple[float, float, float]:
    a, b, c = sides.sorted_desc()
    if not all(map(math.isfinite, (a, b, c))) or c < 0:
        raise InvalidMetricError(f"sides must be finite and nonnegative, got {sides}")
    if a > b + c + metric_tol * (a + b + c):
        raise InvalidMetricError(f"triangle inequality violated: {a} > {b} + {c}")
    return a, b, c


def _minus_d_sorted(a: float, b: float, c: float) -> float:
    # slack of the triangle inequality, zero inside the tolerance band
    slack = c - (a - b)
    if slack <= SLACK_TOL * (a + b + c):
        slack = 0.0
    return (a + (b + c)) * slack * (c + (a - b)) * (a + (b - c))


def cayley_menger(sides: TriangleSides, metric_tol: float = METRIC_TOL) -> float:
    """D(u,v,w) <= 0, zero exactly for collinear configurations."""
    a, b, c = _validate(sides, metric_tol)
    return -_minus_d_sorted(a, b, c)


def circumradius(
    sides: TriangleSides,
    degeneracy_tol: float = DEGENERACY_TOL,
    metric_tol: float = METRIC_TOL,
) -> ExtendedRadius:
    a, b, c = _validate(sides, metric_tol)
    if c == 0:
        raise CoincidentPointsError(f"triple is not mutually distinct: sides {sides}")

    root = math.sqrt(_minus_d_sorted(a, b, c))
    abc = a * b * c
    if root <= degeneracy_tol * abc / a:
        return INFINITE
    return ExtendedRadius(abc / root)


def circumradius_array(
    a: np.ndarray,
    b: np.ndarray,
    c: np.ndarray,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> np.ndarray:
    """
    Elementwise circumradius for broadcastable side arrays.

    Degenerate triples map to np.inf; triples with a zero side map to np.nan
    so callers can mask them. No metric validation is done here.
    """
    s = np.sort(np.stack(np.broadcast_arrays(a, b, c)).astype(np.float64), axis=0)
    lo, mid, hi = s[0], s[1], s[2]
    slack = lo - (hi - mid)
    slack = np.where(slack <= SLACK_TOL * (hi + mid + lo), 0.0, slack)
    minus_d = (hi + (mid + lo)) * slack * (lo + (hi - mid)) * (hi + (mid - lo))
    root = np.sqrt(minus_d)
    abc = hi * mid * lo

    with np.errstate(divide="ignore", invalid="ignore"):
        r = abc / root
        degenerate = root <= degeneracy_tol * abc / hi
    r = np.where(degenerate, np.inf, r)
    return np.where(lo > 0, r, np.nan)


def triangle_sides(spec: NormSpec, u, v, w) -> TriangleSides:
    pu, pv, pw = (as_point(p, spec.dim) for p in (u, v, w))
    return TriangleSides(norm(spec, pu - pv), norm(spec, pv - pw), norm(spec, pw - pu))


def circumradius_points(spec: NormSpec, u, v, w, **tolerances) -> ExtendedRadius:
    """r(u,v,w) in the metric induced by spec; depends only on the pairwise distances."""
    return circumradius(triangle_sides(spec, u, v, w), **tolerances)
