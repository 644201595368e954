"""
Three points into the plane, and three sphere points plus their center into R^3.

Any three points of a metric space embed isometrically in the plane; a sphere
triple together with its center embeds in R^3 iff the triple's circumradius
does not exceed the sphere radius. The construction places the triple around
its circumcenter in z = 0 and lifts the center onto the z-axis.
"""
import math

import numpy as np

from core.errors import CoincidentPointsError, DegenerateTriangleError, NotEmbeddableError
from core.euclid_embed.types import Embedding
from core.menger.circumradius import METRIC_TOL, cayley_menger, circumradius
from core.menger.types import TriangleSides

RADIUS_SLACK = 1e-12
COLLINEAR_TOL = 1e-14


def embed_triangle(sides: TriangleSides, labels: tuple[str, str, str] = ("u", "v", "w")) -> Embedding:
    """u' = (0,0), v' = (a,0), w' = (x,y) with y >= 0."""
    minus_d = -cayley_menger(sides, METRIC_TOL)
    a, b, c = sides.a, sides.b, sides.c
    if a == 0:
        raise CoincidentPointsError("u and v coincide, cannot fix the base of the triangle")

    x = (a * a + c * c - b * b) / (2.0 * a)
    # y = 2 * area / a with 16 area^2 = -D, no cancellation for needle triangles
    y = math.sqrt(minus_d) / (2.0 * a)
    return Embedding(np.array([[0.0, 0.0], [a, 0.0], [x, y]]), labels)


def circumcenter(points: np.ndarray) -> np.ndarray:
    """Intersection of the perpendicular bisectors of a planar triple."""
    p0, p1, p2 = np.asarray(points, dtype=np.float64)
    q1, q2 = p1 - p0, p2 - p0
    cross = q1[0] * q2[1] - q1[1] * q2[0]
    if abs(cross) <= COLLINEAR_TOL * np.linalg.norm(q1) * np.linalg.norm(q2):
        raise DegenerateTriangleError("collinear triple has no circumcenter")
    lhs = 2.0 * np.array([q1, q2])
    rhs = np.array([q1 @ q1, q2 @ q2])
    return p0 + np.linalg.solve(lhs, rhs)


def center_circumcircle(emb: Embedding) -> Embedding:
    if emb.points.shape != (3, 2):
        raise ValueError(f"expected a planar triple, got points of shape {emb.points.shape}")
    return emb.translated(-circumcenter(emb.points))


def embed_sphere_triple_with_center(
    sides: TriangleSides,
    r: float,
    labels: tuple[str, str, str, str] = ("u", "v", "w", "x0"),
) -> Embedding:
    """
    Embed u, v, w (pairwise distances `sides`, all at distance r from x0) and x0 in R^3.

    Raises NotEmbeddableError when r(u,v,w) > r or the triple is collinear.
    """
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r}")
    rho = circumradius(sides)
    if rho.is_infinite or rho.value > r * (1 + RADIUS_SLACK):
        raise NotEmbeddableError(rho.value, r)

    ring = center_circumcircle(embed_triangle(sides, labels[:3])).lifted(3)
    ring_radius_sq = float(np.mean(np.sum(ring.points ** 2, axis=1)))
    apex = np.array([[0.0, 0.0, math.sqrt(max(r * r - ring_radius_sq, 0.0))]])
    return Embedding(np.vstack([ring.points, apex]), tuple(labels))
