"""
Constructive isometric embeddings into Euclidean space.

Provides:
- embed_triangle: three points into the plane
- center_circumcircle: move the circumcenter of a planar triple to the origin
- embed_sphere_triple_with_center: three sphere points plus the center into R^3
- four_point_embeddable: trilateration test for 4-point metric spaces
- Cayley-Menger determinant sign test, calibrated on Euclidean data
- sphere_line_intersect: sphere / line intersection in Euclidean space
"""
from core.euclid_embed.embedding import (
    center_circumcircle,
    embed_sphere_triple_with_center,
    embed_triangle,
)
from core.euclid_embed.four_point import (
    calibrate_cayley_menger_sign,
    cayley_menger_determinant,
    cayley_menger_embeddable,
    four_point_embeddable,
)
from core.euclid_embed.sphere_line import sphere_line_intersect
from core.euclid_embed.types import (
    DistanceMatrix4,
    Embedding,
    FourPointVerdict,
    Obstruction,
    ObstructionKind,
)

__all__ = [
    "DistanceMatrix4",
    "Embedding",
    "FourPointVerdict",
    "Obstruction",
    "ObstructionKind",
    "calibrate_cayley_menger_sign",
    "cayley_menger_determinant",
    "cayley_menger_embeddable",
    "center_circumcircle",
    "embed_sphere_triple_with_center",
    "embed_triangle",
    "four_point_embeddable",
    "sphere_line_intersect",
]
