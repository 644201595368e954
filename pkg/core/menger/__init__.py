"""
Metric circumradius of point triples.

Provides:
- TriangleSides / ExtendedRadius value types
- the Cayley-Menger determinant of a triple (stable sorted-side product)
- circumradius from sides or from points of a normed space
- vectorized circumradii for grids of triples
"""
from core.menger.circumradius import (
    DEGENERACY_TOL,
    METRIC_TOL,
    cayley_menger,
    circumradius,
    circumradius_array,
    circumradius_points,
    triangle_sides,
)
from core.menger.types import INFINITE, ExtendedRadius, TriangleSides

__all__ = [
    "DEGENERACY_TOL",
    "ExtendedRadius",
    "INFINITE",
    "METRIC_TOL",
    "TriangleSides",
    "cayley_menger",
    "circumradius",
    "circumradius_array",
    "circumradius_points",
    "triangle_sides",
]
