"""
Metric circumradius toolkit for finite-dimensional normed spaces.

This package contains the core functionality for:
- Norm evaluation and sphere parametrization
- Circumradius / Cayley-Menger computations
- Euclidean embeddings of three and four point metric spaces
- Sphere degeneracy search and the inner product space classifier
- Thickness and integral Menger curvature of point clouds
"""

__version__ = "1.0.0"
