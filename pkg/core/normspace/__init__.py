"""
Finite-dimensional normed spaces.

Provides:
- NormSpec: declarative norm description (p-norm, weighted p-norm, quadratic, polyhedral)
- norm / dist evaluation, vectorized over leading axes
- sphere parametrization (sphere_point, antipode)
- sampled norm-axiom checks
"""
from core.normspace.space import (
    NormSpec,
    antipode,
    check_norm_axioms,
    dist,
    norm,
    norms,
    pairwise_distances,
    sphere_point,
)
from core.normspace.types import P_INF, NormKind, PExponent, Point

__all__ = [
    "NormKind",
    "NormSpec",
    "PExponent",
    "P_INF",
    "Point",
    "antipode",
    "check_norm_axioms",
    "dist",
    "norm",
    "norms",
    "pairwise_distances",
    "sphere_point",
]
