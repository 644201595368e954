"""
Discrete curvature energies of weighted point clouds.

Provides:
- WeightedPointCloud and its plain-text loader
- sample_curve with circle / segment / sphere-boundary parametrizations
- thickness (infimum of circumradii) and integral Menger curvature
"""
from core.energies.cloud import (
    WeightedPointCloud,
    circle,
    load_point_cloud,
    sample_curve,
    segment,
    sphere_curve,
)
from core.energies.energy import (
    EnergyEstimate,
    EnergyOptions,
    estimate_menger_energy,
    menger_energy,
    thickness,
)

__all__ = [
    "EnergyEstimate",
    "EnergyOptions",
    "WeightedPointCloud",
    "circle",
    "estimate_menger_energy",
    "load_point_cloud",
    "menger_energy",
    "sample_curve",
    "segment",
    "sphere_curve",
    "thickness",
]
