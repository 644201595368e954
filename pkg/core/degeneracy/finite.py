from itertools import combinations

import numpy as np

from core.errors import CoincidentPointsError
from core.menger.circumradius import circumradius_array
from core.menger.types import INFINITE, ExtendedRadius
from core.normspace.space import NormSpec, pairwise_distances


def s_of_finite_set(spec: NormSpec, points) -> ExtendedRadius:
    """Exact maximum circumradius over all triples of a finite set; INFINITE if any triple is collinear."""
    d = pairwise_distances(spec, points)
    m = d.shape[0]
    if m < 3:
        raise ValueError(f"need at least 3 points, got {m}")
    if np.any(d[np.triu_indices(m, 1)] == 0):
        raise CoincidentPointsError("point set contains duplicates")

    i, j, k = np.array(list(combinations(range(m), 3))).T
    radii = circumradius_array(d[i, j], d[j, k], d[k, i])
    if np.any(np.isinf(radii)):
        return INFINITE
    return ExtendedRadius(float(np.max(radii)))
