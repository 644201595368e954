"""
Parallelogram-law defect

    ||u+v||^2 + ||u-v||^2 - 2||u||^2 - 2||v||^2

which vanishes identically exactly for norms induced by an inner product.
"""
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from core.degeneracy.sections import section_bases, sphere_vectors
from core.degeneracy.types import DefectRecord, DefectSearchResult, SearchBudget
from core.errors import UnsupportedDimensionError
from core.log import get_logger
from core.normspace.space import NormSpec, as_point, norms

logger = get_logger(__name__)

DEFECT_TOL = 1e-9


def parallelogram_defect(spec: NormSpec, u, v) -> float:
    pu, pv = as_point(u, spec.dim), as_point(v, spec.dim)
    return float(_defects(spec, pu, pv))


def _defects(spec: NormSpec, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return norms(spec, u + v) ** 2 + norms(spec, u - v) ** 2 - 2 * norms(spec, u) ** 2 - 2 * norms(spec, v) ** 2


def _search_section(spec: NormSpec, basis: np.ndarray, r: float, budget: SearchBudget):
    # u -> -u, v -> -v leave the defect unchanged, half turns suffice
    theta = np.pi * np.arange(budget.grid) / budget.grid
    pts = sphere_vectors(spec, basis, r, theta)
    grid = np.abs(_defects(spec, pts[:, None, :], pts[None, :, :])) / (r * r)

    flat = np.argsort(-grid, axis=None, kind="stable")
    i, j = np.unravel_index(flat[0], grid.shape)
    best = [grid[i, j], (theta[i], theta[j])]
    evaluations = grid.size

    def objective(angles: np.ndarray) -> float:
        nonlocal evaluations
        evaluations += 1
        u, v = sphere_vectors(spec, basis, r, angles)
        value = abs(float(_defects(spec, u, v))) / (r * r)
        if value > best[0]:
            best[0], best[1] = value, (float(angles[0]), float(angles[1]))
        return -value

    if budget.refine_iterations > 0:
        h = 0.5 * np.pi / budget.grid
        for cell in flat[: budget.top_k]:
            start = np.array([theta[k] for k in np.unravel_index(cell, grid.shape)])
            minimize(
                objective,
                start,
                method="Nelder-Mead",
                options={
                    "initial_simplex": [start, start + (h, 0.0), start + (0.0, h)],
                    "maxiter": budget.refine_iterations,
                    "xatol": 1e-12,
                    "fatol": 1e-15,
                },
            )
    return best[0], best[1], evaluations


def search_defect(spec: NormSpec, x0, r: float, budget: SearchBudget = SearchBudget()) -> DefectSearchResult:
    """Pair on the sphere about the origin (the recentered sphere) maximizing |defect|."""
    if spec.dim < 2:
        raise UnsupportedDimensionError(spec.dim)
    as_point(x0, spec.dim, "center")
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r}")

    best, best_angles, best_basis, evaluations = -1.0, (0.0, 0.0), None, 0
    for basis in section_bases(spec.dim, budget.sections, budget.seed):
        value, angles, n = _search_section(spec, basis, r, budget)
        evaluations += n
        if value > best:
            best, best_angles, best_basis = value, angles, basis

    u, v = sphere_vectors(spec, best_basis, r, np.array(best_angles))
    record = DefectRecord(u=u, v=v, defect=float(_defects(spec, u, v)))
    logger.debug("max |defect| / r^2 = %.6e after %d evaluations", abs(record.defect) / r**2, evaluations)
    return DefectSearchResult(best=record, evaluations=evaluations)


def find_defect_pair(
    spec: NormSpec,
    x0,
    r: float,
    budget: SearchBudget = SearchBudget(),
    tol: float = DEFECT_TOL,
) -> Optional[DefectRecord]:
    """Best defect pair if its |defect| exceeds tol * r^2, else None."""
    record = search_defect(spec, x0, r, budget).best
    return record if abs(record.defect) > tol * r * r else None
