"""
Lower bound on S(sphere) = sup of r(u,v,w) over triples of the sphere.

Only antipodal triples (u, v, 2 x0 - v) are probed: in every non inner
product space some sphere triple of that form already has circumradius
above r. Per 2-D section the two angles of u and v are scanned on a coarse
grid, then the best cells are refined with Nelder-Mead. The estimate is the
running maximum over everything probed; any degenerate (collinear) probe
ends the search with INFINITE.
"""
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from core.degeneracy.sections import section_bases, sphere_vectors
from core.degeneracy.types import (
    SearchBudget,
    SearchDiagnostics,
    SectionOutcome,
    SphereSearchResult,
    WitnessTriple,
)
from core.errors import UnsupportedDimensionError
from core.log import get_logger
from core.menger.circumradius import circumradius_array
from core.menger.types import ExtendedRadius, TriangleSides
from core.normspace.space import NormSpec, as_point, norms

logger = get_logger(__name__)

# probes with two points closer than this (relative to the diameter) are skipped
NEAR_COINCIDENT = 1e-9


class _DegenerateProbe(Exception):
    def __init__(self, angles):
        self.angles = (float(angles[0]), float(angles[1]))


def antipodal_sides(spec: NormSpec, u: np.ndarray, v: np.ndarray):
    """Sides d(u,v), d(v,-v), d(-v,u) for vectors about the origin."""
    return norms(spec, u - v), norms(spec, 2.0 * v), norms(spec, u + v)


def _antipodal_radius(spec: NormSpec, u: np.ndarray, v: np.ndarray, r: float) -> np.ndarray:
    a, b, c = antipodal_sides(spec, u, v)
    radius = circumradius_array(a, b, c)
    too_close = np.minimum(a, c) < NEAR_COINCIDENT * 2.0 * r
    return np.where(too_close, np.nan, radius)


def _grid_angles(grid: int) -> tuple[np.ndarray, np.ndarray]:
    # (u, v, -v) and (u, -v, v) are the same triple, v needs only a half turn
    return 2.0 * np.pi * np.arange(grid) / grid, np.pi * np.arange(grid) / grid


def circumradius_landscape(spec: NormSpec, r: float, grid: int, basis: Optional[np.ndarray] = None):
    """
    r(u, v, -v) over the angle grid of one section.

    Returns (theta_u, theta_v, radii) with radii[i, j] for (theta_u[i], theta_v[j]);
    skipped near-coincident cells are nan.
    """
    if basis is None:
        basis = section_bases(spec.dim, 1, 0)[0]
    tu, tv = _grid_angles(grid)
    u = sphere_vectors(spec, basis, r, tu)
    v = sphere_vectors(spec, basis, r, tv)
    return tu, tv, _antipodal_radius(spec, u[:, None, :], v[None, :, :], r)


def _search_section(spec: NormSpec, index: int, basis: np.ndarray, r: float, budget: SearchBudget) -> SectionOutcome:
    tu, tv, radii = circumradius_landscape(spec, r, budget.grid, basis)
    evaluations = radii.size

    degenerate = np.argwhere(np.isinf(radii))
    if len(degenerate):
        i, j = degenerate[0]
        return SectionOutcome(index, np.inf, (tu[i], tv[j]), (), evaluations, 0)

    ranked = np.argsort(-np.nan_to_num(radii, nan=-1.0), axis=None, kind="stable")
    i, j = np.unravel_index(ranked[0], radii.shape)
    best = [float(radii[i, j]), (float(tu[i]), float(tv[j]))]
    if budget.refine_iterations == 0:
        return SectionOutcome(index, best[0], best[1], (), evaluations, 0)

    def objective(angles: np.ndarray) -> float:
        nonlocal evaluations
        evaluations += 1
        u, v = sphere_vectors(spec, basis, r, angles)
        value = float(_antipodal_radius(spec, u, v, r))
        if np.isnan(value):
            return 0.0
        if np.isinf(value):
            raise _DegenerateProbe(angles)
        if value > best[0]:
            best[0], best[1] = value, (float(angles[0]), float(angles[1]))
        return -value / r

    h = np.pi / budget.grid
    per_start, iterations = [], 0
    for cell in ranked[: budget.top_k]:
        ci, cj = np.unravel_index(cell, radii.shape)
        start = np.array([tu[ci], tv[cj]])
        try:
            res = minimize(
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
        except _DegenerateProbe as probe:
            return SectionOutcome(index, np.inf, probe.angles, tuple(per_start), evaluations, iterations)
        iterations += res.nit
        per_start.append(-float(res.fun) * r)

    return SectionOutcome(index, best[0], best[1], tuple(per_start), evaluations, iterations)


def _outcomes(spec: NormSpec, r: float, budget: SearchBudget) -> list[SectionOutcome]:
    bases = section_bases(spec.dim, budget.sections, budget.seed)
    if budget.workers > 1:
        with ThreadPoolExecutor(max_workers=budget.workers) as pool:
            outcomes = list(pool.map(lambda ib: _search_section(spec, ib[0], ib[1], r, budget), enumerate(bases)))
    else:
        outcomes = []
        for index, basis in enumerate(bases):
            outcomes.append(_search_section(spec, index, basis, r, budget))
            if outcomes[-1].degenerate:
                break

    # identical result whatever the worker count: stop at the first degenerate section
    for k, outcome in enumerate(outcomes):
        if outcome.degenerate:
            return outcomes[: k + 1]
    return outcomes


def search_sphere(spec: NormSpec, x0, r: float, budget: SearchBudget = SearchBudget()) -> SphereSearchResult:
    if spec.dim < 2:
        raise UnsupportedDimensionError(spec.dim)
    center = as_point(x0, spec.dim, "center")
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r}")

    outcomes = _outcomes(spec, r, budget)
    # strict comparison keeps the earliest section on ties
    top = outcomes[0]
    for outcome in outcomes[1:]:
        if outcome.best > top.best:
            top = outcome

    basis = section_bases(spec.dim, top.index + 1, budget.seed)[top.index]
    u, v = sphere_vectors(spec, basis, r, np.array(top.angles))
    a, b, c = (float(s) for s in antipodal_sides(spec, u, v))
    radius = ExtendedRadius(float(top.best))
    witness = WitnessTriple(u=center + u, v=center + v, w=center - v, sides=TriangleSides(a, b, c), circumradius=radius)

    diagnostics = SearchDiagnostics(
        sections=len(outcomes),
        starts=sum(len(o.best_per_start) for o in outcomes),
        evaluations=sum(o.evaluations for o in outcomes),
        iterations=sum(o.iterations for o in outcomes),
        best_per_start=tuple(x for o in outcomes for x in o.best_per_start),
        short_circuited=top.degenerate,
    )
    logger.debug(
        "sphere search on %s: S >= %s after %d evaluations in %d sections",
        spec.label, radius, diagnostics.evaluations, diagnostics.sections,
    )
    return SphereSearchResult(s_estimate=radius, witness=witness, diagnostics=diagnostics)


def s_of_sphere(spec: NormSpec, x0, r: float, budget: SearchBudget = SearchBudget()) -> tuple[ExtendedRadius, WitnessTriple]:
    """Certified lower bound on S of the sphere of radius r about x0, with the triple attaining it."""
    result = search_sphere(spec, x0, r, budget)
    return result.s_estimate, result.witness
