"""
Inner product space classifier.

For dim >= 2 a normed space is an inner product space iff S(sphere) = r for
one (equivalently every) sphere, and S(sphere) >= r always. The classifier
combines the sphere search with the parallelogram-law defect search:

- NOT_INNER_PRODUCT: a probed triple with circumradius > r (1 + margin), or a
  defect pair above threshold. Both come with an explicit witness.
- INNER_PRODUCT: neither found under a full budget and S within r (1 +- margin).
  Evidence of absence only.
- INCONCLUSIVE: no witness, but the budget is too small to claim the above.
"""
import numpy as np

from core.degeneracy.defect import search_defect
from core.degeneracy.search import antipodal_sides, search_sphere
from core.degeneracy.types import ClassificationReport, ClassifierOptions, Verdict, WitnessTriple
from core.errors import UnsupportedDimensionError
from core.log import get_logger
from core.menger.circumradius import circumradius
from core.menger.types import TriangleSides
from core.normspace.space import NormSpec, as_point

logger = get_logger(__name__)


def _defect_witness(spec: NormSpec, center: np.ndarray, u: np.ndarray, v: np.ndarray) -> WitnessTriple:
    sides = TriangleSides(*(float(s) for s in antipodal_sides(spec, u, v)))
    return WitnessTriple(u=center + u, v=center + v, w=center - v, sides=sides, circumradius=circumradius(sides))


def classify(spec: NormSpec, x0, r: float, options: ClassifierOptions = ClassifierOptions()) -> ClassificationReport:
    if spec.dim < 2:
        raise UnsupportedDimensionError(spec.dim)
    center = as_point(x0, spec.dim, "center")

    sphere = search_sphere(spec, center, r, options.budget)
    defects = search_defect(spec, center, r, options.budget)

    s_estimate, witness = sphere.s_estimate, sphere.witness
    max_abs_defect = abs(defects.best.defect)
    defect_found = max_abs_defect > options.defect_tol * r * r
    if defect_found:
        # (u, v, -v) of a defect pair is a sphere triple as well
        candidate = _defect_witness(spec, center, defects.best.u, defects.best.v)
        if candidate.circumradius > s_estimate:
            s_estimate, witness = candidate.circumradius, candidate

    budget = options.budget
    full_budget = budget.grid >= options.min_conclusive_grid and budget.refine_iterations > 0
    if s_estimate.value > r * (1 + options.margin) or defect_found:
        verdict = Verdict.NOT_INNER_PRODUCT
    elif full_budget and s_estimate.value >= r * (1 - options.margin):
        verdict = Verdict.INNER_PRODUCT
    else:
        verdict = Verdict.INCONCLUSIVE

    logger.info(
        "classified %s at r=%g: %s (S >= %s, max |defect| = %.3e)",
        spec.label, r, verdict.value, s_estimate, max_abs_defect,
    )
    return ClassificationReport(
        verdict=verdict,
        s_estimate=s_estimate,
        r=float(r),
        x0=center,
        witness=witness,
        defect=defects.best if defect_found else None,
        max_abs_defect=max_abs_defect,
        diagnostics=sphere.diagnostics,
        options=options,
    )
