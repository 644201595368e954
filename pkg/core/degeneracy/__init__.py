"""
Sphere degeneracy and the inner product space classifier.

Provides:
- parallelogram-law defect and the defect-pair search
- S(M) for finite sets and the lower-bound search for S of a sphere
- classify: INNER_PRODUCT / NOT_INNER_PRODUCT / INCONCLUSIVE with witnesses
- explicit max-norm triples of any prescribed circumradius
"""
from core.degeneracy.classifier import classify
from core.degeneracy.defect import find_defect_pair, parallelogram_defect, search_defect
from core.degeneracy.finite import s_of_finite_set
from core.degeneracy.linf_family import (
    achieve_circumradius_linf,
    collinear_triple,
    equilateral_triple,
    isosceles_triple,
)
from core.degeneracy.search import circumradius_landscape, s_of_sphere, search_sphere
from core.degeneracy.types import (
    ClassificationReport,
    ClassifierOptions,
    DefectRecord,
    SearchBudget,
    SearchDiagnostics,
    SphereSearchResult,
    Verdict,
    WitnessTriple,
)

__all__ = [
    "ClassificationReport",
    "ClassifierOptions",
    "DefectRecord",
    "SearchBudget",
    "SearchDiagnostics",
    "SphereSearchResult",
    "Verdict",
    "WitnessTriple",
    "achieve_circumradius_linf",
    "circumradius_landscape",
    "classify",
    "collinear_triple",
    "equilateral_triple",
    "find_defect_pair",
    "isosceles_triple",
    "parallelogram_defect",
    "s_of_finite_set",
    "s_of_sphere",
    "search_defect",
    "search_sphere",
]
