from itertools import combinations

import numpy as np
import pytest

from core.degeneracy import (
    ClassifierOptions,
    SearchBudget,
    Verdict,
    circumradius_landscape,
    classify,
    find_defect_pair,
    parallelogram_defect,
    s_of_finite_set,
    s_of_sphere,
    search_defect,
    search_sphere,
)
from core.degeneracy.sections import section_bases
from core.degeneracy.types import SphereSearchResult
from core.errors import CoincidentPointsError, UnsupportedDimensionError
from core.menger import INFINITE, ExtendedRadius, circumradius, circumradius_points
from core.normspace import NormSpec, dist
from tests.conftest import random_spd

QUICK = SearchBudget(grid=16, top_k=4, sections=3, refine_iterations=50)


@pytest.mark.unit
class TestDefect:
    def test_max_norm_diagonals(self, linf2):
        assert parallelogram_defect(linf2, [1, 1], [1, -1]) == 4.0

    def test_l1_axes(self):
        assert parallelogram_defect(NormSpec.pnorm(1, 2), [1, 0], [0, 1]) == 4.0

    def test_vanishes_for_inner_products(self, rng):
        specs = [NormSpec.euclidean(3), NormSpec.quadratic(random_spd(rng, 3))]
        for spec in specs:
            for _ in range(50):
                u, v = rng.standard_normal((2, 3))
                scale = dist(spec, u, 0 * u) ** 2 + dist(spec, v, 0 * v) ** 2
                assert abs(parallelogram_defect(spec, u, v)) <= 1e-12 * scale

    def test_search_finds_large_defect_for_max_norm(self, linf2):
        best = search_defect(linf2, [0, 0], 1.0, QUICK).best
        assert abs(best.defect) >= 2.0

    def test_defect_scales_with_radius_squared(self, linf2):
        small = search_defect(linf2, [0, 0], 1.0, QUICK).best.defect
        large = search_defect(linf2, [0, 0], 3.0, QUICK).best.defect
        assert large == pytest.approx(9.0 * small, rel=1e-9)

    def test_no_pair_for_euclidean(self, euclid2):
        assert find_defect_pair(euclid2, [0, 0], 1.0, QUICK) is None

    def test_pair_for_p3(self):
        record = find_defect_pair(NormSpec.pnorm(3, 2), [0, 0], 1.0, QUICK)
        assert record is not None
        assert abs(record.defect) > 0.5


@pytest.mark.unit
class TestFiniteSet:
    def test_points_on_circle(self, euclid2):
        t = np.linspace(0, 2 * np.pi, 7)[:-1]
        pts = 2.0 * np.column_stack([np.cos(t), np.sin(t)])
        assert s_of_finite_set(euclid2, pts).value == pytest.approx(2.0, rel=1e-12)

    def test_collinear_triple_gives_infinity(self, euclid2):
        assert s_of_finite_set(euclid2, [[0, 0], [1, 0], [2, 0], [0, 5]]) is INFINITE

    def test_max_norm_sphere_contains_metric_segments(self, linf2):
        assert s_of_finite_set(linf2, [[0, 1], [1, 0], [-1, 0]]) is INFINITE

    def test_maximum_over_triples(self, euclid2):
        pts = np.array([[0, 0], [3, 0], [0, 4], [1, 1]], dtype=float)
        expected = max(circumradius_points(euclid2, *pts[list(tri)]) for tri in combinations(range(4), 3))
        assert s_of_finite_set(euclid2, pts) == expected

    def test_duplicates(self, euclid2):
        with pytest.raises(CoincidentPointsError):
            s_of_finite_set(euclid2, [[0, 0], [0, 0], [1, 0]])

    def test_too_few_points(self, euclid2):
        with pytest.raises(ValueError):
            s_of_finite_set(euclid2, [[0, 0], [1, 0]])


@pytest.mark.unit
class TestSphereSearch:
    def test_euclidean_sphere_has_radius_r(self, euclid2):
        s, witness = s_of_sphere(euclid2, [1, 2], 1.5, QUICK)
        assert 1.5 * (1 - 1e-9) <= s.value <= 1.5 * (1 + 1e-9)
        for p in (witness.u, witness.v, witness.w):
            assert dist(euclid2, p, [1, 2]) == pytest.approx(1.5, rel=1e-12)

    def test_max_norm_sphere_is_infinite(self, linf2):
        result = search_sphere(linf2, [0, 0], 1.0, QUICK)
        assert result.s_estimate.is_infinite
        assert result.diagnostics.short_circuited
        assert circumradius(result.witness.sides) is INFINITE

    def test_l1_exceeds_radius(self):
        s, _ = s_of_sphere(NormSpec.pnorm(1, 2), [0, 0], 1.0, QUICK)
        assert s.value > 1.0

    def test_witness_matches_estimate(self):
        spec = NormSpec.pnorm(3, 3)
        result = search_sphere(spec, [0, 0, 0], 1.0, QUICK)
        w = result.witness
        assert circumradius(w.sides).value == pytest.approx(result.s_estimate.value, rel=1e-12)
        assert w.sides.a == pytest.approx(dist(spec, w.u, w.v), rel=1e-12)
        assert w.sides.b == pytest.approx(dist(spec, w.v, w.w), rel=1e-12)
        assert w.sides.c == pytest.approx(dist(spec, w.w, w.u), rel=1e-12)

    def test_translation_invariance(self):
        spec = NormSpec.pnorm(3, 2)
        at_origin = search_sphere(spec, [0, 0], 1.0, QUICK)
        moved = search_sphere(spec, [5, -3], 1.0, QUICK)
        assert moved.s_estimate == at_origin.s_estimate
        np.testing.assert_allclose(moved.witness.u - [5, -3], at_origin.witness.u, atol=1e-14)

    def test_landscape_scales_with_radius(self):
        spec = NormSpec.pnorm(1.5, 2)
        _, _, unit = circumradius_landscape(spec, 1.0, 12)
        _, _, scaled = circumradius_landscape(spec, 2.5, 12)
        np.testing.assert_allclose(scaled, 2.5 * unit, rtol=1e-12, equal_nan=True)

    def test_more_sections_never_lower_the_estimate(self):
        spec = NormSpec.pnorm(3, 3)
        few = search_sphere(spec, [0, 0, 0], 1.0, SearchBudget(grid=16, top_k=2, sections=2, refine_iterations=30))
        many = search_sphere(spec, [0, 0, 0], 1.0, SearchBudget(grid=16, top_k=2, sections=5, refine_iterations=30))
        assert many.s_estimate >= few.s_estimate

    def test_refinement_never_lowers_the_estimate(self):
        spec = NormSpec.pnorm(1.5, 2)
        coarse = search_sphere(spec, [0, 0], 1.0, SearchBudget(grid=16, refine_iterations=0))
        refined = search_sphere(spec, [0, 0], 1.0, SearchBudget(grid=16, refine_iterations=80))
        assert refined.s_estimate >= coarse.s_estimate
        assert coarse.diagnostics.iterations == 0
        assert refined.diagnostics.iterations > 0

    @pytest.mark.parametrize("spec", [NormSpec.pnorm(3, 3), NormSpec.linf(3)], ids=lambda s: s.label)
    def test_worker_count_does_not_change_the_result(self, spec):
        budget = SearchBudget(grid=12, top_k=2, sections=4, refine_iterations=20)
        serial = search_sphere(spec, [0, 0, 0], 1.0, budget)
        parallel = search_sphere(spec, [0, 0, 0], 1.0, SearchBudget(grid=12, top_k=2, sections=4, refine_iterations=20, workers=3))
        assert parallel.s_estimate == serial.s_estimate
        assert parallel.diagnostics == serial.diagnostics

    def test_sections_are_prefix_stable(self):
        short, long = section_bases(4, 3, seed=7), section_bases(4, 6, seed=7)
        for a, b in zip(short, long):
            np.testing.assert_array_equal(a, b)
        np.testing.assert_allclose(long[4].T @ long[4], np.eye(2), atol=1e-12)

    def test_dimension_one_is_rejected(self):
        with pytest.raises(UnsupportedDimensionError):
            search_sphere(NormSpec.euclidean(1), [0], 1.0, QUICK)

    def test_radius_must_be_positive(self, euclid2):
        with pytest.raises(ValueError):
            search_sphere(euclid2, [0, 0], 0.0, QUICK)


@pytest.mark.unit
class TestClassifier:
    def test_euclidean(self, euclid2):
        report = classify(euclid2, [0, 0], 1.0, ClassifierOptions(budget=QUICK))
        assert report.verdict == Verdict.INNER_PRODUCT
        assert report.verdict.exit_code == 0
        assert report.defect is None
        assert report.s_estimate.value >= 1.0 - 1e-9

    def test_max_norm(self, linf2):
        report = classify(linf2, [0, 0], 1.0, ClassifierOptions(budget=QUICK))
        assert report.verdict == Verdict.NOT_INNER_PRODUCT
        assert report.verdict.exit_code == 1
        assert report.s_estimate.is_infinite
        assert report.max_abs_defect >= 2.0

    def test_small_budget_is_inconclusive(self, euclid2):
        options = ClassifierOptions(budget=SearchBudget(grid=8, refine_iterations=0))
        report = classify(euclid2, [0, 0], 1.0, options)
        assert report.verdict == Verdict.INCONCLUSIVE
        assert report.verdict.exit_code == 2

    def test_small_budget_still_finds_witnesses(self, linf2):
        options = ClassifierOptions(budget=SearchBudget(grid=8, refine_iterations=0))
        assert classify(linf2, [0, 0], 1.0, options).verdict == Verdict.NOT_INNER_PRODUCT

    def test_witness_points_lie_on_the_sphere(self):
        spec = NormSpec.pnorm(1.5, 2)
        report = classify(spec, [2, 2], 0.5, ClassifierOptions(budget=QUICK))
        assert report.verdict == Verdict.NOT_INNER_PRODUCT
        w = report.witness
        for p in (w.u, w.v, w.w):
            assert dist(spec, p, [2, 2]) == pytest.approx(0.5, rel=1e-12)
        assert w.circumradius == report.s_estimate
        assert report.s_estimate.value > 0.5

    def test_quadratic_form(self, rng):
        spec = NormSpec.quadratic(random_spd(rng, 2))
        assert classify(spec, [0, 0], 1.0, ClassifierOptions(budget=QUICK)).verdict == Verdict.INNER_PRODUCT


@pytest.mark.unit
def test_l1_defect_scales_with_radius():
    record = find_defect_pair(NormSpec.pnorm(1, 3), [0, 0, 0], 2.0, QUICK)
    assert abs(record.defect) >= 16.0 * (1 - 1e-12)


@pytest.mark.unit
def test_unit_square_vertices(euclid2):
    assert s_of_finite_set(euclid2, [[0, 0], [1, 0], [1, 1], [0, 1]]).value == pytest.approx(np.sqrt(2) / 2, rel=1e-14)


@pytest.mark.unit
class TestScaleAndTranslation:
    @pytest.mark.parametrize("factor", [0.5, 2.0, 10.0])
    @pytest.mark.parametrize("spec", [NormSpec.pnorm(1.5, 2), NormSpec.pnorm(3, 3)], ids=lambda s: s.label)
    def test_sphere_estimate_scales_with_radius(self, spec, factor):
        origin = np.zeros(spec.dim)
        s, _ = s_of_sphere(spec, origin, 1.0, QUICK)
        scaled, _ = s_of_sphere(spec, origin, factor, QUICK)
        assert scaled.value == pytest.approx(factor * s.value, rel=1e-6)

    @pytest.mark.parametrize("spec", [NormSpec.euclidean(2), NormSpec.pnorm(3, 2), NormSpec.linf(2)], ids=lambda s: s.label)
    def test_verdict_does_not_depend_on_radius(self, spec):
        options = ClassifierOptions(budget=QUICK)
        verdicts = {classify(spec, [0, 0], r, options).verdict for r in (0.5, 1.0, 2.0, 10.0)}
        assert len(verdicts) == 1

    @pytest.mark.parametrize("spec", [NormSpec.euclidean(2), NormSpec.pnorm(1.5, 2)], ids=lambda s: s.label)
    def test_classifier_translation_invariance(self, spec):
        options = ClassifierOptions(budget=QUICK)
        at_origin = classify(spec, [0, 0], 1.0, options)
        moved = classify(spec, [4.0, -2.5], 1.0, options)
        assert moved.verdict == at_origin.verdict
        assert moved.s_estimate.value == pytest.approx(at_origin.s_estimate.value, rel=1e-6)


@pytest.mark.unit
def test_estimate_below_radius_is_inconclusive(euclid2, monkeypatch):
    import core.degeneracy.classifier as classifier_module

    real = classifier_module.search_sphere

    def shrunk(spec, x0, r, budget):
        result = real(spec, x0, r, budget)
        return SphereSearchResult(ExtendedRadius(0.5 * r), result.witness, result.diagnostics)

    monkeypatch.setattr(classifier_module, "search_sphere", shrunk)
    assert classify(euclid2, [0, 0], 1.0, ClassifierOptions(budget=QUICK)).verdict == Verdict.INCONCLUSIVE
