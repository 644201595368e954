import math

import numpy as np
import pytest

from core.errors import DimensionMismatchError, InvalidNormError, ZeroDirectionError
from core.normspace import (
    NormSpec,
    antipode,
    check_norm_axioms,
    dist,
    norm,
    norms,
    pairwise_distances,
    sphere_point,
)
from core.normspace.factory import create_gauge

SQUARE = [[1, 1], [1, -1], [-1, 1], [-1, -1]]
DIAMOND = [[1, 0], [0, 1], [-1, 0], [0, -1]]


@pytest.mark.unit
class TestNormValues:
    def test_pnorm_examples(self):
        assert norm(NormSpec.euclidean(2), [3, 4]) == 5.0
        assert norm(NormSpec.linf(2), [3, -4]) == 4.0
        assert norm(NormSpec.pnorm(1, 2), [3, -4]) == 7.0
        assert norm(NormSpec.pnorm(3, 2), [1, 1]) == pytest.approx(2 ** (1 / 3), rel=1e-14)

    def test_pnorm_does_not_overflow(self):
        assert norm(NormSpec.pnorm(5, 2), [1e300, 1e300]) == pytest.approx(1e300 * 2 ** 0.2, rel=1e-14)

    def test_weighted_pnorm(self):
        spec = NormSpec.weighted_pnorm(2, [4, 1])
        assert norm(spec, [1, 1]) == pytest.approx(math.sqrt(5), rel=1e-14)
        assert norm(NormSpec.weighted_pnorm("inf", [2, 3]), [1, 1]) == 3.0

    def test_quadratic(self):
        spec = NormSpec.quadratic([[2, 0], [0, 8]])
        assert norm(spec, [1, 1]) == pytest.approx(math.sqrt(10), rel=1e-14)

    def test_polyhedral_square_is_max_norm(self, rng):
        square, linf = NormSpec.polyhedral(SQUARE), NormSpec.linf(2)
        x = rng.standard_normal((50, 2))
        np.testing.assert_allclose(norms(square, x), norms(linf, x), rtol=1e-13)

    def test_polyhedral_diamond_is_l1(self, rng):
        diamond, l1 = NormSpec.polyhedral(DIAMOND), NormSpec.pnorm(1, 2)
        x = rng.standard_normal((50, 2))
        np.testing.assert_allclose(norms(diamond, x), norms(l1, x), rtol=1e-13)

    def test_norms_is_vectorized_over_leading_axes(self):
        x = np.ones((3, 4, 2))
        assert norms(NormSpec.linf(2), x).shape == (3, 4)

    def test_dist(self):
        assert dist(NormSpec.pnorm(1, 3), [1, 2, 3], [0, 0, 0]) == 6.0


@pytest.mark.unit
class TestValidation:
    @pytest.mark.parametrize("p", [0.5, 0.0, -1.0, math.inf, "two"])
    def test_bad_exponent(self, p):
        with pytest.raises(InvalidNormError):
            NormSpec(kind="pnorm", dim=2, p=p)

    @pytest.mark.parametrize("kind", ["pnorm", "weighted-pnorm"])
    def test_missing_exponent(self, kind):
        with pytest.raises(InvalidNormError):
            NormSpec(kind=kind, dim=2, weights=(1.0, 2.0))

    def test_non_spd_matrix(self):
        with pytest.raises(InvalidNormError):
            NormSpec.quadratic([[1, 2], [2, 1]])

    def test_asymmetric_matrix(self):
        with pytest.raises(InvalidNormError):
            NormSpec.quadratic([[2, 1], [0, 2]])

    def test_asymmetric_polytope(self):
        with pytest.raises(InvalidNormError):
            NormSpec.polyhedral([[1, 0], [0, 1], [-1, -1]])

    def test_weights_must_be_positive(self):
        with pytest.raises(InvalidNormError):
            NormSpec.weighted_pnorm(2, [1, 0])

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="Unknown norm kind"):
            create_gauge("hexagonal", dim=2)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            norm(NormSpec.euclidean(3), [1, 2])


@pytest.mark.unit
@pytest.mark.parametrize(
    "spec",
    [
        NormSpec.euclidean(3),
        NormSpec.linf(4),
        NormSpec.pnorm(1, 2),
        NormSpec.pnorm(1.5, 3),
        NormSpec.weighted_pnorm(3, [1, 2, 0.5]),
        NormSpec.quadratic([[3, 1], [1, 2]]),
        NormSpec.polyhedral(SQUARE),
    ],
    ids=lambda s: s.label,
)
def test_norm_axioms_hold(spec):
    check_norm_axioms(spec, samples=500, seed=1)


@pytest.mark.unit
class TestSphere:
    def test_sphere_point_lies_on_sphere(self, rng):
        spec = NormSpec.pnorm(3, 3)
        x0 = np.array([1.0, -2.0, 0.5])
        for _ in range(20):
            p = sphere_point(spec, x0, 2.5, rng.standard_normal(3))
            assert dist(spec, p, x0) == pytest.approx(2.5, rel=1e-14)

    def test_zero_direction(self, euclid2):
        with pytest.raises(ZeroDirectionError):
            sphere_point(euclid2, [0, 0], 1.0, [0, 0])

    def test_antipode_stays_on_sphere(self, linf2):
        x0 = np.array([2.0, 1.0])
        v = sphere_point(linf2, x0, 1.0, [0.3, 1.0])
        w = antipode(x0, v)
        assert dist(linf2, w, x0) == pytest.approx(1.0, rel=1e-14)
        assert dist(linf2, v, w) == pytest.approx(2.0, rel=1e-14)


@pytest.mark.unit
def test_pairwise_distances_symmetric(rng):
    spec = NormSpec.pnorm(1.5, 3)
    pts = rng.standard_normal((6, 3))
    d = pairwise_distances(spec, pts)
    assert np.array_equal(d, d.T)
    assert np.all(np.diag(d) == 0)
    assert d[1, 4] == pytest.approx(dist(spec, pts[1], pts[4]), rel=1e-14)


@pytest.mark.unit
@pytest.mark.parametrize(
    "spec, x0, r, direction, expected",
    [
        (NormSpec.euclidean(2), [0, 0], 1.0, [2, 0], [1, 0]),
        (NormSpec.linf(2), [0, 0], 1.0, [1, 1], [1, 1]),
        (NormSpec.pnorm(1, 2), [1, 1], 2.0, [1, 0], [3, 1]),
    ],
)
def test_sphere_point_examples(spec, x0, r, direction, expected):
    np.testing.assert_allclose(sphere_point(spec, x0, r, direction), expected, rtol=1e-15)


@pytest.mark.unit
def test_antipode_examples():
    np.testing.assert_array_equal(antipode([0, 0], [1, 0]), [-1, 0])
    np.testing.assert_array_equal(antipode([1, 1], [2, 0]), [0, 2])
    np.testing.assert_array_equal(antipode([3, 4], [3, 4]), [3, 4])
