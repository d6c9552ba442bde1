import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordmixed import (
    Cluster,
    Dataset,
    FixedEffects,
    InfeasibleParametersError,
    LinkFamily,
    category_probabilities,
    linear_predictors,
    recover_predictors,
)

ALL_LINKS = list(LinkFamily)


def feasible_deltas(link, values):
    d = np.array(values, dtype=float)
    if link is LinkFamily.PROPORTIONAL_ODDS:
        d = np.sort(d)
    return d


delta_lists = st.lists(
    st.floats(min_value=-8.0, max_value=8.0, allow_nan=False), min_size=1, max_size=5
)


class TestLinearPredictors:
    def test_zero_covariates_and_effects(self):
        fe = FixedEffects(intercepts=[-2.0, -1.0], slopes=np.zeros(3))
        out = linear_predictors(fe, np.zeros(3), np.zeros(2))
        np.testing.assert_allclose(out, [-2.0, -1.0])

    def test_indicator_sum_matches_hand_total(self):
        # strawberry-style coefficients: male 2, female 2, block 2 selected
        fe = FixedEffects(
            intercepts=[-2.388, -0.750],
            slopes=[0.142, -0.177, 0.789, 0.692, 1.138, 0.750, 0.869, 0.107],
        )
        x = np.array([1, 0, 1, 0, 0, 1, 0, 0], dtype=float)
        out = linear_predictors(fe, x, np.zeros(2))
        np.testing.assert_allclose(out, [-0.707, 0.931], atol=1e-12)

    def test_random_effect_additivity(self):
        fe = FixedEffects(
            intercepts=[-2.388, -0.750],
            slopes=[0.142, -0.177, 0.789, 0.692, 1.138, 0.750, 0.869, 0.107],
        )
        x = np.array([1, 0, 1, 0, 0, 1, 0, 0], dtype=float)
        out = linear_predictors(fe, x, np.array([0.5, 0.5]))
        np.testing.assert_allclose(out, [-0.207, 1.431], atol=1e-12)

    def test_dimension_mismatch(self):
        fe = FixedEffects(intercepts=[0.0, 1.0], slopes=[1.0])
        with pytest.raises(ValueError):
            linear_predictors(fe, np.zeros(2), np.zeros(2))
        with pytest.raises(ValueError):
            linear_predictors(fe, np.zeros(1), np.zeros(3))


class TestCategoryProbabilities:
    def test_proportional_odds_equal_cutpoints(self):
        probs = category_probabilities(LinkFamily.PROPORTIONAL_ODDS, np.zeros(2))
        np.testing.assert_allclose(probs, [0.5, 0.0, 0.5], atol=1e-15)

    def test_adjacent_categories_symmetry(self):
        probs = category_probabilities(LinkFamily.ADJACENT_CATEGORIES, np.zeros(2))
        np.testing.assert_allclose(probs, np.ones(3) / 3, atol=1e-15)

    def test_continuation_ratio_repeated_halving(self):
        probs = category_probabilities(LinkFamily.CONTINUATION_RATIO, np.zeros(2))
        np.testing.assert_allclose(probs, [0.5, 0.25, 0.25], atol=1e-15)

    def test_proportional_odds_strawberry_intercepts(self):
        # oracle: high-precision expit arithmetic via mpmath
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 40
        d1, d2 = "-2.171", "-0.669"
        g1 = 1 / (1 + mp.e ** (-mp.mpf(d1)))
        g2 = 1 / (1 + mp.e ** (-mp.mpf(d2)))
        expected = [float(g1), float(g2 - g1), float(1 - g2)]
        probs = category_probabilities(
            LinkFamily.PROPORTIONAL_ODDS, np.array([-2.171, -0.669])
        )
        np.testing.assert_allclose(probs, expected, atol=1e-14)
        np.testing.assert_allclose(probs, [0.10239, 0.23631, 0.66130], atol=5e-5)

    def test_proportional_odds_infeasible_raises(self):
        with pytest.raises(InfeasibleParametersError):
            category_probabilities(LinkFamily.PROPORTIONAL_ODDS, np.array([0.5, -0.5]))

    def test_binary_case(self):
        for link in ALL_LINKS:
            probs = category_probabilities(link, np.array([0.3]))
            assert probs.shape == (2,)
            assert probs.sum() == pytest.approx(1.0, abs=1e-14)

    @pytest.mark.parametrize("link", ALL_LINKS)
    @given(values=delta_lists)
    @settings(max_examples=60, deadline=None)
    def test_sum_to_one_and_bounds(self, link, values):
        d = feasible_deltas(link, values)
        probs = category_probabilities(link, d)
        assert np.all(probs >= 0.0)
        assert np.all(probs <= 1.0)
        assert abs(probs.sum() - 1.0) < 1e-12

    @pytest.mark.parametrize("link", ALL_LINKS)
    @given(values=delta_lists)
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, link, values):
        d = feasible_deltas(link, values)
        if link is LinkFamily.PROPORTIONAL_ODDS:
            # distinct cut points keep middle probabilities away from log(0)
            d = d + 1e-4 * np.arange(d.size)
        probs = category_probabilities(link, d)
        recovered = recover_predictors(link, probs)
        np.testing.assert_allclose(recovered, d, atol=1e-10, rtol=0)

    @pytest.mark.parametrize("link", [LinkFamily.PROPORTIONAL_ODDS, LinkFamily.CONTINUATION_RATIO])
    @given(values=delta_lists, shift=st.floats(min_value=0.01, max_value=3.0))
    @settings(max_examples=60, deadline=None)
    def test_shift_moves_mass_to_lower_categories(self, link, values, shift):
        d = feasible_deltas(link, values)
        lo = np.cumsum(category_probabilities(link, d))
        hi = np.cumsum(category_probabilities(link, d + shift))
        assert np.all(hi >= lo - 1e-12)

    def test_batched_evaluation_matches_rows(self):
        rng = np.random.default_rng(5)
        d = np.sort(rng.normal(size=(7, 2)), axis=1)
        batch = category_probabilities(LinkFamily.PROPORTIONAL_ODDS, d)
        for i in range(7):
            row = category_probabilities(LinkFamily.PROPORTIONAL_ODDS, d[i])
            np.testing.assert_allclose(batch[i], row, atol=1e-15)


class TestDataModel:
    def test_cluster_validation(self):
        with pytest.raises(ValueError):
            Cluster(covariates=np.zeros(2), counts=np.array([1, -1, 0]))
        with pytest.raises(ValueError):
            Cluster(covariates=np.zeros(2), counts=np.array([0, 0, 0]))
        with pytest.raises(ValueError):
            Cluster(covariates=np.zeros(2), counts=np.array([0.5, 1.5, 0.0]))

    def test_dataset_requires_consistent_shapes(self):
        a = Cluster(covariates=np.zeros(2), counts=np.array([1, 2, 3]))
        b = Cluster(covariates=np.zeros(3), counts=np.array([1, 2, 3]))
        c = Cluster(covariates=np.zeros(2), counts=np.array([1, 2]))
        with pytest.raises(ValueError):
            Dataset(clusters=(a, b))
        with pytest.raises(ValueError):
            Dataset(clusters=(a, c))
        with pytest.raises(ValueError):
            Dataset(clusters=())

    def test_matrices_are_consistent(self):
        a = Cluster(covariates=np.array([1.0, 0.0]), counts=np.array([1, 2, 3]))
        b = Cluster(covariates=np.array([0.0, 1.0]), counts=np.array([4, 0, 2]))
        ds = Dataset(clusters=(a, b))
        assert ds.covariate_matrix.shape == (2, 2)
        assert ds.count_matrix.tolist() == [[1, 2, 3], [4, 0, 2]]
        assert ds.sizes.tolist() == [6, 6]
        assert ds.total_observations == 12
