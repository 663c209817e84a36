import io
import math

import numpy as np
import pytest
from pydantic import ValidationError

from bgescore.business_logic.statistics import posterior_matrix, rank_one_coefficient, sufficient_stats
from bgescore.models.dataset import Dataset
from bgescore.models.prior import PriorConfig, ScoreMode, default_prior, prior_from_overrides
from bgescore.utils.errors import DimensionMismatch, EmptyData, ParseError
from bgescore.utils.handlers.file_formats import FileFormatsHandler
from tests.helpers import gaussian_data


def test_load_dataset_parses_header_and_rows():
    data = FileFormatsHandler.load_dataset(io.StringIO("a,b\n1,2\n3,4\n"))
    assert (data.n, data.N) == (2, 2)
    assert data.names == ("a", "b")
    np.testing.assert_array_equal(data.values, [[1.0, 2.0], [3.0, 4.0]])


def test_load_dataset_header_only_is_empty():
    with pytest.raises(EmptyData):
        FileFormatsHandler.load_dataset(io.StringIO("a,b\n"))


def test_load_dataset_names_row_and_column_of_bad_cell():
    with pytest.raises(ParseError) as excinfo:
        FileFormatsHandler.load_dataset(io.StringIO("a,b\n1,2\n1,x\n"))
    assert excinfo.value.row == 2
    assert excinfo.value.column == "b"
    assert "row 2" in str(excinfo.value) and "'b'" in str(excinfo.value)


@pytest.mark.parametrize("content", ["a,b\n1,2\n1,2,3\n", "a,b\n1,2\n1\n"])
def test_load_dataset_rejects_ragged_rows(content):
    with pytest.raises(ParseError):
        FileFormatsHandler.load_dataset(io.StringIO(content))


@pytest.mark.parametrize("content", ["a,b\n1,nan\n", "a,a\n1,2\n", "a b,c\n1,2\n"])
def test_load_dataset_rejects_missing_values_and_bad_names(content):
    with pytest.raises(ParseError):
        FileFormatsHandler.load_dataset(io.StringIO(content))


def test_csv_round_trip_is_exact(write_csv):
    data = gaussian_data(20, 3, seed=4)
    assert FileFormatsHandler.load_dataset(write_csv(data)) == data


def test_dataset_invariants():
    with pytest.raises(ValueError):
        Dataset.from_array(np.array([[1.0, np.inf]]))
    with pytest.raises(ValueError):
        Dataset(values=np.zeros((2, 2)), names=("a", "a"))


def test_single_observation_statistics():
    x = np.array([[1.5, -2.0, 0.25]])
    stats = sufficient_stats(Dataset.from_array(x))
    np.testing.assert_array_equal(stats.mean, x[0])
    np.testing.assert_array_equal(stats.scatter, np.zeros((3, 3)))


def test_two_observation_scatter():
    x1, x2 = np.array([1.0, 2.0, -1.0]), np.array([3.0, -2.0, 0.5])
    stats = sufficient_stats(Dataset.from_array(np.vstack([x1, x2])))
    d = x1 - x2
    np.testing.assert_allclose(stats.scatter, 0.5 * np.outer(d, d), atol=1e-14)


def test_scatter_of_standard_normal_draws():
    data = gaussian_data(100, 3, seed=11)
    stats = sufficient_stats(data)
    assert np.all(np.abs(stats.scatter / 99 - np.eye(3)) < 0.5)

    mean = data.values.sum(axis=0) / data.N
    deviations = data.values - mean
    reference = deviations.T @ deviations
    np.testing.assert_allclose(stats.scatter, reference, rtol=0, atol=1e-12)


def test_statistics_are_translation_consistent():
    data = gaussian_data(50, 4, seed=2)
    shift = np.array([3.0, -1.0, 0.5, 10.0])
    moved = Dataset(values=data.values + shift, names=data.names)
    s0, s1 = sufficient_stats(data), sufficient_stats(moved)
    np.testing.assert_allclose(s1.mean, s0.mean + shift, atol=1e-10)
    np.testing.assert_allclose(s1.scatter, s0.scatter, atol=1e-10)


def test_posterior_is_invariant_under_observation_permutation():
    data = gaussian_data(40, 3, seed=5)
    order = np.random.default_rng(0).permutation(data.N)
    shuffled = Dataset(values=data.values[order], names=data.names)
    prior = default_prior(3)
    r0 = posterior_matrix(sufficient_stats(data), prior).R.entries
    r1 = posterior_matrix(sufficient_stats(shuffled), prior).R.entries
    np.testing.assert_array_equal(r0, r1)


def test_singular_scatter_has_null_directions():
    data = gaussian_data(2, 4, seed=8)
    stats = sufficient_stats(data)
    deviations = data.values - stats.mean
    # any vector orthogonal to every deviation
    _, _, vt = np.linalg.svd(deviations)
    for v in vt[1:]:
        assert abs(v @ stats.scatter @ v) < 1e-10


def test_posterior_without_rank_one_term():
    data = gaussian_data(10, 2, seed=3)
    stats = sufficient_stats(data)
    prior = PriorConfig(alpha_mu=1.0, alpha_w=4.0, nu=tuple(stats.mean), T=((0.5, 0.0), (0.0, 0.5)))
    R = posterior_matrix(stats, prior).R.entries
    np.testing.assert_allclose(R, 0.5 * np.eye(2) + stats.scatter, atol=1e-14)


def test_posterior_single_observation():
    data = Dataset.from_array(np.array([[-1.0, 0.0]]))
    prior = prior_from_overrides(2, t_scale=1.0)
    R = posterior_matrix(sufficient_stats(data), prior).R.entries
    np.testing.assert_array_equal(R, np.eye(2) + 0.5 * np.outer([1.0, 0.0], [1.0, 0.0]))


def test_posterior_matches_term_by_term_assembly():
    data = gaussian_data(25, 4, seed=6)
    stats = sufficient_stats(data)
    prior = prior_from_overrides(4, alpha_mu=2.0, t_scale=0.8, nu=[0.1, -0.2, 0.3, 0.0])
    R = posterior_matrix(stats, prior).R.entries

    offset = np.array(prior.nu) - stats.mean
    expected = 0.8 * np.eye(4) + stats.scatter + 25 * 2.0 / 27.0 * np.outer(offset, offset)
    np.testing.assert_allclose(R, expected, rtol=0, atol=1e-13)
    assert np.array_equal(R, R.T)


def test_rank_one_coefficient_can_use_alpha_w():
    prior = prior_from_overrides(2, rank_one_coefficient_uses="alpha_w")
    assert prior.rank_one_alpha == prior.alpha_w == 4.0
    assert rank_one_coefficient(10, 4.0) == pytest.approx(40.0 / 14.0)


def test_posterior_dimension_mismatch():
    stats = sufficient_stats(gaussian_data(5, 3))
    with pytest.raises(DimensionMismatch):
        posterior_matrix(stats, default_prior(2))


@pytest.mark.parametrize("n,alpha_w,t", [(1, 3.0, 0.5), (3, 5.0, 0.5), (7, 9.0, 0.5)])
def test_default_prior(n, alpha_w, t):
    prior = default_prior(n)
    assert prior.alpha_mu == 1.0
    assert prior.alpha_w == alpha_w
    assert prior.nu == tuple([0.0] * n)
    assert prior.t_scale() == t
    assert prior.mode is ScoreMode.BGE
    assert prior.rank_one_coefficient_uses == "alpha_mu"


def test_prior_validation_messages():
    with pytest.raises(ValidationError, match="alpha_w must be > n - 1"):
        prior_from_overrides(3, alpha_w=2.0, t_scale=1.0)
    with pytest.raises(ValidationError, match="alpha_mu must be > 0"):
        prior_from_overrides(2, alpha_mu=0.0, t_scale=1.0)
    with pytest.raises(ValidationError, match="T must be symmetric positive definite"):
        PriorConfig(alpha_mu=1.0, alpha_w=4.0, nu=(0.0, 0.0), T=((1.0, 2.0), (2.0, 1.0)))


def test_prior_overrides():
    prior = prior_from_overrides(3, alpha_mu=2.0, alpha_w=10.0, nu=[1.5], mode="hg95")
    assert prior.nu == (1.5, 1.5, 1.5)
    assert prior.t_scale() == pytest.approx(2.0 * (10.0 - 4.0) / 3.0)
    assert prior.mode is ScoreMode.HG95
    assert math.isclose(prior_from_overrides(3, t_scale=2.0).t_scale(), 2.0)
