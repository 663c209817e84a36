import math

import numpy as np
import pytest
from pydantic import ValidationError

from bgescore import create_context
from bgescore.business_logic.graph import enumerate_dags
from bgescore.models.dag import Dag
from bgescore.models.search_config import McmcConfig, StructurePrior
from bgescore.scoring.cache import ScoreCache
from bgescore.scoring.dag_score import dag_log_score, score_delta
from bgescore.search.mcmc import (
    StructureSampler,
    acceptance_log_ratio,
    acceptance_probability,
    dag_frequencies,
    edge_frequencies,
    exact_posterior,
    structure_mcmc,
    total_variation,
)
from bgescore.search.moves import edge_change, legal_moves
from bgescore.search.sinks.records import RecordKind
from tests.helpers import chain_data, gaussian_data


@pytest.fixture
def small_ctx():
    return create_context(chain_data(30, seed=5, weight=0.8))


def test_acceptance_probability():
    assert acceptance_probability(0.0) == 1.0
    assert acceptance_probability(3.0) == 1.0
    assert acceptance_probability(-1.0) == pytest.approx(math.exp(-1.0))
    assert acceptance_log_ratio(0.0, 0.0, 5, 5) == 0.0
    assert acceptance_log_ratio(1.0, -0.5, 4, 2) == pytest.approx(0.5 + math.log(2.0))


def test_mcmc_config_validation():
    with pytest.raises(ValidationError, match="burn_in"):
        McmcConfig(iterations=100, burn_in=100)
    with pytest.raises(ValidationError):
        McmcConfig(iterations=100, burn_in=-1)
    with pytest.raises(ValidationError):
        McmcConfig(thinning=0)
    assert McmcConfig(structure_prior="uniform").structure_prior == StructurePrior()
    assert McmcConfig(structure_prior=2).structure_prior == StructurePrior(kind="per_edge_penalty", gamma=2.0)


def test_structure_prior_deltas():
    assert StructurePrior().log_prior_delta(1) == 0.0
    penalty = StructurePrior(kind="per_edge_penalty", gamma=1.5)
    assert penalty.log_prior_delta(1) == -1.5
    assert penalty.log_prior_delta(-1) == 1.5
    assert penalty.log_prior_delta(0) == 0.0


def test_sample_count_follows_burn_in_and_thinning(small_ctx):
    samples = structure_mcmc(small_ctx, McmcConfig(iterations=100, burn_in=10, thinning=3))
    assert len(samples) == 30
    assert [s.iteration for s in samples[:3]] == [13, 16, 19]
    assert samples[-1].iteration == 100


def test_chain_is_reproducible(small_ctx):
    cfg = McmcConfig(iterations=300, burn_in=50, seed=4)
    first = structure_mcmc(small_ctx, cfg)
    second = structure_mcmc(small_ctx, cfg)
    assert [s.dag for s in first] == [s.dag for s in second]
    assert [s.log_score for s in first] == [s.log_score for s in second]


def test_sample_scores_and_records(small_ctx):
    samples = structure_mcmc(small_ctx, McmcConfig(iterations=200, burn_in=0, seed=1))
    for sample in samples[::20]:
        assert sample.log_score == pytest.approx(dag_log_score(sample.dag, small_ctx), abs=1e-10)
    record = samples[0].to_record()
    assert record.kind is RecordKind.SAMPLE
    assert record.iteration == samples[0].iteration


def test_max_parents_bounds_every_sample(small_ctx):
    samples = structure_mcmc(small_ctx, McmcConfig(iterations=500, burn_in=0, max_parents=1, seed=2))
    assert all(len(ps) <= 1 for s in samples for ps in s.dag.parents)


def test_frequencies(small_ctx):
    samples = structure_mcmc(small_ctx, McmcConfig(iterations=400, burn_in=100, seed=3))
    assert sum(dag_frequencies(samples).values()) == pytest.approx(1.0)
    edges = edge_frequencies(samples, 3)
    assert edges.shape == (3, 3)
    assert np.all(np.diag(edges) == 0)
    assert np.all((edges >= 0) & (edges <= 1))
    # an edge and its reverse never coexist
    assert np.all(edges + edges.T <= 1 + 1e-12)


def test_exact_posterior_is_normalized(small_ctx):
    posterior = exact_posterior(small_ctx)
    assert len(posterior) == 25
    assert sum(posterior.values()) == pytest.approx(1.0, abs=1e-12)
    limited = exact_posterior(small_ctx, max_parents=1)
    assert all(len(ps) <= 1 for key in limited for ps in key)
    assert total_variation(posterior, posterior) == 0.0


def test_sampler_keeps_only_the_current_move_list():
    ctx = create_context(gaussian_data(50, 8, seed=2))
    sampler = StructureSampler(ctx, McmcConfig(iterations=2000, burn_in=0, seed=6))
    sampler.run()
    assert sampler.accepted > 0
    current = sampler.neighbourhood(sampler.dag)
    assert current is sampler.neighbourhood(sampler.dag)
    assert current == legal_moves(sampler.dag)
    other = current[0].apply(sampler.dag)
    assert sampler.neighbourhood(other) is not sampler.neighbourhood(other)
    assert not any(isinstance(value, dict) for value in vars(sampler).values())


@pytest.mark.parametrize("structure_prior", [StructurePrior(), StructurePrior(kind="per_edge_penalty", gamma=1.0)])
def test_kernel_satisfies_detailed_balance(small_ctx, structure_prior):
    cache = ScoreCache()
    posterior = exact_posterior(small_ctx, structure_prior, cache=cache)
    sampler = StructureSampler(small_ctx, McmcConfig(structure_prior=structure_prior), cache)
    for dag in enumerate_dags(3):
        moves = sampler.neighbourhood(dag)
        for move in moves:
            target = move.apply(dag)
            back = sampler.neighbourhood(target)
            delta = score_delta(dag, move, small_ctx, cache)
            prior_delta = structure_prior.log_prior_delta(edge_change(move))
            forward = posterior[dag.parents] / len(moves) * acceptance_probability(
                acceptance_log_ratio(delta, prior_delta, len(moves), len(back)))
            backward = posterior[target.parents] / len(back) * acceptance_probability(
                acceptance_log_ratio(-delta, -prior_delta, len(back), len(moves)))
            assert forward == pytest.approx(backward, rel=1e-9)


@pytest.mark.slow
@pytest.mark.parametrize("start", [None, Dag.from_edges(3, [(0, 1), (0, 2), (1, 2)])])
def test_sampled_distribution_matches_exact_posterior(small_ctx, start):
    exact = exact_posterior(small_ctx)
    samples = structure_mcmc(small_ctx, McmcConfig(iterations=100000, burn_in=2000, seed=11), start=start)
    assert total_variation(dag_frequencies(samples), exact) < 0.05


@pytest.mark.slow
def test_sampled_edge_frequencies_match_exact_marginals(small_ctx):
    exact = exact_posterior(small_ctx)
    expected = np.zeros((3, 3))
    for parents, probability in exact.items():
        for u, v in Dag(parents=parents).edges():
            expected[u, v] += probability
    samples = structure_mcmc(small_ctx, McmcConfig(iterations=100000, burn_in=2000, seed=12))
    assert np.max(np.abs(edge_frequencies(samples, 3) - expected)) < 0.05
