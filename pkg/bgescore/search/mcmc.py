"""
Metropolis-Hastings structure MCMC over DAGs.

The proposal picks uniformly among the legal single-edge moves of the current
graph, so the acceptance ratio carries the neighbourhood-size correction
|nbd(g)| / |nbd(g')| on top of the score and structure-prior differences.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from scipy.special import logsumexp

from bgescore.business_logic.graph import enumerate_dags, is_acyclic
from bgescore.business_logic.linalg import IndexSet
from bgescore.models.dag import Dag, Move
from bgescore.models.prior import ScoreMode
from bgescore.models.search_config import McmcConfig, StructurePrior
from bgescore.scoring.cache import ScoreCache
from bgescore.scoring.context import ScoreContext
from bgescore.scoring.dag_score import dag_log_score, score_delta
from bgescore.search.moves import edge_change, legal_moves
from bgescore.search.sinks.records import RecordKind, TraceRecord
from bgescore.utils.errors import CyclicGraph

logger = logging.getLogger(__name__)

DagKey = Tuple[IndexSet, ...]


@dataclass(frozen=True)
class McmcSample:
    dag: Dag
    log_score: float
    iteration: int

    def to_record(self) -> TraceRecord:
        edges = ";".join(f"{u}->{v}" for u, v in self.dag.edges())
        return TraceRecord(self.iteration, self.log_score, RecordKind.SAMPLE, metadata={"edges": edges})


def acceptance_log_ratio(delta: float, prior_delta: float, nbd_size: int, new_nbd_size: int) -> float:
    """ln of p(d|g')p(g') q(g|g') / (p(d|g)p(g) q(g'|g)) with q uniform on each neighbourhood."""
    return delta + prior_delta + math.log(nbd_size) - math.log(new_nbd_size)


def acceptance_probability(log_ratio: float) -> float:
    return 1.0 if log_ratio >= 0 else math.exp(log_ratio)


class StructureSampler:
    """
    One chain. Only the current graph's move list is kept; the proposal's
    list is built per step and adopted when the move is accepted.
    """

    def __init__(self, ctx: ScoreContext, cfg: McmcConfig, cache: Optional[ScoreCache] = None,
                 mode: Optional[ScoreMode] = None, start: Optional[Dag] = None):
        self.ctx = ctx
        self.cfg = cfg
        self.cache = cache if cache is not None else ScoreCache()
        self.mode = ScoreMode(mode or ctx.mode)
        self.rng = np.random.default_rng(cfg.seed)
        self.dag = start if start is not None else Dag.empty(ctx.n)
        self.log_score = dag_log_score(self.dag, ctx, self.cache, self.mode)
        self._moves: List[Move] = legal_moves(self.dag, cfg.max_parents)
        self.proposed = 0
        self.accepted = 0

    def neighbourhood(self, dag: Dag) -> List[Move]:
        if dag.parents == self.dag.parents:
            return self._moves
        return legal_moves(dag, self.cfg.max_parents)

    def step(self) -> bool:
        """One proposal; returns whether it was accepted."""
        moves = self._moves
        if not moves:
            return False
        move = moves[int(self.rng.integers(len(moves)))]
        proposal = move.apply(self.dag)

        delta = score_delta(self.dag, move, self.ctx, self.cache, self.mode, checked=True)
        prior_delta = self.cfg.structure_prior.log_prior_delta(edge_change(move))
        proposal_moves = legal_moves(proposal, self.cfg.max_parents)
        log_ratio = acceptance_log_ratio(delta, prior_delta, len(moves), len(proposal_moves))

        self.proposed += 1
        if self.rng.random() < acceptance_probability(log_ratio):
            self.dag = proposal
            self._moves = proposal_moves
            self.log_score += delta
            self.accepted += 1
            if logger.isEnabledFor(logging.DEBUG) and not is_acyclic(self.dag):
                raise CyclicGraph(f"MCMC produced a cycle after {move.describe()}")
            return True
        return False

    def run(self) -> List[McmcSample]:
        samples = []
        for iteration in range(1, self.cfg.iterations + 1):
            if self.step():
                # exact score of the new state from the cache
                self.log_score = dag_log_score(self.dag, self.ctx, self.cache, self.mode)
            past_burn_in = iteration - self.cfg.burn_in
            if past_burn_in > 0 and past_burn_in % self.cfg.thinning == 0:
                samples.append(McmcSample(self.dag, self.log_score, iteration))

        logger.info(
            "[MCMC] %d iterations, %d samples, acceptance rate %.3f",
            self.cfg.iterations, len(samples), self.acceptance_rate,
        )
        return samples

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.proposed if self.proposed else 0.0


def structure_mcmc(ctx: ScoreContext, cfg: McmcConfig, cache: Optional[ScoreCache] = None,
                   mode: Optional[ScoreMode] = None, start: Optional[Dag] = None) -> List[McmcSample]:
    return StructureSampler(ctx, cfg, cache, mode, start).run()


def dag_frequencies(samples: Iterable[McmcSample]) -> Dict[DagKey, float]:
    counts = Counter(sample.dag.parents for sample in samples)
    total = sum(counts.values())
    return {key: count / total for key, count in counts.items()}


def edge_frequencies(samples: Iterable[McmcSample], n: int) -> np.ndarray:
    """Posterior edge probabilities: entry [u, v] is the share of samples containing u -> v."""
    counts = np.zeros((n, n))
    total = 0
    for sample in samples:
        total += 1
        for u, v in sample.dag.edges():
            counts[u, v] += 1
    return counts / total if total else counts


def exact_posterior(ctx: ScoreContext, structure_prior: Optional[StructurePrior] = None,
                    max_parents: Optional[int] = None, mode: Optional[ScoreMode] = None,
                    cache: Optional[ScoreCache] = None) -> Dict[DagKey, float]:
    """Posterior over every DAG on ctx.n nodes by enumeration; only feasible for n <= 5."""
    structure_prior = structure_prior or StructurePrior()
    dags = [
        dag for dag in enumerate_dags(ctx.n)
        if max_parents is None or all(len(ps) <= max_parents for ps in dag.parents)
    ]
    log_posts = np.array([
        dag_log_score(dag, ctx, cache, mode) + structure_prior.log_prior_delta(dag.edge_count)
        for dag in dags
    ])
    probabilities = np.exp(log_posts - logsumexp(log_posts))
    return {dag.parents: float(p) for dag, p in zip(dags, probabilities)}


def total_variation(first: Dict[DagKey, float], second: Dict[DagKey, float]) -> float:
    keys = set(first) | set(second)
    return 0.5 * sum(abs(first.get(k, 0.0) - second.get(k, 0.0)) for k in keys)
