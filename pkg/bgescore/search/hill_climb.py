"""
Greedy hill-climbing over DAGs with incremental scoring.

Every candidate move is scored with score_delta, so a step re-evaluates only
the families the move touches; all restarts share one ScoreCache.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from bgescore.business_logic.graph import is_acyclic
from bgescore.business_logic.simulation import random_dag
from bgescore.models.dag import Dag, Move
from bgescore.models.prior import ScoreMode
from bgescore.models.search_config import SearchConfig
from bgescore.scoring.cache import ScoreCache
from bgescore.scoring.context import ScoreContext
from bgescore.scoring.dag_score import dag_log_score, score_delta
from bgescore.search.moves import legal_moves
from bgescore.search.sinks.records import RecordKind, TraceRecord
from bgescore.utils.errors import CyclicGraph

logger = logging.getLogger(__name__)


@dataclass
class HillClimbResult:
    dag: Dag
    log_score: float
    trace: List[TraceRecord] = field(default_factory=list)
    restart: int = 0
    iterations: int = 0
    moves: List[Move] = field(default_factory=list)


def restart_seeds(cfg: SearchConfig) -> List[int]:
    rng = np.random.default_rng(cfg.seed)
    return [int(s) for s in rng.integers(0, 2 ** 32, size=cfg.restarts)]


def climb(ctx: ScoreContext, cfg: SearchConfig, start: Dag, cache: ScoreCache,
          mode: ScoreMode, restart: int = 0) -> HillClimbResult:
    """One greedy ascent from start; stops when no move improves by more than the threshold."""
    dag = start
    score = dag_log_score(dag, ctx, cache, mode)
    trace = [TraceRecord(0, score, RecordKind.START, metadata={"restart": restart})]

    moves: List[Move] = []
    iteration = 0
    while iteration < cfg.max_iterations:
        best_move: Optional[Move] = None
        best_delta = cfg.improvement_threshold
        for move in legal_moves(dag, cfg.max_parents):
            delta = score_delta(dag, move, ctx, cache, mode, checked=True)
            if delta > best_delta:
                best_move, best_delta = move, delta
        if best_move is None:
            break

        dag = best_move.apply(dag)
        moves.append(best_move)
        score += best_delta
        iteration += 1
        if logger.isEnabledFor(logging.DEBUG) and not is_acyclic(dag):
            raise CyclicGraph(f"Hill climbing produced a cycle after {best_move.describe()}")
        trace.append(TraceRecord(
            iteration, score, RecordKind.MOVE,
            move=best_move.describe(dag.labels),
            metadata={"restart": restart},
        ))

    # exact total rather than the running sum of deltas
    score = dag_log_score(dag, ctx, cache, mode)
    logger.debug("[HillClimb] restart %d stopped after %d moves at %.6f", restart, iteration, score)
    return HillClimbResult(dag=dag, log_score=score, trace=trace, restart=restart,
                           iterations=iteration, moves=moves)


def hill_climb(ctx: ScoreContext, cfg: SearchConfig, cache: Optional[ScoreCache] = None,
               mode: Optional[ScoreMode] = None, start: Optional[Dag] = None) -> HillClimbResult:
    """
    Best result over cfg.restarts ascents. Restart 0 starts from `start`
    (the empty graph by default); later restarts start from seeded random
    graphs. Ties between restarts go to the lower restart index.
    """
    cache = cache if cache is not None else ScoreCache()
    mode = ScoreMode(mode or ctx.mode)
    first = start if start is not None else Dag.empty(ctx.n)

    starts = [first]
    for seed in restart_seeds(cfg)[1:]:
        starts.append(random_dag(ctx.n, cfg.max_parents, cfg.start_edge_prob, seed, first.names))

    logger.info("[HillClimb] %d restart(s), %d worker(s), mode %s", len(starts), cfg.workers, mode.value)
    if cfg.workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(
                lambda item: climb(ctx, cfg, item[1], cache, mode, item[0]),
                enumerate(starts),
            ))
    else:
        results = [climb(ctx, cfg, dag, cache, mode, i) for i, dag in enumerate(starts)]

    best = results[0]
    for result in results[1:]:
        if result.log_score > best.log_score:
            best = result

    best.trace = [record for result in results for record in result.trace]
    logger.info("[HillClimb] best score %.6f from restart %d", best.log_score, best.restart)
    cache.log_stats()
    return best
