"""
Modular scoring: subset marginals, per-node local scores, whole-DAG scores
and incremental deltas for single-edge moves. All values are natural logs.
"""
from typing import Dict, Iterable, Optional

from bgescore.business_logic.graph import equivalence_classes, is_acyclic
from bgescore.business_logic.linalg import IndexSet, index_set
from bgescore.models.dag import Dag, EquivalenceSignature, Move, MoveKind
from bgescore.models.prior import ScoreMode
from bgescore.scoring.cache import LocalScore, ScoreCache
from bgescore.scoring.context import ScoreContext
from bgescore.utils.errors import CyclicGraph, DimensionMismatch, IllegalMove, InvalidFamily


def _check_indices(indices: IndexSet, ctx: ScoreContext) -> IndexSet:
    indices = index_set(indices)
    if any(i < 0 or i >= ctx.n for i in indices):
        raise IndexError(f"Indices {indices} out of range for {ctx.n} variables")
    return indices


def log_marginal_subset(indices: IndexSet, ctx: ScoreContext, mode: ScoreMode = ScoreMode.BGE) -> float:
    """ln p(d^Y); 0 for the empty set."""
    return ctx.scorer(mode).log_marginal_subset(_check_indices(indices, ctx))


def legacy_hg95_log_marginal_subset(indices: IndexSet, ctx: ScoreContext) -> float:
    return log_marginal_subset(indices, ctx, ScoreMode.HG95)


def local_log_score(node: int, parents: IndexSet, ctx: ScoreContext,
                    mode: Optional[ScoreMode] = None, naive: bool = False) -> LocalScore:
    """
    ln p(d^{Pa u {node}}) - ln p(d^{Pa}). The default path uses the single
    gamma-ratio form; naive=True takes the difference of two subset marginals.
    """
    parents = _check_indices(parents, ctx)
    if node in parents:
        raise InvalidFamily(f"Node {node} cannot be its own parent: {parents}")
    if not 0 <= node < ctx.n:
        raise IndexError(f"Node {node} out of range for {ctx.n} variables")
    mode = ScoreMode(mode or ctx.mode)
    scorer = ctx.scorer(mode)
    value = scorer.naive_local_score(node, parents) if naive else scorer.local_score(node, parents)
    return LocalScore(value=value, node=node, parents=parents, mode=mode)


def cached_local_score(node: int, parents: IndexSet, ctx: ScoreContext,
                       cache: Optional[ScoreCache], mode: ScoreMode) -> float:
    if cache is None:
        return local_log_score(node, parents, ctx, mode).value
    entry = cache.get_or_compute(
        (node, parents, mode),
        lambda: local_log_score(node, parents, ctx, mode),
    )
    return entry.value


def dag_log_score(dag: Dag, ctx: ScoreContext, cache: Optional[ScoreCache] = None,
                  mode: Optional[ScoreMode] = None) -> float:
    if dag.n != ctx.n:
        raise DimensionMismatch(f"DAG has {dag.n} nodes but the data has {ctx.n} variables")
    if not is_acyclic(dag):
        raise CyclicGraph("Cannot score a graph with a directed cycle")
    mode = ScoreMode(mode or ctx.mode)
    return sum(
        cached_local_score(node, parents, ctx, cache, mode)
        for node, parents in enumerate(dag.parents)
    )


def check_move(dag: Dag, move: Move) -> None:
    """Raises IllegalMove unless the move applies and leaves the graph acyclic."""
    u, v = move.u, move.v
    if u == v:
        raise IllegalMove(f"Self-loop {u}->{v}")
    if move.kind is MoveKind.ADD:
        if dag.adjacent(u, v):
            raise IllegalMove(f"Nodes {u} and {v} are already adjacent")
        if dag.has_path(v, u):
            raise IllegalMove(f"Adding {u}->{v} creates a cycle")
    elif move.kind is MoveKind.REMOVE:
        if not dag.has_edge(u, v):
            raise IllegalMove(f"Edge {u}->{v} not present")
    else:
        if not dag.has_edge(u, v):
            raise IllegalMove(f"Edge {u}->{v} not present")
        if dag.has_path(u, v, skip_edge=(u, v)):
            raise IllegalMove(f"Reversing {u}->{v} creates a cycle")


def score_delta(dag: Dag, move: Move, ctx: ScoreContext, cache: Optional[ScoreCache] = None,
                mode: Optional[ScoreMode] = None, checked: bool = False) -> float:
    """
    new_score - old_score, touching only the families of the nodes whose
    parent sets change (the child for add/remove, both ends for reversal).
    """
    if not checked:
        check_move(dag, move)
    mode = ScoreMode(mode or ctx.mode)
    u, v = move.u, move.v
    old_v = dag.parents[v]
    delta = 0.0
    if move.kind is MoveKind.ADD:
        new_v = index_set(old_v + (u,))
    else:
        new_v = tuple(p for p in old_v if p != u)
    delta += cached_local_score(v, new_v, ctx, cache, mode) - cached_local_score(v, old_v, ctx, cache, mode)

    if move.kind is MoveKind.REVERSE:
        old_u = dag.parents[u]
        new_u = index_set(old_u + (v,))
        delta += cached_local_score(u, new_u, ctx, cache, mode) - cached_local_score(u, old_u, ctx, cache, mode)
    return delta


def equivalence_spread(dags: Iterable[Dag], ctx: ScoreContext, mode: Optional[ScoreMode] = None,
                       cache: Optional[ScoreCache] = None) -> Dict[EquivalenceSignature, float]:
    """Per equivalence class, max - min of the total scores of its members."""
    spreads = {}
    for signature, members in equivalence_classes(dags).items():
        scores = [dag_log_score(dag, ctx, cache, mode) for dag in members]
        spreads[signature] = max(scores) - min(scores)
    return spreads
