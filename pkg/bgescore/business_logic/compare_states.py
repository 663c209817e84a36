from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from bgescore.models.dag import Dag
from bgescore.models.prior import ScoreMode
from bgescore.scoring.cache import ScoreCache
from bgescore.scoring.context import ScoreContext
from bgescore.scoring.dag_score import cached_local_score, dag_log_score

DEFAULT_MODES = (ScoreMode.BGE, ScoreMode.HG95, ScoreMode.GH02)


@dataclass
class ModeComparison:
    """
    Local scores of one DAG under several modes.

    Attributes:
        local: node -> mode -> local score
        totals: mode -> total score
        differences: node -> "a-b" -> local score difference for each mode pair
        by_parent_count: l -> mean bge - hg95 difference over the nodes with l parents
    """
    modes: Tuple[ScoreMode, ...]
    local: Dict[int, Dict[ScoreMode, float]] = field(default_factory=dict)
    totals: Dict[ScoreMode, float] = field(default_factory=dict)
    differences: Dict[int, Dict[str, float]] = field(default_factory=dict)
    by_parent_count: Dict[int, float] = field(default_factory=dict)


def pair_label(first: ScoreMode, second: ScoreMode) -> str:
    return f"{first.value}-{second.value}"


def compare_modes(dag: Dag, ctx: ScoreContext, modes: Sequence[ScoreMode] = DEFAULT_MODES,
                  cache: Optional[ScoreCache] = None) -> ModeComparison:
    modes = tuple(ScoreMode(m) for m in modes)
    comparison = ModeComparison(modes=modes)

    for mode in modes:
        comparison.totals[mode] = dag_log_score(dag, ctx, cache, mode)

    for node, parents in enumerate(dag.parents):
        scores = {mode: cached_local_score(node, parents, ctx, cache, mode) for mode in modes}
        comparison.local[node] = scores
        comparison.differences[node] = {
            pair_label(a, b): scores[a] - scores[b] for a, b in combinations(modes, 2)
        }

    if ScoreMode.BGE in modes and ScoreMode.HG95 in modes:
        grouped: Dict[int, List[float]] = defaultdict(list)
        for node, parents in enumerate(dag.parents):
            scores = comparison.local[node]
            grouped[len(parents)].append(scores[ScoreMode.BGE] - scores[ScoreMode.HG95])
        comparison.by_parent_count = {l: float(np.mean(v)) for l, v in sorted(grouped.items())}

    return comparison
