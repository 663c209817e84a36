"""
Growth of the bge - hg95 local-score gap with the sample size.

For a fixed node with l parents, delta(l, N) = bge - hg95 is measured on
nested prefixes of one simulated dataset and regressed on ln N. The same
gap is also measured after rescaling the data by a constant factor s; its
change per unit ln s approaches n - 2l - 1 as the scatter dominates T.

The gamma-ratio part of the gap (the l-dependent constants alone, without
the determinant terms) is regressed on ln N as well. Its slope rises by
one per parent, which is where the legacy penalty of order N^l lives; in
the full gap the determinant terms cancel that growth.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from bgescore import create_context
from bgescore.business_logic.simulation import random_weights, sample_gaussian_data
from bgescore.models.dag import Dag
from bgescore.models.dataset import Dataset
from bgescore.models.prior import PriorConfig, ScoreMode
from bgescore.scoring.dag_score import local_log_score

logger = logging.getLogger(__name__)

SCALE_FACTOR = 10.0


@dataclass
class BiasStudyResult:
    n: int
    sample_sizes: List[int]
    deltas: Dict[int, List[float]] = field(default_factory=dict)          # l -> delta per sample size
    slopes: Dict[int, float] = field(default_factory=dict)                # l -> d(delta)/d(ln N)
    scale_sensitivity: Dict[int, float] = field(default_factory=dict)     # l -> d(delta)/d(ln s)
    gamma_ratio_gaps: Dict[int, List[float]] = field(default_factory=dict)
    gamma_ratio_slopes: Dict[int, float] = field(default_factory=dict)    # l -> d(gamma gap)/d(ln N)

    @staticmethod
    def expected_scale_sensitivity(n: int, l: int) -> int:
        return n - 2 * l - 1


def study_graph(n: int, parents_max: int) -> Dag:
    """The target node n-1 receives parents 0..parents_max-1; the rest stay independent."""
    return Dag.from_edges(n, [(p, n - 1) for p in range(parents_max)])


def local_gap(data: Dataset, node: int, parents: tuple, prior: Optional[PriorConfig]) -> float:
    return local_gaps(data, node, parents, prior)[0]


def local_gaps(data: Dataset, node: int, parents: tuple,
               prior: Optional[PriorConfig]) -> Tuple[float, float]:
    """(full local-score gap, gamma-ratio constant gap) between bge and hg95."""
    ctx = create_context(data, prior)
    bge = local_log_score(node, parents, ctx, ScoreMode.BGE).value
    hg95 = local_log_score(node, parents, ctx, ScoreMode.HG95).value
    l = len(parents)
    constant_gap = float(ctx.constant_table(ScoreMode.BGE)[l] - ctx.constant_table(ScoreMode.HG95)[l])
    return bge - hg95, constant_gap


def bias_study(n: int, parents_max: int, sample_sizes: Sequence[int], seed: int = 0,
               prior: Optional[PriorConfig] = None, noise_sd: float = 1.0) -> BiasStudyResult:
    if not 0 <= parents_max <= n - 1:
        raise ValueError(f"parents_max must be in [0, {n - 1}], got {parents_max}")
    sizes = sorted(int(N) for N in sample_sizes)
    if len(sizes) < 2 or sizes[0] < 1:
        raise ValueError(f"Need at least two positive sample sizes, got {list(sample_sizes)}")

    dag = study_graph(n, parents_max)
    weights = random_weights(dag, seed)
    full = sample_gaussian_data(dag, weights, noise_sd, sizes[-1], seed)
    scaled = Dataset(values=full.values * SCALE_FACTOR, names=full.names)

    node = n - 1
    result = BiasStudyResult(n=n, sample_sizes=sizes)
    log_sizes = np.log(sizes)
    for l in range(parents_max + 1):
        parents = tuple(range(l))
        gaps = [local_gaps(full.head(N), node, parents, prior) for N in sizes]
        deltas = [gap for gap, _ in gaps]
        result.deltas[l] = deltas
        result.gamma_ratio_gaps[l] = [constant for _, constant in gaps]
        result.slopes[l] = float(np.polyfit(log_sizes, deltas, 1)[0])
        result.gamma_ratio_slopes[l] = float(np.polyfit(log_sizes, result.gamma_ratio_gaps[l], 1)[0])
        shifted = local_gap(scaled, node, parents, prior)
        result.scale_sensitivity[l] = (shifted - deltas[-1]) / math.log(SCALE_FACTOR)
        logger.debug("[BiasStudy] l=%d slope %.4f gamma-ratio slope %.4f scale sensitivity %.4f",
                     l, result.slopes[l], result.gamma_ratio_slopes[l], result.scale_sensitivity[l])

    return result
