from typing import Optional

from .business_logic.statistics import posterior_matrix, sufficient_stats
from .models.dataset import Dataset
from .models.prior import PriorConfig, default_prior
from .scoring.context import ScoreContext
from .utils.errors import DimensionMismatch


def create_context(dataset: Dataset, prior: Optional[PriorConfig] = None) -> ScoreContext:
    """Statistics, R and the per-mode constant tables for one (dataset, prior) pair."""
    if prior is None:
        prior = default_prior(dataset.n)
    if prior.n != dataset.n:
        raise DimensionMismatch(
            f"Prior has {prior.n} variables but the dataset has {dataset.n}"
        )

    stats = sufficient_stats(dataset)
    ctx = ScoreContext(prior=prior, stats=stats, posterior=posterior_matrix(stats, prior))

    # build the default mode's tables eagerly so a bad prior fails here
    ctx.scorer()
    return ctx
