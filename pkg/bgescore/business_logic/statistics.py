import math

import numpy as np

from bgescore.business_logic.linalg import SpdMatrix
from bgescore.models.dataset import Dataset, PosteriorMatrix, SuffStats
from bgescore.models.prior import PriorConfig
from bgescore.utils.errors import DimensionMismatch


def sufficient_stats(data: Dataset) -> SuffStats:
    """
    Two-pass statistics: the mean first, then the scatter of the deviations.
    Sums are correctly rounded (math.fsum), so the result does not depend on
    the order of the observations. S_N may be singular (N < n); only R is
    ever factorized.
    """
    values = data.values
    n = data.n
    mean = np.array([math.fsum(values[:, j]) / data.N for j in range(n)])
    deviations = values - mean
    scatter = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            scatter[i, j] = scatter[j, i] = math.fsum(deviations[:, i] * deviations[:, j])
    return SuffStats(mean=mean, scatter=scatter, N=data.N)


def rank_one_coefficient(N: int, alpha: float) -> float:
    return N * alpha / (N + alpha)


def posterior_matrix(stats: SuffStats, prior: PriorConfig, sample_variance: bool = False) -> PosteriorMatrix:
    """
    R = T + S_N + N a / (N + a) (nu - mean)(nu - mean)^T with a chosen by
    prior.rank_one_coefficient_uses. With sample_variance, S_N is replaced by
    S_N / (N - 1) (the legacy hg95 definition; N = 1 keeps S_N).
    """
    if stats.n != prior.n:
        raise DimensionMismatch(
            f"Statistics have {stats.n} variables but the prior has {prior.n}"
        )
    scatter = stats.scatter
    if sample_variance and stats.N > 1:
        scatter = scatter / (stats.N - 1)

    offset = prior.nu_vector - stats.mean
    c = rank_one_coefficient(stats.N, prior.rank_one_alpha)
    R = np.array(prior.T, dtype=float) + scatter + c * np.outer(offset, offset)
    R = (R + R.T) / 2.0
    return PosteriorMatrix(R=SpdMatrix(R))
