import numpy as np
from scipy.special import gammaln

from bgescore.models.prior import ScoreMode
from bgescore.scoring.core import LocalScorer
from bgescore.utils.factories.scorer_factory import ScorerFactory


@ScorerFactory.register()
class Hg95Scorer(LocalScorer):
    """
    The legacy subset marginal: exponents a_w/2 and (N+a_w)/2 and gamma
    arguments that lose their l-dependence. With
    prior.hg95_sample_variance, R is built from S_N/(N-1).
    """
    mode = ScoreMode.HG95

    def dof_shift(self, k: int) -> float:
        return 0.0

    def gamma_ratio(self, l: int) -> float:
        return float(gammaln((self.N + self.alpha_w - l) / 2.0) - gammaln((self.alpha_w - l) / 2.0))

    def posterior_entries(self) -> np.ndarray:
        if self.ctx.prior.hg95_sample_variance:
            return self.ctx.sample_variance_posterior().entries
        return self.ctx.R.entries
