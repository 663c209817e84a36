from scipy.special import gammaln

from bgescore.models.prior import ScoreMode
from bgescore.scoring.core import LocalScorer
from bgescore.utils.factories.scorer_factory import ScorerFactory


@ScorerFactory.register()
class BgeScorer(LocalScorer):
    """The corrected score: subset exponents and gamma arguments depend on l = |Y|."""
    mode = ScoreMode.BGE

    def dof_shift(self, k: int) -> float:
        return k - self.n

    def gamma_ratio(self, l: int) -> float:
        shifted = self.alpha_w - self.n + l + 1
        return float(gammaln((self.N + shifted) / 2.0) - gammaln(shifted / 2.0))
