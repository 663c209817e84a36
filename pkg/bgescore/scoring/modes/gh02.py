from bgescore.business_logic.linalg import IndexSet, logdet_principal
from bgescore.models.prior import ScoreMode
from bgescore.scoring.modes.bge import BgeScorer
from bgescore.utils.factories.scorer_factory import ScorerFactory


@ScorerFactory.register()
class Gh02Scorer(BgeScorer):
    """
    bge exponents with every selection A_YY replaced by ((A^-1)_YY)^-1.
    ln|((A^-1)_YY)^-1| = -ln|(A^-1)_YY|, so only the two inverses are kept.
    """
    mode = ScoreMode.GH02

    def __init__(self, ctx):
        super().__init__(ctx)
        self.T_inverse = ctx.prior_inverse()
        self.R_inverse = ctx.posterior_inverse()

    def logdet_T(self, indices: IndexSet) -> float:
        return -logdet_principal(self.T_inverse, indices)

    def logdet_R(self, indices: IndexSet) -> float:
        return -logdet_principal(self.R_inverse, indices)
