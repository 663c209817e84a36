import math

import numpy as np

from bgescore.models.prior import ScoreMode
from bgescore.scoring.modes.hg95 import Hg95Scorer
from bgescore.utils.factories.scorer_factory import ScorerFactory


@ScorerFactory.register()
class Gh94Scorer(Hg95Scorer):
    """hg95 with pi replaced by 2 pi and the scatter S_N always used in R."""
    mode = ScoreMode.GH94
    log_base = math.log(2.0 * math.pi)

    def posterior_entries(self) -> np.ndarray:
        return self.ctx.R.entries
