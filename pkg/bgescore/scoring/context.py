import threading
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Optional

import numpy as np

from bgescore.business_logic.linalg import SpdMatrix, spd_inverse
from bgescore.business_logic.statistics import posterior_matrix
from bgescore.models.dataset import PosteriorMatrix, SuffStats
from bgescore.models.prior import PriorConfig, ScoreMode
from bgescore.utils.errors import DimensionMismatch
from bgescore.utils.factories.scorer_factory import ScorerFactory


@dataclass(frozen=True, eq=False)
class ScoreContext:
    """
    Everything a local score needs for one (dataset, prior) pair. The
    per-mode scorers hold the family-independent constant tables and are
    built once, on first use.
    """
    prior: PriorConfig
    stats: SuffStats
    posterior: PosteriorMatrix
    _scorers: Dict[ScoreMode, object] = field(default_factory=dict, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    def __post_init__(self):
        n = self.prior.n
        if self.stats.n != n or self.posterior.R.dim != n:
            raise DimensionMismatch(
                f"Context dimensions disagree: prior {n}, statistics {self.stats.n}, "
                f"R {self.posterior.R.dim}"
            )

    @property
    def N(self) -> int:
        return self.stats.N

    @property
    def n(self) -> int:
        return self.prior.n

    @property
    def R(self) -> SpdMatrix:
        return self.posterior.R

    @property
    def mode(self) -> ScoreMode:
        return self.prior.mode

    def scorer(self, mode: Optional[ScoreMode] = None):
        mode = ScoreMode(mode or self.prior.mode)
        scorer = self._scorers.get(mode)
        if scorer is None:
            scorer = ScorerFactory.create(mode.value, self)
            with self._lock:
                scorer = self._scorers.setdefault(mode, scorer)
        return scorer

    def constant_table(self, mode: Optional[ScoreMode] = None) -> np.ndarray:
        """Local-score constants indexed by the number of parents l."""
        return self.scorer(mode).local_constants

    def prior_inverse(self) -> np.ndarray:
        return self._prior_inverse

    def posterior_inverse(self) -> np.ndarray:
        return self._posterior_inverse

    def sample_variance_posterior(self) -> SpdMatrix:
        return self._sample_variance_posterior.R

    @cached_property
    def _prior_inverse(self) -> np.ndarray:
        return spd_inverse(np.array(self.prior.T, dtype=float))

    @cached_property
    def _posterior_inverse(self) -> np.ndarray:
        return spd_inverse(self.R.entries)

    @cached_property
    def _sample_variance_posterior(self) -> PosteriorMatrix:
        return posterior_matrix(self.stats, self.prior, sample_variance=True)
