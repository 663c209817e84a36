"""
Shared structure of every scoring mode.

For a subset Y of size k a mode scores

    ln p(d^Y) = (k/2) ln(a_mu/(N+a_mu)) + ln G_k((N+a_w+s(k))/2) - ln G_k((a_w+s(k))/2)
                - (kN/2) ln(c) + ((a_w+s(k))/2) ln|T_Y| - ((N+a_w+s(k))/2) ln|R_Y|

where s(k) is the degrees-of-freedom shift of the mode and c is pi (2 pi
for gh94). The local score of a node is the ratio of the subset marginals
of its family and of its parents; the two multivariate gammas collapse to a
single ordinary gamma ratio supplied by gamma_ratio().
"""
import math
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Tuple

import numpy as np

from bgescore.business_logic.linalg import IndexSet, log_multigamma, logdet_principal
from bgescore.models.prior import ScoreMode

if TYPE_CHECKING:
    from bgescore.scoring.context import ScoreContext


class LocalScorer(ABC):
    mode: ScoreMode
    log_base = math.log(math.pi)

    def __init__(self, ctx: "ScoreContext"):
        self.ctx = ctx
        self.N = ctx.N
        self.n = ctx.n
        self.alpha_mu = ctx.prior.alpha_mu
        self.alpha_w = ctx.prior.alpha_w
        self.T = np.array(ctx.prior.T, dtype=float)
        self.R = self.posterior_entries()
        self.log_shrink = math.log(self.alpha_mu / (self.N + self.alpha_mu))
        # subset constants for k = 0..n, local constants for l = 0..n-1 parents
        self.subset_constants = np.array([self._subset_constant(k) for k in range(self.n + 1)])
        self.local_constants = np.array([self._local_constant(l) for l in range(self.n)])
        if not (np.all(np.isfinite(self.subset_constants)) and np.all(np.isfinite(self.local_constants))):
            raise ValueError(f"Non-finite {self.mode.value} constant table for n={self.n}, N={self.N}")

    @abstractmethod
    def dof_shift(self, k: int) -> float:
        """Shift s(k) added to alpha_w in the exponents for a subset of size k."""

    @abstractmethod
    def gamma_ratio(self, l: int) -> float:
        """ln of the ordinary gamma ratio left in the local score of a node with l parents."""

    def posterior_entries(self) -> np.ndarray:
        return self.ctx.R.entries

    def logdet_T(self, indices: IndexSet) -> float:
        return logdet_principal(self.T, indices)

    def logdet_R(self, indices: IndexSet) -> float:
        return logdet_principal(self.R, indices)

    def exponents(self, k: int) -> Tuple[float, float]:
        shifted = self.alpha_w + self.dof_shift(k)
        return shifted / 2.0, (self.N + shifted) / 2.0

    def _subset_constant(self, k: int) -> float:
        if k == 0:
            return 0.0
        shifted = self.alpha_w + self.dof_shift(k)
        return (
            (k / 2.0) * self.log_shrink
            + log_multigamma(k, self.N + shifted)
            - log_multigamma(k, shifted)
            - (k * self.N / 2.0) * self.log_base
        )

    def _local_constant(self, l: int) -> float:
        return 0.5 * self.log_shrink - (self.N / 2.0) * self.log_base + self.gamma_ratio(l)

    def log_marginal_subset(self, indices: IndexSet) -> float:
        if not indices:
            return 0.0
        k = len(indices)
        t_exp, r_exp = self.exponents(k)
        return (
            float(self.subset_constants[k])
            + t_exp * self.logdet_T(indices)
            - r_exp * self.logdet_R(indices)
        )

    def local_score(self, node: int, parents: IndexSet) -> float:
        l = len(parents)
        family = tuple(sorted(parents + (node,)))
        t_family, r_family = self.exponents(l + 1)
        value = (
            float(self.local_constants[l])
            + t_family * self.logdet_T(family)
            - r_family * self.logdet_R(family)
        )
        if parents:
            t_parents, r_parents = self.exponents(l)
            value += r_parents * self.logdet_R(parents) - t_parents * self.logdet_T(parents)
        return value

    def naive_local_score(self, node: int, parents: IndexSet) -> float:
        family = tuple(sorted(parents + (node,)))
        return self.log_marginal_subset(family) - self.log_marginal_subset(parents)
