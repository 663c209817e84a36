from enum import Enum
from typing import Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from bgescore.business_logic.linalg import SpdMatrix
from bgescore.utils.errors import NotPositiveDefinite


class ScoreMode(str, Enum):
    BGE = "bge"
    HG95 = "hg95"
    GH02 = "gh02"
    GH94 = "gh94"


class PriorConfig(BaseModel):
    """
    Normal-Wishart hyperparameters plus the scoring mode.

    T is the Wishart parametric matrix (inverse of the scale matrix), nu the
    prior mean of mu, alpha_mu the precision multiplier of mu and alpha_w the
    Wishart degrees of freedom.
    """
    alpha_mu: float
    alpha_w: float
    nu: Tuple[float, ...]
    T: Tuple[Tuple[float, ...], ...]
    mode: ScoreMode = ScoreMode.BGE
    rank_one_coefficient_uses: Literal["alpha_mu", "alpha_w"] = "alpha_mu"
    # hg95 historically built R from the sample variance instead of S_N
    hg95_sample_variance: bool = False

    model_config = ConfigDict(
        extra="ignore",
        validate_default=True,
        frozen=True,
    )

    @field_validator("alpha_mu")
    @classmethod
    def validate_alpha_mu(cls, v: float) -> float:
        if not v > 0:
            raise ValueError(f"Configuration Error: alpha_mu must be > 0, got {v}")
        return v

    @model_validator(mode="after")
    def validate_dimensions(self) -> "PriorConfig":
        n = len(self.nu)
        if n < 1:
            raise ValueError("Configuration Error: nu must have at least one entry")
        if len(self.T) != n or any(len(row) != n for row in self.T):
            raise ValueError(
                f"Configuration Error: T must be {n}x{n} to match nu, "
                f"got {len(self.T)} rows"
            )
        if not self.alpha_w > n - 1:
            raise ValueError(
                f"Configuration Error: alpha_w must be > n - 1 = {n - 1}, got {self.alpha_w}"
            )
        try:
            SpdMatrix(np.array(self.T, dtype=float))
        except (NotPositiveDefinite, ValueError) as e:
            raise ValueError(f"Configuration Error: T must be symmetric positive definite ({e})")
        return self

    @property
    def n(self) -> int:
        return len(self.nu)

    @property
    def nu_vector(self) -> np.ndarray:
        return np.array(self.nu, dtype=float)

    @property
    def T_matrix(self) -> SpdMatrix:
        return SpdMatrix(np.array(self.T, dtype=float))

    @property
    def rank_one_alpha(self) -> float:
        return self.alpha_mu if self.rank_one_coefficient_uses == "alpha_mu" else self.alpha_w

    def t_scale(self) -> Optional[float]:
        """The scalar t when T == t * I, otherwise None."""
        matrix = np.array(self.T, dtype=float)
        t = matrix[0, 0]
        return float(t) if np.array_equal(matrix, t * np.eye(self.n)) else None


def default_t_scale(n: int, alpha_mu: float, alpha_w: float) -> float:
    return alpha_mu * (alpha_w - n - 1) / (alpha_mu + 1)


def default_prior(n: int) -> PriorConfig:
    """alpha_mu = 1, alpha_w = n + 2, nu = 0, T = t * I with t = alpha_mu (alpha_w - n - 1) / (alpha_mu + 1)."""
    if n < 1:
        raise ValueError(f"Configuration Error: n must be >= 1, got {n}")
    alpha_mu = 1.0
    alpha_w = float(n + 2)
    t = default_t_scale(n, alpha_mu, alpha_w)
    return PriorConfig(
        alpha_mu=alpha_mu,
        alpha_w=alpha_w,
        nu=tuple([0.0] * n),
        T=_scaled_identity(n, t),
    )


def prior_from_overrides(
        n: int,
        alpha_mu: Optional[float] = None,
        alpha_w: Optional[float] = None,
        t_scale: Optional[float] = None,
        nu: Optional[Sequence[float]] = None,
        mode: Optional[str] = None,
        rank_one_coefficient_uses: Optional[str] = None,
        hg95_sample_variance: Optional[bool] = None,
) -> PriorConfig:
    """
    default_prior(n) with overrides applied. When t_scale is not given the
    default formula is re-evaluated with the (possibly overridden) alphas.
    A scalar nu is broadcast to all n coordinates.
    """
    base = default_prior(n)
    a_mu = base.alpha_mu if alpha_mu is None else float(alpha_mu)
    a_w = base.alpha_w if alpha_w is None else float(alpha_w)
    t = default_t_scale(n, a_mu, a_w) if t_scale is None else float(t_scale)

    if nu is None:
        nu_values = base.nu
    else:
        nu_values = (float(nu),) if isinstance(nu, (int, float)) else tuple(float(v) for v in nu)
        if len(nu_values) == 1 and n > 1:
            nu_values = nu_values * n

    return PriorConfig(
        alpha_mu=a_mu,
        alpha_w=a_w,
        nu=nu_values,
        T=_scaled_identity(n, t),
        mode=mode or base.mode,
        rank_one_coefficient_uses=rank_one_coefficient_uses or base.rank_one_coefficient_uses,
        hg95_sample_variance=bool(hg95_sample_variance),
    )


def _scaled_identity(n: int, t: float) -> Tuple[Tuple[float, ...], ...]:
    return tuple(tuple(t if i == j else 0.0 for j in range(n)) for i in range(n))
