from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, field_validator

from bgescore.models.search_config import McmcConfig, SearchConfig


class RunConfig(BaseModel):
    """
    Sections of a run configuration file. The prior section stays a plain
    mapping of overrides until the dataset dimension is known.
    """
    prior: Dict[str, Any] = {}
    search: SearchConfig = SearchConfig()
    mcmc: Optional[McmcConfig] = None

    model_config = ConfigDict(
        extra="ignore",         # ignore unknown sections
        validate_default=True,
    )

    @field_validator("prior", mode="before")
    @classmethod
    def validate_prior_section(cls, v: Any):
        if v is None:
            return {}
        if not isinstance(v, dict):
            raise ValueError(f"Configuration Error: 'prior' must be a mapping, got {type(v).__name__}")
        allowed = {"alpha_mu", "alpha_w", "t_scale", "nu", "mode",
                   "rank_one_coefficient_uses", "hg95_sample_variance"}
        unknown = set(v) - allowed
        if unknown:
            raise ValueError(
                f"Configuration Error: unknown prior keys {sorted(unknown)}; "
                f"expected a subset of {sorted(allowed)}"
            )
        return v
