from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class SearchConfig(BaseModel):
    max_parents: int = 3
    max_iterations: int = 1000
    restarts: int = 1
    seed: int = 0
    improvement_threshold: float = 1e-12
    # edge probability of the random starting graphs used from the second restart on
    start_edge_prob: float = 0.2
    workers: int = 1

    model_config = ConfigDict(
        extra="ignore",
        validate_default=True,
        frozen=True,
    )

    @field_validator("max_parents", "max_iterations")
    @classmethod
    def validate_non_negative(cls, v: int) -> int:
        if v < 0:
            raise ValueError(f"Configuration Error: value must be >= 0, got {v}")
        return v

    @field_validator("restarts", "workers")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"Configuration Error: value must be >= 1, got {v}")
        return v

    @field_validator("improvement_threshold")
    @classmethod
    def validate_threshold(cls, v: float) -> float:
        if v < 0:
            raise ValueError(f"Configuration Error: improvement_threshold must be >= 0, got {v}")
        return v

    @field_validator("start_edge_prob")
    @classmethod
    def validate_probability(cls, v: float) -> float:
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"Configuration Error: start_edge_prob must be in [0, 1], got {v}")
        return v


class StructurePrior(BaseModel):
    """
    uniform: every DAG equally likely a priori.
    per_edge_penalty: log prior = -gamma * |E| (up to a constant).
    """
    kind: Literal["uniform", "per_edge_penalty"] = "uniform"
    gamma: float = 0.0

    model_config = ConfigDict(extra="ignore", validate_default=True, frozen=True)

    def log_prior_delta(self, edge_change: int) -> float:
        if self.kind == "uniform":
            return 0.0
        return -self.gamma * edge_change


class McmcConfig(BaseModel):
    iterations: int = 10000
    burn_in: int = 1000
    thinning: int = 1
    seed: int = 0
    structure_prior: StructurePrior = StructurePrior()
    max_parents: Optional[int] = None

    model_config = ConfigDict(
        extra="ignore",
        validate_default=True,
        frozen=True,
    )

    @field_validator("structure_prior", mode="before")
    @classmethod
    def resolve_structure_prior(cls, v):
        # shorthand: "uniform" or a bare number meaning per_edge_penalty(gamma)
        if isinstance(v, str):
            return {"kind": v}
        if isinstance(v, (int, float)) and not isinstance(v, bool):
            return {"kind": "per_edge_penalty", "gamma": float(v)}
        return v

    @field_validator("thinning")
    @classmethod
    def validate_thinning(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"Configuration Error: thinning must be >= 1, got {v}")
        return v

    @field_validator("max_parents")
    @classmethod
    def validate_max_parents(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 0:
            raise ValueError(f"Configuration Error: max_parents must be >= 0, got {v}")
        return v

    @model_validator(mode="after")
    def validate_schedule(self) -> "McmcConfig":
        if self.burn_in < 0:
            raise ValueError(f"Configuration Error: burn_in must be >= 0, got {self.burn_in}")
        if not self.burn_in < self.iterations:
            raise ValueError(
                f"Configuration Error: burn_in ({self.burn_in}) must be smaller than "
                f"iterations ({self.iterations})"
            )
        return self
