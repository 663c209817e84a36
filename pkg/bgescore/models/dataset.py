from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from bgescore.business_logic.linalg import SpdMatrix


def _frozen(values: np.ndarray) -> np.ndarray:
    values = np.array(values, dtype=float, copy=True)
    values.setflags(write=False)
    return values


@dataclass(frozen=True)
class Dataset:
    """
    A complete sample: N observations (rows) of n variables (columns).
    """
    values: np.ndarray
    names: Tuple[str, ...]

    def __post_init__(self):
        values = _frozen(self.values)
        if values.ndim != 2:
            raise ValueError(f"Dataset values must be a 2-D matrix, got shape {values.shape}")
        if values.shape[0] < 1:
            raise ValueError("Dataset needs at least one observation")
        if not np.all(np.isfinite(values)):
            raise ValueError("Dataset entries must all be finite")
        names = tuple(str(name) for name in self.names)
        if len(names) != values.shape[1]:
            raise ValueError(
                f"Dataset has {values.shape[1]} columns but {len(names)} names"
            )
        if len(set(names)) != len(names):
            raise ValueError(f"Dataset variable names must be distinct: {names}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "names", names)

    @classmethod
    def from_array(cls, values: np.ndarray, names: Sequence[str] | None = None) -> "Dataset":
        values = np.asarray(values, dtype=float)
        if values.ndim == 1:
            values = values[:, None]
        if names is None:
            names = [f"X{i}" for i in range(values.shape[1])]
        return cls(values=values, names=tuple(names))

    @property
    def n(self) -> int:
        return self.values.shape[1]

    @property
    def N(self) -> int:
        return self.values.shape[0]

    def head(self, rows: int) -> "Dataset":
        return Dataset(values=self.values[:rows], names=self.names)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return self.names == other.names and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.names, self.values.tobytes()))


@dataclass(frozen=True, eq=False)
class SuffStats:
    """Sample mean and scatter matrix S_N = sum (x_i - mean)(x_i - mean)^T."""
    mean: np.ndarray
    scatter: np.ndarray
    N: int

    def __post_init__(self):
        mean = _frozen(self.mean)
        scatter = _frozen(self.scatter)
        if scatter.shape != (mean.shape[0], mean.shape[0]):
            raise ValueError(
                f"Scatter shape {scatter.shape} does not match mean length {mean.shape[0]}"
            )
        if not np.array_equal(scatter, scatter.T):
            raise ValueError("Scatter matrix must be symmetric")
        if not np.all(np.isfinite(mean)):
            raise ValueError("Mean must be finite")
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "scatter", scatter)

    @property
    def n(self) -> int:
        return self.mean.shape[0]


@dataclass(frozen=True)
class PosteriorMatrix:
    """R = T + S_N + c (nu - mean)(nu - mean)^T, positive definite whenever T is."""
    R: SpdMatrix
