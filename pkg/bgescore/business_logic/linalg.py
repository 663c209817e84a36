"""
Symmetric positive-definite matrix support.

All determinant work stays in log space; raw determinants are never formed.
Principal submatrices are copied into a compact buffer before factorization
since parent sets are small compared to the number of variables.
"""
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np
from scipy.special import multigammaln

from bgescore.utils.errors import DomainError, NotPositiveDefinite

IndexSet = Tuple[int, ...]

# pivots at or below this fraction of the largest diagonal entry are rejected
PIVOT_TOLERANCE = 1e-12


def index_set(indices: Iterable[int]) -> IndexSet:
    """Canonical IndexSet: strictly increasing, no duplicates."""
    values = [int(i) for i in indices]
    result = tuple(sorted(set(values)))
    if len(result) != len(values):
        raise ValueError(f"Index set contains duplicates: {values}")
    return result


def _factor(block: np.ndarray) -> np.ndarray:
    """Lower Cholesky factor of a symmetric block with the scale-relative pivot guard."""
    try:
        lower = np.linalg.cholesky(block)
    except np.linalg.LinAlgError as e:
        raise NotPositiveDefinite(f"Cholesky factorization failed: {e}") from e

    pivots = np.diagonal(lower) ** 2
    threshold = PIVOT_TOLERANCE * float(np.max(np.diagonal(block)))
    if not np.all(pivots > threshold):
        raise NotPositiveDefinite(
            f"Matrix is numerically semidefinite: smallest pivot {pivots.min():.3e} "
            f"<= {threshold:.3e}"
        )
    return lower


def logdet_spd(block: np.ndarray) -> float:
    """ln|block| for a symmetric positive-definite block."""
    if block.shape[0] == 0:
        return 0.0
    return 2.0 * float(np.sum(np.log(np.diagonal(_factor(block)))))


def logdet_principal(entries: np.ndarray, indices: IndexSet) -> float:
    """ln|A_YY| straight from a dense array, skipping SpdMatrix validation."""
    if not indices:
        return 0.0
    idx = np.asarray(indices, dtype=np.intp)
    return logdet_spd(entries[np.ix_(idx, idx)])


@dataclass(frozen=True)
class SpdMatrix:
    """Dense symmetric positive-definite matrix. Rejected at construction if the factorization fails."""
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float, copy=True)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] < 1:
            raise ValueError(f"SpdMatrix must be a non-empty square matrix, got shape {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise ValueError("SpdMatrix entries must be finite")
        if not np.array_equal(entries, entries.T):
            raise ValueError("SpdMatrix entries must be exactly symmetric")
        _factor(entries)
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def identity(cls, dim: int, scale: float = 1.0) -> "SpdMatrix":
        return cls(scale * np.eye(dim))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def select(self, indices: IndexSet) -> np.ndarray:
        self._check_indices(indices)
        idx = np.asarray(indices, dtype=np.intp)
        return self.entries[np.ix_(idx, idx)].copy()

    def _check_indices(self, indices: IndexSet) -> None:
        if not indices:
            raise ValueError("Index set must be nonempty")
        if any(i < 0 or i >= self.dim for i in indices):
            raise IndexError(f"Index set {indices} out of range for dimension {self.dim}")
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise ValueError(f"Index set {indices} must be strictly increasing")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpdMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())


def cholesky(matrix: SpdMatrix) -> np.ndarray:
    """L lower-triangular with L @ L.T == A and a positive diagonal."""
    return _factor(matrix.entries)


def logdet_submatrix(matrix: SpdMatrix, indices: IndexSet) -> float:
    """ln|A_YY| = 2 * sum(ln diag(chol(A_YY)))."""
    return logdet_spd(matrix.select(indices))


def inverse_selected_submatrix(matrix: SpdMatrix, indices: IndexSet) -> SpdMatrix:
    """A_Y := ((A^-1)_YY)^-1, the selection order of the gh02 variant."""
    matrix._check_indices(indices)
    inverse = spd_inverse(matrix.entries)
    idx = np.asarray(indices, dtype=np.intp)
    return SpdMatrix(spd_inverse(inverse[np.ix_(idx, idx)]))


def spd_inverse(entries: np.ndarray) -> np.ndarray:
    if np.count_nonzero(entries - np.diag(np.diagonal(entries))) == 0:
        _factor(entries)
        return np.diag(1.0 / np.diagonal(entries))
    lower = _factor(entries)
    lower_inv = np.linalg.solve(lower, np.eye(entries.shape[0]))
    inverse = lower_inv.T @ lower_inv
    # restore exact symmetry lost to round-off
    return (inverse + inverse.T) / 2.0


def log_multigamma(l: int, x: float) -> float:
    """ln Gamma_l(x/2) = l(l-1)/4 ln(pi) + sum_j ln Gamma((x+1-j)/2)."""
    if l < 1 or int(l) != l:
        raise DomainError(f"Dimension l must be a positive integer, got {l}")
    if not x > l - 1:
        raise DomainError(f"log_multigamma requires x > l - 1, got l={l}, x={x}")
    return float(multigammaln(x / 2.0, int(l)))
