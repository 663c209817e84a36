from typing import Optional, Sequence

import numpy as np

from bgescore.business_logic.simulation import sample_gaussian_data
from bgescore.models.dag import Dag
from bgescore.models.dataset import Dataset


def cofactor_det(matrix) -> float:
    """Laplace expansion along the first row; only for tiny matrices."""
    m = [list(map(float, row)) for row in matrix]
    size = len(m)
    if size == 1:
        return m[0][0]
    if size == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0.0
    for j in range(size):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def random_spd(dim: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(dim, dim))
    a = m.T @ m + np.eye(dim)
    return (a + a.T) / 2.0


def chain_dag(n: int = 3, names: Optional[Sequence[str]] = None) -> Dag:
    return Dag.from_edges(n, [(i, i + 1) for i in range(n - 1)], names)


def chain_data(N: int, seed: int = 0, weight: float = 1.5, n: int = 3) -> Dataset:
    dag = chain_dag(n)
    weights = {edge: weight for edge in dag.edges()}
    return sample_gaussian_data(dag, weights, 1.0, N, seed)


def gaussian_data(N: int, n: int, seed: int = 0) -> Dataset:
    rng = np.random.default_rng(seed)
    return Dataset.from_array(rng.normal(size=(N, n)))
