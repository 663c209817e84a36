from typing import Dict, Optional, Sequence

import numpy as np

from bgescore.models.dag import Dag, Edge
from bgescore.models.dataset import Dataset


def random_dag(n: int, max_parents: int, edge_prob: float, seed: Optional[int] = None,
               names: Optional[Sequence[str]] = None) -> Dag:
    """
    Upper-triangular sampling in a random node order: an edge can only point
    from an earlier to a later node of the permutation, so the result is
    acyclic by construction. Candidates are drawn in order and a node stops
    accepting parents once it has max_parents.
    """
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge_prob must be in [0, 1], got {edge_prob}")
    if max_parents < 0:
        raise ValueError(f"max_parents must be >= 0, got {max_parents}")

    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    edges = []
    for j in range(1, n):
        child = int(order[j])
        count = 0
        for i in range(j):
            accept = rng.random() < edge_prob
            if accept and count < max_parents:
                edges.append((int(order[i]), child))
                count += 1
    return Dag.from_edges(n, edges, names)


def random_weights(dag: Dag, seed: Optional[int] = None, low: float = 0.5, high: float = 2.0) -> Dict[Edge, float]:
    """Edge weights with magnitude uniform in [low, high] and a random sign."""
    rng = np.random.default_rng(seed)
    weights = {}
    for edge in dag.edges():
        magnitude = rng.uniform(low, high)
        sign = 1.0 if rng.random() < 0.5 else -1.0
        weights[edge] = sign * magnitude
    return weights


def sample_gaussian_data(dag: Dag, weights: Dict[Edge, float], noise_sd: float, N: int,
                         seed: Optional[int] = None) -> Dataset:
    """
    Linear-Gaussian ancestral sampling: x_i = sum_p w_pi x_p + eps_i with
    eps_i ~ Normal(0, noise_sd^2), nodes visited in topological order.
    """
    if not noise_sd > 0:
        raise ValueError(f"noise_sd must be > 0, got {noise_sd}")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    missing = [edge for edge in dag.edges() if edge not in weights]
    if missing:
        raise ValueError(f"Missing weights for edges {missing}")

    rng = np.random.default_rng(seed)
    values = np.zeros((N, dag.n))
    for node in dag.topological_order():
        column = rng.normal(0.0, noise_sd, size=N)
        for parent in dag.parents[node]:
            column = column + weights[(parent, node)] * values[:, parent]
        values[:, node] = column
    return Dataset.from_array(values, dag.labels)
