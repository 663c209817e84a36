"""
Acyclicity, Markov equivalence and small-graph enumeration.

Equivalence is decided by the skeleton plus unshielded colliders (Verma-Pearl).
The d-separation helpers give an independent check of that criterion on
small graphs.
"""
from collections import defaultdict
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from bgescore.models.dag import Dag, EquivalenceSignature


def is_acyclic(dag: Dag) -> bool:
    return nx.is_directed_acyclic_graph(dag.to_networkx())


def equivalence_signature(dag: Dag) -> EquivalenceSignature:
    skeleton = frozenset((min(p, c), max(p, c)) for p, c in dag.edges())
    v_structures = set()
    for child, parents in enumerate(dag.parents):
        for a, b in combinations(parents, 2):
            if not dag.adjacent(a, b):
                v_structures.add((a, child, b))
    return EquivalenceSignature(skeleton=skeleton, v_structures=frozenset(v_structures))


def markov_equivalent(first: Dag, second: Dag) -> bool:
    if first.n != second.n:
        return False
    return equivalence_signature(first) == equivalence_signature(second)


def enumerate_dags(n: int) -> List[Dag]:
    """Every labeled DAG on n nodes (1, 3, 25, 543, 29281 for n = 1..5)."""
    pairs = list(combinations(range(n), 2))
    dags = []
    # each unordered pair is absent, forward or backward
    for states in product((0, 1, 2), repeat=len(pairs)):
        edges = []
        for (a, b), state in zip(pairs, states):
            if state == 1:
                edges.append((a, b))
            elif state == 2:
                edges.append((b, a))
        dag = Dag.from_edges(n, edges)
        if is_acyclic(dag):
            dags.append(dag)
    return dags


def equivalence_classes(dags: Iterable[Dag]) -> Dict[EquivalenceSignature, List[Dag]]:
    classes: Dict[EquivalenceSignature, List[Dag]] = defaultdict(list)
    for dag in dags:
        classes[equivalence_signature(dag)].append(dag)
    return dict(classes)


def d_separated(dag: Dag, xs: Iterable[int], ys: Iterable[int], zs: Iterable[int]) -> bool:
    """X and Y d-separated given Z, via the moralized ancestral graph."""
    xs, ys, zs = set(xs), set(ys), set(zs)
    graph = dag.to_networkx()
    relevant = set(xs | ys | zs)
    for node in list(relevant):
        relevant |= nx.ancestors(graph, node)
    moral = nx.moral_graph(graph.subgraph(relevant))
    moral.remove_nodes_from(zs)
    for x in xs - zs:
        reachable = nx.node_connected_component(moral, x)
        if reachable & (ys - zs):
            return False
    return True


def independence_relation(dag: Dag) -> FrozenSet[Tuple[int, int, FrozenSet[int]]]:
    """All pairwise statements X _||_ Y | Z (x < y, Z over the remaining nodes) implied by the DAG."""
    statements = set()
    nodes = range(dag.n)
    for x, y in combinations(nodes, 2):
        rest = [v for v in nodes if v not in (x, y)]
        for size in range(len(rest) + 1):
            for zs in combinations(rest, size):
                if d_separated(dag, {x}, {y}, zs):
                    statements.add((x, y, frozenset(zs)))
    return frozenset(statements)
