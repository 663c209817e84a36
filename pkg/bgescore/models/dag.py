from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from bgescore.business_logic.linalg import IndexSet, index_set
from bgescore.utils.errors import IllegalMove

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Dag:
    """
    Labeled digraph stored as one sorted parent set per node.

    Construction rejects self-loops and unsorted or duplicate parents;
    acyclicity is checked by is_acyclic and enforced when a graph is scored.
    Updates return modified copies.
    """
    parents: Tuple[IndexSet, ...]
    names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        parents = tuple(tuple(int(p) for p in ps) for ps in self.parents)
        n = len(parents)
        for child, ps in enumerate(parents):
            if ps != index_set(ps):
                raise ValueError(f"Parents of node {child} must be sorted and distinct: {ps}")
            if child in ps:
                raise ValueError(f"Self-loop on node {child}")
            if any(p < 0 or p >= n for p in ps):
                raise ValueError(f"Parent index out of range for node {child}: {ps}")
        if self.names is not None:
            names = tuple(str(name) for name in self.names)
            if len(names) != n or len(set(names)) != n:
                raise ValueError(f"Dag needs {n} distinct names, got {names}")
            object.__setattr__(self, "names", names)
        object.__setattr__(self, "parents", parents)

    @classmethod
    def empty(cls, n: int, names: Optional[Sequence[str]] = None) -> "Dag":
        return cls(parents=tuple(() for _ in range(n)), names=tuple(names) if names else None)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], names: Optional[Sequence[str]] = None) -> "Dag":
        parent_lists: List[set] = [set() for _ in range(n)]
        for parent, child in edges:
            parent_lists[child].add(parent)
        return cls(
            parents=tuple(tuple(sorted(ps)) for ps in parent_lists),
            names=tuple(names) if names else None,
        )

    @property
    def n(self) -> int:
        return len(self.parents)

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.names if self.names is not None else tuple(str(i) for i in range(self.n))

    def edges(self) -> List[Edge]:
        return [(p, child) for child, ps in enumerate(self.parents) for p in ps]

    @property
    def edge_count(self) -> int:
        return sum(len(ps) for ps in self.parents)

    def has_edge(self, parent: int, child: int) -> bool:
        return parent in self.parents[child]

    def adjacent(self, a: int, b: int) -> bool:
        return self.has_edge(a, b) or self.has_edge(b, a)

    def children(self) -> List[List[int]]:
        result: List[List[int]] = [[] for _ in range(self.n)]
        for child, ps in enumerate(self.parents):
            for p in ps:
                result[p].append(child)
        return result

    def has_path(self, source: int, target: int, skip_edge: Optional[Edge] = None) -> bool:
        """Directed path source ~> target, optionally ignoring one edge."""
        if source == target:
            return True
        children = self.children()
        stack = [source]
        seen = {source}
        while stack:
            node = stack.pop()
            for child in children[node]:
                if skip_edge is not None and (node, child) == skip_edge:
                    continue
                if child == target:
                    return True
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
        return False

    def with_parents(self, child: int, parents: Iterable[int]) -> "Dag":
        updated = list(self.parents)
        updated[child] = index_set(parents)
        return Dag(parents=tuple(updated), names=self.names)

    def add_edge(self, parent: int, child: int) -> "Dag":
        if self.has_edge(parent, child):
            raise IllegalMove(f"Edge {parent}->{child} already present")
        return self.with_parents(child, self.parents[child] + (parent,))

    def remove_edge(self, parent: int, child: int) -> "Dag":
        if not self.has_edge(parent, child):
            raise IllegalMove(f"Edge {parent}->{child} not present")
        return self.with_parents(child, [p for p in self.parents[child] if p != parent])

    def reverse_edge(self, parent: int, child: int) -> "Dag":
        return self.remove_edge(parent, child).add_edge(child, parent)

    def relabel(self, permutation: Sequence[int]) -> "Dag":
        """Node i becomes node permutation[i]."""
        edges = [(permutation[p], permutation[c]) for p, c in self.edges()]
        names = None
        if self.names is not None:
            names = [""] * self.n
            for old, new in enumerate(permutation):
                names[new] = self.names[old]
        return Dag.from_edges(self.n, edges, names)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def topological_order(self) -> List[int]:
        return list(nx.lexicographical_topological_sort(self.to_networkx()))


@dataclass(frozen=True)
class EquivalenceSignature:
    """Skeleton (unordered pairs) plus unshielded colliders (a, c, b) with a -> c <- b and a < b."""
    skeleton: FrozenSet[Tuple[int, int]]
    v_structures: FrozenSet[Tuple[int, int, int]] = field(default_factory=frozenset)


class MoveKind(Enum):
    ADD = "add"
    REMOVE = "remove"
    REVERSE = "reverse"


@dataclass(frozen=True)
class Move:
    """A single-edge change of u -> v (for REVERSE, the existing edge u -> v becomes v -> u)."""
    kind: MoveKind
    u: int
    v: int

    def apply(self, dag: Dag) -> Dag:
        if self.kind is MoveKind.ADD:
            return dag.add_edge(self.u, self.v)
        if self.kind is MoveKind.REMOVE:
            return dag.remove_edge(self.u, self.v)
        return dag.reverse_edge(self.u, self.v)

    def inverse(self) -> "Move":
        if self.kind is MoveKind.ADD:
            return Move(MoveKind.REMOVE, self.u, self.v)
        if self.kind is MoveKind.REMOVE:
            return Move(MoveKind.ADD, self.u, self.v)
        return Move(MoveKind.REVERSE, self.v, self.u)

    def affected_nodes(self) -> Tuple[int, ...]:
        if self.kind is MoveKind.REVERSE:
            return (self.u, self.v)
        return (self.v,)

    def describe(self, labels: Optional[Sequence[str]] = None) -> str:
        u = labels[self.u] if labels else str(self.u)
        v = labels[self.v] if labels else str(self.v)
        return f"{self.kind.value} {u}->{v}"
