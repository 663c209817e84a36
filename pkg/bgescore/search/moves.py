from typing import List, Optional

import networkx as nx

from bgescore.models.dag import Dag, Move, MoveKind


def legal_moves(dag: Dag, max_parents: Optional[int] = None) -> List[Move]:
    """
    Every single-edge addition, removal and reversal that keeps the graph
    acyclic and leaves no node with more than max_parents parents, in a
    fixed (u, v, kind) order.
    """
    n = dag.n
    limit = n - 1 if max_parents is None else max_parents
    graph = dag.to_networkx()
    descendants = [nx.descendants(graph, node) for node in range(n)]
    children = dag.children()

    moves = []
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if dag.has_edge(u, v):
                moves.append(Move(MoveKind.REMOVE, u, v))
                # reversal is legal unless u reaches v through another child
                if len(dag.parents[u]) < limit and not any(
                        v in descendants[c] for c in children[u] if c != v):
                    moves.append(Move(MoveKind.REVERSE, u, v))
            elif not dag.has_edge(v, u):
                if len(dag.parents[v]) < limit and u not in descendants[v]:
                    moves.append(Move(MoveKind.ADD, u, v))
    return moves


def edge_change(move: Move) -> int:
    if move.kind is MoveKind.ADD:
        return 1
    if move.kind is MoveKind.REMOVE:
        return -1
    return 0
