"""Coalition graphs of partitions and singleton-coalition graphs.

The coalition graph of a partition has one vertex per part, adjacent
exactly when the two parts form a coalition. For the all-singletons
partition of a singleton-partition graph this keeps the vertex labels of
the underlying graph, so iterating the construction is well defined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domination import Partition, forms_coalition, is_dominating, sp_check, singleton_partition
from .graphs import Graph


@dataclass(frozen=True)
class CoalitionGraphResult:
    graph: Graph
    part_of_vertex: tuple[int, ...]  # vertex i of the result <-> part i


def coalition_graph(g: Graph, p: Partition) -> CoalitionGraphResult:
    """Coalition graph of a partition, parts in their stored order."""
    if p.n != g.n:
        raise ValueError("partition order does not match the graph")
    k = p.k
    dominating = [is_dominating(g, part) for part in p.parts]
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            if dominating[i] or dominating[j]:
                continue
            if forms_coalition(g, p.parts[i], p.parts[j]):
                edges.append((i, j))
    return CoalitionGraphResult(Graph.from_edges(k, edges), tuple(range(k)))


class NotSingletonPartitionGraph(ValueError):
    """The all-singletons partition of the input is not a coalition partition."""

    def __init__(self, blocking_vertex: int):
        self.blocking_vertex = blocking_vertex
        super().__init__(
            f"not a singleton-partition graph: vertex {blocking_vertex} "
            "has no coalition partner"
        )


def sc_graph(g: Graph) -> Graph:
    """Singleton-coalition graph: the coalition graph of the all-singletons
    partition, defined only for singleton-partition graphs."""
    verdict = sp_check(g)
    if not verdict.is_sp:
        assert verdict.blocking_vertex is not None
        raise NotSingletonPartitionGraph(verdict.blocking_vertex)
    return coalition_graph(g, singleton_partition(g)).graph
