"""Degree-based centrality indicators and central-node sets.

Three ways of picking the nodes that seed community expansion:

* the local centrality indicator (LCI), which compares a node's degree
  with the mean degree of its neighbors,
* the global maximal-degree rule, the top ``k`` nodes by degree,
* the local maximal-degree rule, nodes at least as well connected as
  every one of their neighbors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph

__all__ = [
    "CentralityReport",
    "lci",
    "lci_scores",
    "central_nodes",
    "global_max_degree_nodes",
    "local_max_degree_nodes",
    "centrality_report",
]


def neighbor_degree_sums(graph: Graph) -> np.ndarray:
    deg = graph.degree
    return np.fromiter((deg[list(nb)].sum() if nb else 0 for nb in graph.adjacency),
                       dtype=np.int64, count=graph.node_count)


def lci(graph: Graph, node: int) -> float | None:
    """Local centrality indicator of one node.

    For degree ``k`` and neighbor-degree sum ``S`` this is
    ``(k - S/k) / (k + S/k)``, positive when the node is better connected
    than its average neighbor.  Returns ``None`` for an isolated node,
    where the ratio is undefined.
    """
    k = len(graph.adjacency[node])
    if k == 0:
        return None
    s = int(graph.degree[list(graph.adjacency[node])].sum())
    # multiplying through by k avoids the inner division
    return (k * k - s) / (k * k + s)


def lci_scores(graph: Graph) -> np.ndarray:
    """LCI of every node; NaN for isolated nodes."""
    k2 = graph.degree.astype(np.float64) ** 2
    s = neighbor_degree_sums(graph).astype(np.float64)
    with np.errstate(invalid="ignore"):
        out = (k2 - s) / (k2 + s)
    out[graph.degree == 0] = np.nan
    return out


def central_nodes(graph: Graph, threshold: float = 0.0,
                  scores: np.ndarray | None = None) -> list[int]:
    """Nodes with LCI >= threshold, plus every isolated node, ascending."""
    if scores is None:
        scores = lci_scores(graph)
    keep = np.isnan(scores) | (scores >= threshold)
    return np.flatnonzero(keep).tolist()


def global_max_degree_nodes(graph: Graph, k: int) -> list[int]:
    """The ``k`` highest-degree nodes; ties at the cut go to lower ids."""
    n = graph.node_count
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    order = np.lexsort((np.arange(n), -graph.degree))
    return sorted(order[:k].tolist())


def local_max_degree_nodes(graph: Graph) -> list[int]:
    """Nodes whose degree is >= the degree of each of their neighbors."""
    deg = graph.degree
    return [v for v, nb in enumerate(graph.adjacency)
            if all(deg[v] >= deg[u] for u in nb)]


@dataclass
class CentralityReport:
    indicator: str
    central_set: list[int]
    scores: np.ndarray | None = field(default=None, repr=False)
    parameters: dict = field(default_factory=dict)


def centrality_report(graph: Graph, indicator: str = "lci", *,
                      threshold: float = 0.0, k: int | None = None) -> CentralityReport:
    if indicator == "lci":
        scores = lci_scores(graph)
        return CentralityReport("lci", central_nodes(graph, threshold, scores),
                                scores, {"threshold": threshold})
    if indicator == "gmd":
        if k is None:
            raise ValueError("the gmd indicator needs k")
        return CentralityReport("gmd", global_max_degree_nodes(graph, k),
                                parameters={"k": k})
    if indicator == "lmd":
        return CentralityReport("lmd", local_max_degree_nodes(graph))
    raise ValueError(f"unknown indicator {indicator!r}")
