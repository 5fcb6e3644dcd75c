"""Partition quality functions and their incremental forms.

Five functions score a partition community by community:

``q``   Newman's modularity, ``l_in/L - (d/2L)^2``
``r``   Clauset's local modularity, ``B_in / (B_in + B_out)``
``m``   ratio of internal to external edges, ``E_in / E_out``
``f``   ``d_in / (d_in + d_out)^alpha``
``f2``  ``(d_in / (d_in + d_out))^2``

Here ``d_in`` is twice the number of internal edges and ``d_out`` the
number of edges leaving the community.  ``B_out`` equals ``d_out``;
``B_in`` counts internal edges with at least one endpoint on the
boundary (a member with a neighbor outside).

Scoring functions accept partial assignments as well: entries of -1 in
the membership are left out of every community and their edges count
as external.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .graph import Graph, Partition, UNASSIGNED

__all__ = [
    "OBJECTIVES",
    "CommunityState",
    "ModularityScore",
    "community_counts",
    "f2_community",
    "f2_delta",
    "q_score",
    "r_score",
    "m_score",
    "f_score",
    "f2_score",
    "score",
    "make_objective",
]

OBJECTIVES = ("q", "r", "m", "f", "f2")


@dataclass
class ModularityScore:
    function: str
    value: float
    per_community: list[float] = field(default_factory=list)


def _membership(partition) -> np.ndarray:
    if isinstance(partition, Partition):
        return partition.membership
    return np.asarray(partition, dtype=np.int64)


def community_counts(graph: Graph, partition) -> tuple[np.ndarray, np.ndarray]:
    """``(d_in, d_out)`` per community, as integer arrays."""
    m = _membership(partition)
    if m.size != graph.node_count:
        raise ValueError("partition and graph have different node counts")
    k = int(m.max()) + 1 if m.size else 0
    d_in = np.zeros(k, dtype=np.int64)
    d_out = np.zeros(k, dtype=np.int64)
    for u, v in graph.edges():
        cu, cv = m[u], m[v]
        if cu == cv and cu != UNASSIGNED:
            d_in[cu] += 2
            continue
        if cu != UNASSIGNED:
            d_out[cu] += 1
        if cv != UNASSIGNED:
            d_out[cv] += 1
    return d_in, d_out


def f2_community(d_in: int, d_out: int) -> float:
    """F2 term of one community; 0 for an isolated singleton."""
    tot = d_in + d_out
    if tot == 0:
        return 0.0
    return (d_in / tot) ** 2


def _result(name: str, terms: Iterable[float]) -> ModularityScore:
    terms = [float(t) for t in terms]
    return ModularityScore(name, math.fsum(terms), terms)


def q_score(graph: Graph, partition) -> ModularityScore:
    L = graph.edge_count
    if L == 0:
        raise ValueError("modularity Q is undefined on a graph without edges")
    d_in, d_out = community_counts(graph, partition)
    d = d_in + d_out
    return _result("q", ((a / 2) / L - (b / (2 * L)) ** 2 for a, b in zip(d_in, d)))


def r_score(graph: Graph, partition) -> ModularityScore:
    m = _membership(partition)
    k = int(m.max()) + 1 if m.size else 0
    boundary = np.zeros(graph.node_count, dtype=bool)
    for v, nb in enumerate(graph.adjacency):
        boundary[v] = m[v] != UNASSIGNED and any(m[u] != m[v] for u in nb)
    b_in = np.zeros(k, dtype=np.int64)
    b_out = np.zeros(k, dtype=np.int64)
    for u, v in graph.edges():
        cu, cv = m[u], m[v]
        if cu == cv and cu != UNASSIGNED:
            if boundary[u] or boundary[v]:
                b_in[cu] += 1
        else:
            if cu != UNASSIGNED:
                b_out[cu] += 1
            if cv != UNASSIGNED:
                b_out[cv] += 1
    # a community without boundary nodes is as sharp as it gets
    return _result("r", (a / (a + b) if b else 1.0 for a, b in zip(b_in, b_out)))


def m_score(graph: Graph, partition) -> ModularityScore:
    d_in, d_out = community_counts(graph, partition)
    terms = [(a / 2) / b if b else math.inf for a, b in zip(d_in, d_out)]
    value = math.inf if math.inf in terms else math.fsum(terms)
    return ModularityScore("m", value, terms)


def f_score(graph: Graph, partition, alpha: float = 1.0) -> ModularityScore:
    d_in, d_out = community_counts(graph, partition)
    return _result("f", (a / (a + b) ** alpha if a + b else 0.0
                         for a, b in zip(d_in, d_out)))


def f2_score(graph: Graph, partition) -> ModularityScore:
    d_in, d_out = community_counts(graph, partition)
    return _result("f2", (f2_community(int(a), int(b)) for a, b in zip(d_in, d_out)))


def score(graph: Graph, partition, function: str = "f2", **kw) -> ModularityScore:
    fn = {"q": q_score, "r": r_score, "m": m_score, "f": f_score, "f2": f2_score}
    try:
        return fn[function](graph, partition, **kw)
    except KeyError:
        raise ValueError(f"unknown modularity function {function!r}") from None


# --------------------------------------------------------------------------
# growing one community


class CommunityState:
    """A community under construction with running ``d_in``/``d_out``.

    ``frontier`` maps every non-member neighbor of the community to the
    number of edges it has into the community.
    """

    def __init__(self, graph: Graph, seed: int):
        self.graph = graph
        self.members = {seed}
        self.d_in = 0
        self.d_out = int(graph.degree[seed])
        self.frontier: dict[int, int] = dict.fromkeys(graph.adjacency[seed], 1)

    def links(self, v: int) -> int:
        """Number of edges between ``v`` and the community."""
        return self.frontier.get(v, 0)

    def add(self, v: int) -> None:
        if v in self.members:
            raise ValueError(f"node {v} is already a member")
        e = self.frontier.pop(v, 0)
        self.members.add(v)
        self.d_in += 2 * e
        self.d_out += int(self.graph.degree[v]) - 2 * e
        for w in self.graph.adjacency[v]:
            if w not in self.members:
                self.frontier[w] = self.frontier.get(w, 0) + 1

    @property
    def f2(self) -> float:
        return f2_community(self.d_in, self.d_out)

    def recount(self) -> tuple[int, int]:
        """``(d_in, d_out)`` counted from scratch, for audits."""
        d_in = d_out = 0
        for u in self.members:
            for w in self.graph.adjacency[u]:
                if w in self.members:
                    d_in += 1
                else:
                    d_out += 1
        return d_in, d_out

    def __len__(self) -> int:
        return len(self.members)


def f2_delta(state: CommunityState, candidate: int, graph: Graph | None = None) -> float:
    """Change in the community's F2 term if ``candidate`` joined it."""
    graph = state.graph if graph is None else graph
    if candidate in state.members:
        raise ValueError(f"node {candidate} is already a member")
    e = state.links(candidate)
    k = int(graph.degree[candidate])
    return f2_community(state.d_in + 2 * e, state.d_out + k - 2 * e) - state.f2


# --------------------------------------------------------------------------
# greedy objectives
#
# Each objective turns "add candidate v, which has e edges into the
# community" into a key; the greedy step takes the largest key and keeps
# it only if it beats ``current``.  Keys are exact for comparison
# purposes: integers, or quotients of integers well below 2**26 whose
# float ordering matches the rational ordering.


class _ShareObjective:
    """f2, f (alpha = 1) and m all increase with d_in / (d_in + d_out).

    So they make the same greedy choice; the key is that share itself.
    """

    def __init__(self, graph: Graph):
        self.deg = graph.degree.tolist()

    def start(self, state: CommunityState) -> None:
        pass

    def current(self, state: CommunityState) -> float:
        tot = state.d_in + state.d_out
        return state.d_in / tot if tot else 0.0

    def key(self, state: CommunityState, v: int, e: int) -> float:
        return (state.d_in + 2 * e) / (state.d_in + state.d_out + self.deg[v])

    def added(self, state: CommunityState, v: int, e: int) -> None:
        pass


class _QObjective:
    """Gain in the community's Q term, scaled by 4L^2 to stay integral."""

    def __init__(self, graph: Graph):
        self.deg = graph.degree.tolist()
        self.L = graph.edge_count

    def start(self, state: CommunityState) -> None:
        pass

    def current(self, state: CommunityState) -> int:
        return 0

    def key(self, state: CommunityState, v: int, e: int) -> int:
        d = state.d_in + state.d_out
        k = self.deg[v]
        return 4 * self.L * e - 2 * d * k - k * k

    def added(self, state: CommunityState, v: int, e: int) -> None:
        pass


class _RObjective:
    """Clauset's R for the growing community, tracked incrementally.

    Keeps each member's external-edge count, the core (members with no
    external edge), each node's number of core neighbors and the number
    of core-core edges; B_in is then internal edges minus core edges.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.deg = graph.degree.tolist()
        self.adj = graph.neighbor_sets

    def start(self, state: CommunityState) -> None:
        (seed,) = state.members
        state.ext = {seed: self.deg[seed]}
        state.core = set()
        state.core_nbrs = {}
        state.core_edges = 0
        if self.deg[seed] == 0:
            self._make_core(state, seed)

    def _make_core(self, state, v: int) -> None:
        state.core_edges += state.core_nbrs.get(v, 0)
        state.core.add(v)
        for w in self.adj[v]:
            state.core_nbrs[w] = state.core_nbrs.get(w, 0) + 1

    @staticmethod
    def _ratio(b_in: int, b_out: int) -> float:
        return b_in / (b_in + b_out) if b_out else 1.0

    def current(self, state) -> float:
        return self._ratio(state.d_in // 2 - state.core_edges, state.d_out)

    def key(self, state, v: int, e: int) -> float:
        nbrs = self.adj[v]
        fresh = [u for u in nbrs if state.ext.get(u) == 1]
        gained = 0
        for i, u in enumerate(fresh):
            gained += state.core_nbrs.get(u, 0)
            gained += sum(1 for w in fresh[:i] if w in self.adj[u])
        if self.deg[v] == e:
            gained += state.core_nbrs.get(v, 0) + len(fresh)
        b_in = state.d_in // 2 + e - state.core_edges - gained
        return self._ratio(b_in, state.d_out + self.deg[v] - 2 * e)

    def added(self, state, v: int, e: int) -> None:
        fresh = []
        for u in self.adj[v]:
            if u in state.ext:
                state.ext[u] -= 1
                if state.ext[u] == 0:
                    fresh.append(u)
        state.ext[v] = self.deg[v] - e
        for u in fresh:
            self._make_core(state, u)
        if state.ext[v] == 0:
            self._make_core(state, v)


def make_objective(name: str, graph: Graph):
    if name in ("f2", "f", "m"):
        return _ShareObjective(graph)
    if name == "q":
        if graph.edge_count == 0:
            raise ValueError("modularity Q is undefined on a graph without edges")
        return _QObjective(graph)
    if name == "r":
        return _RObjective(graph)
    raise ValueError(f"unknown modularity function {name!r}")
