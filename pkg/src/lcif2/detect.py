"""Greedy community detection seeded at central nodes.

One run visits the central nodes in random order.  Each central node not
yet claimed grows a community greedily: at every step the unassigned
neighbor whose addition most improves the community's quality joins,
until no addition improves it.  Nodes left over afterwards are handed to
the community of their highest-LCI neighbor.  Several runs are made and
the best-scoring outcome is kept.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .centrality import central_nodes, lci_scores
from .graph import Graph, Partition, UNASSIGNED, partial_membership
from .modularity import OBJECTIVES, CommunityState, f2_score, make_objective, score

__all__ = [
    "DetectionConfig",
    "DetectionResult",
    "expand_community",
    "detect_once",
    "assign_residuals",
    "detect",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DetectionConfig:
    """Knobs for :func:`detect`.

    ``select_on`` chooses which partition of each run is scored when
    picking the best run: ``"final"`` scores the complete partition,
    ``"expansion"`` the communities as grown, before leftover nodes are
    placed.
    """

    objective: str = "f2"
    restarts: int = 10
    seed: int = 0
    lci_threshold: float = 0.0
    tie_break: str = "random"
    zero_gain: str = "reject"
    select_on: str = "final"

    def __post_init__(self):
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}")
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if self.tie_break not in ("random", "deterministic"):
            raise ValueError("tie_break must be 'random' or 'deterministic'")
        if self.zero_gain not in ("reject", "accept"):
            raise ValueError("zero_gain must be 'reject' or 'accept'")
        if self.select_on not in ("final", "expansion"):
            raise ValueError("select_on must be 'final' or 'expansion'")


@dataclass
class DetectionResult:
    partition: Partition
    f2: float
    final_f2: float
    score: float
    restart_index: int
    central_nodes: list[int]
    residual_nodes: list[int]
    residual_paths: dict[int, int]
    per_restart_scores: list[float]
    expansion: np.ndarray = field(repr=False)
    config: DetectionConfig = field(default_factory=DetectionConfig)

    def to_dict(self, labels=None) -> dict:
        """JSON-ready summary; node ids become labels when given."""
        lab = (lambda v: labels[v]) if labels is not None else int
        return {
            "objective": self.config.objective,
            "restarts": self.config.restarts,
            "seed": self.config.seed,
            "tie_break": self.config.tie_break,
            "zero_gain": self.config.zero_gain,
            "select_on": self.config.select_on,
            "n_communities": self.partition.n_communities,
            "community_sizes": self.partition.sizes(),
            "f2": self.f2,
            "final_f2": self.final_f2,
            "score": self.score,
            "restart_index": self.restart_index,
            "per_restart_scores": self.per_restart_scores,
            "central_nodes": [lab(v) for v in self.central_nodes],
            "residual_nodes": [lab(v) for v in self.residual_nodes],
            "residual_paths": {lab(v): lab(u) for v, u in sorted(self.residual_paths.items())},
        }


def expand_community(graph: Graph, seed: int, assigned: np.ndarray,
                     config: DetectionConfig, rng: np.random.Generator,
                     scores: np.ndarray | None = None, objective=None) -> CommunityState:
    """Grow a community from ``seed`` over the unassigned nodes.

    ``assigned`` holds community ids with -1 for free nodes; it is only
    read.  Candidates are free neighbors of the community.  The best one
    joins while it strictly improves the objective (or merely keeps it
    level, when ``config.zero_gain == "accept"``).
    """
    if assigned[seed] != UNASSIGNED:
        raise ValueError(f"seed {seed} is already assigned")
    if objective is None:
        objective = make_objective(config.objective, graph)
    if scores is None and config.tie_break == "deterministic":
        scores = lci_scores(graph)
    accept_level = config.zero_gain == "accept"

    state = CommunityState(graph, seed)
    objective.start(state)
    while True:
        cur = objective.current(state)
        best = None
        ties: list[tuple[int, int]] = []
        for v, e in state.frontier.items():
            if assigned[v] != UNASSIGNED:
                continue
            key = objective.key(state, v, e)
            if best is None or key > best:
                best, ties = key, [(v, e)]
            elif key == best:
                ties.append((v, e))
        if best is None or best < cur or (best == cur and not accept_level):
            return state
        if len(ties) == 1:
            v, e = ties[0]
        elif config.tie_break == "random":
            ties.sort()
            v, e = ties[int(rng.integers(len(ties)))]
        else:
            v, e = max(ties, key=lambda t: (scores[t[0]], -t[0]))
        state.add(v)
        objective.added(state, v, e)


def detect_once(graph: Graph, config: DetectionConfig, rng: np.random.Generator,
                scores: np.ndarray | None = None,
                centrals: list[int] | None = None) -> np.ndarray:
    """One run of expansion from every central node.

    Returns a membership array with -1 for nodes no community reached.
    """
    if scores is None:
        scores = lci_scores(graph)
    if centrals is None:
        centrals = central_nodes(graph, config.lci_threshold, scores)
    objective = make_objective(config.objective, graph)
    assigned = np.full(graph.node_count, UNASSIGNED, dtype=np.int64)
    cid = 0
    for s in rng.permutation(np.asarray(centrals, dtype=np.int64)).tolist():
        if assigned[s] != UNASSIGNED:
            continue
        state = expand_community(graph, s, assigned, config, rng, scores, objective)
        assigned[list(state.members)] = cid
        cid += 1
    return assigned


def assign_residuals(graph: Graph, partial, scores: np.ndarray | None = None
                     ) -> tuple[Partition, dict[int, int]]:
    """Place every unassigned node into a community.

    Each unassigned node points at its highest-LCI neighbor (ties to the
    lower id) and follows the pointers until it reaches a community.
    Nodes whose pointers loop among unassigned nodes are placed by
    rounds instead: each round, every such node with an assigned
    neighbor joins the community of the highest-LCI one, all moves
    computed from the state at the start of the round.  Anything still
    unplaced becomes a singleton.

    Returns the partition and, per originally unassigned node, the
    neighbor it was routed through.
    """
    if scores is None:
        scores = lci_scores(graph)
    m = np.array(partial, dtype=np.int64)
    adj = graph.adjacency

    def best_of(nodes):
        return max(nodes, key=lambda u: (scores[u], -u))

    paths: dict[int, int] = {}
    free = [v for v in range(graph.node_count) if m[v] == UNASSIGNED]
    target = {v: best_of(adj[v]) for v in free if adj[v]}

    placed = m.copy()
    for v in free:
        if v not in target:
            continue
        chain, seen, x = [], set(), v
        while placed[x] == UNASSIGNED and x in target and x not in seen:
            seen.add(x)
            chain.append(x)
            x = target[x]
        if placed[x] != UNASSIGNED:
            for y in chain:
                placed[y] = placed[x]
                paths[y] = target[y]

    left = [v for v in free if placed[v] == UNASSIGNED]
    while left:
        moves = {}
        for v in left:
            options = [u for u in adj[v] if placed[u] != UNASSIGNED]
            if options:
                moves[v] = best_of(options)
        if not moves:
            break
        for v, u in moves.items():
            placed[v] = placed[u]
            paths[v] = u
        left = [v for v in left if v not in moves]

    if left:
        log.warning("%d nodes unreachable from any community; made singletons", len(left))
        nxt = int(placed.max()) + 1
        for v in left:
            placed[v] = nxt
            nxt += 1
    return Partition(placed), paths


def detect(graph: Graph, config: DetectionConfig | None = None) -> DetectionResult:
    """Best of ``config.restarts`` seeded runs of :func:`detect_once`."""
    config = config or DetectionConfig()
    scores = lci_scores(graph)
    centrals = central_nodes(graph, config.lci_threshold, scores)
    streams = np.random.SeedSequence(config.seed).spawn(config.restarts)

    best = None
    per_restart = []
    for i, ss in enumerate(streams):
        partial = detect_once(graph, config, np.random.default_rng(ss), scores, centrals)
        final, paths = assign_residuals(graph, partial, scores)
        target = final if config.select_on == "final" else partial
        value = score(graph, target, config.objective).value
        per_restart.append(value)
        if best is None or value > best[0]:
            best = (value, i, partial, final, paths)

    value, i, partial, final, paths = best
    residual = np.flatnonzero(partial == UNASSIGNED).tolist()
    return DetectionResult(
        partition=final,
        f2=f2_score(graph, partial).value,
        final_f2=f2_score(graph, final).value,
        score=value,
        restart_index=i,
        central_nodes=centrals,
        residual_nodes=residual,
        residual_paths=paths,
        per_restart_scores=per_restart,
        expansion=partial_membership(partial),
        config=config,
    )
