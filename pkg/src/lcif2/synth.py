"""Synthetic networks with known community structure.

Small hand-built families probe specific failure modes of quality
functions (merging small cliques, splitting dense graphs); the LFR
generator gives heterogeneous benchmarks with a tunable mixing
parameter.  The ``f2_closed_*`` functions give exact F2 values for the
hand-built families without building a graph.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, asdict

import numpy as np

from .graph import Graph, Partition

__all__ = [
    "gen_ring_cliques",
    "ring_merged_partition",
    "gen_pq_network",
    "gen_two_cliques_bridge",
    "gen_well_connected",
    "gen_er",
    "gen_complete",
    "LfrParams",
    "LfrError",
    "gen_lfr",
    "mixing_fractions",
    "f2_closed_random_split",
    "f2_closed_ring",
    "f2_closed_pq",
]


def _clique(nodes):
    nodes = list(nodes)
    return [(u, v) for i, u in enumerate(nodes) for v in nodes[i + 1:]]


def gen_ring_cliques(l: int, p: int) -> tuple[Graph, Partition]:
    """``l`` cliques of ``p`` nodes joined in a ring by single edges.

    The bridge from clique i to clique i+1 runs from the first node of
    clique i to the second node of clique i+1.
    """
    if l < 3 or p < 3:
        raise ValueError("need l >= 3 cliques of p >= 3 nodes")
    edges = []
    for i in range(l):
        edges += _clique(range(i * p, (i + 1) * p))
        edges.append((i * p, ((i + 1) % l) * p + 1))
    truth = Partition(np.repeat(np.arange(l), p))
    return Graph.from_edges(l * p, edges), truth


def ring_merged_partition(l: int, p: int, h: int) -> Partition:
    """Runs of ``h`` consecutive cliques of a ring merged together."""
    if h < 1 or l % h:
        raise ValueError("h must divide l")
    return Partition(np.repeat(np.arange(l) // h, p))


def gen_pq_network(p: int, q: int) -> tuple[Graph, Partition]:
    """Two ``p``-cliques A, B and two ``q``-cliques C, D.

    Bridges A-B, B-C, B-D and C-D give the cliques 1, 3, 2 and 2
    external edges respectively.
    """
    if not p > q >= 3:
        raise ValueError("need p > q >= 3")
    a, b, c, d = 0, p, 2 * p, 2 * p + q
    n = 2 * p + 2 * q
    edges = (_clique(range(a, b)) + _clique(range(b, c))
             + _clique(range(c, d)) + _clique(range(d, n)))
    edges += [(a, b), (b + 1, c), (b + 2, d), (c + 1, d + 1)]
    truth = Partition(np.repeat([0, 1, 2, 3], [p, p, q, q]))
    return Graph.from_edges(n, edges), truth


def gen_two_cliques_bridge(a: int, b: int) -> Graph:
    """K_a and K_b joined by one edge between nodes labelled 1 and 2.

    Node 1 is in K_a, node 2 in K_b; the rest of K_a is labelled
    3..a+1 and the rest of K_b follows.
    """
    if not a >= b >= 3:
        raise ValueError("need a >= b >= 3")
    big = [0] + list(range(2, a + 1))
    small = [1] + list(range(a + 1, a + b))
    edges = _clique(big) + _clique(small) + [(0, 1)]
    return Graph.from_edges(a + b, edges)


# cross pairs left out of the well-connected graph (1-based labels)
_MISSING_CROSS = {(1, 5), (2, 6), (3, 7), (4, 8), (1, 6), (2, 7)}


def gen_well_connected() -> Graph:
    """Two 4-cliques {1..4} and {5..8} with 10 edges between them."""
    edges = _clique(range(4)) + _clique(range(4, 8))
    edges += [(u - 1, v - 1) for u in range(1, 5) for v in range(5, 9)
              if (u, v) not in _MISSING_CROSS]
    return Graph.from_edges(8, edges)


def gen_er(n: int, p_edge: float, seed=None) -> Graph:
    """Erdos-Renyi G(n, p)."""
    if n < 1 or not 0 <= p_edge <= 1:
        raise ValueError("need n >= 1 and 0 <= p_edge <= 1")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p_edge
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("need n >= 1")
    return Graph.from_edges(n, _clique(range(n)))


# --------------------------------------------------------------------------
# closed forms


def f2_closed_random_split(n1: int, n2: int) -> float:
    """F2 of splitting a complete graph (or, in expectation, a random
    graph) on ``n1 + n2`` nodes into parts of ``n1`` and ``n2``."""
    if n1 < 2 or n2 < 2:
        raise ValueError("both parts need at least 2 nodes")
    n = n1 + n2
    return 1 - (2 * n1 * n2 - 1) / (n - 1) ** 2


def f2_closed_ring(l: int, p: int, h: int = 1) -> float:
    """F2 of a ring of ``l`` ``p``-cliques with runs of ``h`` cliques merged."""
    if l < 3 or p < 3:
        raise ValueError("need l >= 3 and p >= 3")
    if h < 1 or h > l or l % h:
        raise ValueError("h must divide l")
    c = p * (p - 1)
    if h == l:
        # one community holding the whole ring: no edge leaves it
        return 1.0
    if h == 1:
        return l * (c / (c + 2)) ** 2
    return (l / h) * ((c * h + 2 * (h - 1)) / (c * h + 2 * h)) ** 2


def f2_closed_pq(p: int, q: int, merged: bool = False) -> float:
    """F2 of :func:`gen_pq_network`, with the two small cliques apart or merged."""
    if not p > q >= 3:
        raise ValueError("need p > q >= 3")
    cp, cq = p * (p - 1), q * (q - 1)
    big = (cp / (cp + 1)) ** 2 + (cp / (cp + 3)) ** 2
    if merged:
        return big + ((cq + 1) / (cq + 2)) ** 2
    return big + 2 * (cq / (cq + 2)) ** 2


# --------------------------------------------------------------------------
# LFR benchmark


class LfrError(RuntimeError):
    """Raised when an LFR graph cannot be built from the given parameters."""


@dataclass(frozen=True)
class LfrParams:
    n: int = 500
    avg_k: float = 20.0
    max_k: int = 50
    gamma: float = 2.5
    beta: float = 1.5
    mu: float = 0.1
    s_min: int = 20
    s_max: int = 100
    mu_tol: float = 0.05
    max_sweeps: int = 1000

    def __post_init__(self):
        if not 2 < self.gamma < 3:
            raise ValueError("gamma must lie in (2, 3)")
        if not 1 < self.beta < 2:
            raise ValueError("beta must lie in (1, 2)")
        if not 0 <= self.mu < 1:
            raise ValueError("mu must lie in [0, 1)")
        if not 1 <= self.avg_k < self.max_k < self.n:
            raise ValueError("need 1 <= avg_k < max_k < n")
        if not 1 <= self.s_min <= self.s_max <= self.n:
            raise ValueError("need 1 <= s_min <= s_max <= n")
        k_min = self.k_min
        if not (self.s_min > k_min and self.s_max > self.max_k):
            raise ValueError(
                f"community sizes must exceed degrees: s_min={self.s_min} needs to be "
                f"> k_min={k_min:.2f} and s_max={self.s_max} > max_k={self.max_k}")

    @property
    def k_min(self) -> float:
        """Lower cutoff of the degree power law that gives mean ``avg_k``."""
        return _solve_xmin(self.avg_k, self.max_k, self.gamma)

    def scaled(self, n: int) -> "LfrParams":
        """Same parameters with community-size bounds scaled to ``n`` nodes."""
        f = n / self.n
        return LfrParams(**{**asdict(self), "n": n,
                            "s_min": self.s_min, "s_max": max(self.s_max, round(self.s_max * f))})


def _pl_mean(a: float, b: float, g: float) -> float:
    # mean of a continuous power law x^-g on [a, b]
    return ((1 - g) / (2 - g)) * (b ** (2 - g) - a ** (2 - g)) / (b ** (1 - g) - a ** (1 - g))


def _solve_xmin(mean: float, b: float, g: float) -> float:
    lo, hi = 1e-9, float(b)
    if _pl_mean(1.0, b, g) > mean:
        raise ValueError(f"mean degree {mean} is too small for max_k={b}")
    lo = 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _pl_mean(mid, b, g) < mean:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _pl_sample(rng, a: float, b: float, g: float, size: int) -> np.ndarray:
    u = rng.random(size)
    e = 1 - g
    return (a ** e + u * (b ** e - a ** e)) ** (1 / e)


def _degree_sequence(p: LfrParams, rng) -> np.ndarray:
    x_min = p.k_min
    deg = np.rint(_pl_sample(rng, x_min, p.max_k, p.gamma, p.n)).astype(np.int64)
    deg = np.clip(deg, max(1, math.ceil(x_min)), p.max_k)
    target = int(round(p.avg_k * p.n))
    if target % 2:
        target += 1
    lo, hi = max(1, math.ceil(x_min)), p.max_k
    # nudge random nodes until the sum hits the (even) target exactly
    while deg.sum() != target:
        step = 1 if deg.sum() < target else -1
        movable = np.flatnonzero(deg < hi) if step > 0 else np.flatnonzero(deg > lo)
        if movable.size == 0:
            raise LfrError("cannot reach the requested mean degree")
        deg[rng.choice(movable)] += step
    return deg


def _community_sizes(p: LfrParams, rng) -> list[int]:
    sizes: list[int] = []
    total = 0
    while total < p.n:
        s = int(round(_pl_sample(rng, p.s_min, p.s_max, p.beta, 1)[0]))
        sizes.append(s)
        total += s
    sizes[-1] -= total - p.n
    if sizes[-1] < p.s_min:
        # too small: spread its nodes over communities with room
        spare = sizes.pop()
        while spare:
            room = [i for i, s in enumerate(sizes) if s < p.s_max]
            if not room:
                raise LfrError("community sizes cannot sum to n within [s_min, s_max]")
            sizes[room[int(rng.integers(len(room)))]] += 1
            spare -= 1
    return sizes


def _assign(k_in: np.ndarray, sizes: list[int], rng, max_steps: int) -> np.ndarray:
    n = k_in.size
    member = np.full(n, -1, dtype=np.int64)
    groups: list[list[int]] = [[] for _ in sizes]
    cap = np.asarray(sizes)
    homeless = rng.permutation(n).tolist()
    steps = 0
    while homeless:
        steps += 1
        if steps > max_steps:
            raise LfrError("could not fit nodes into communities")
        v = homeless.pop()
        fits = np.flatnonzero(cap - 1 >= k_in[v])
        if fits.size == 0:
            raise LfrError(f"node with internal degree {k_in[v]} fits no community "
                           f"(largest has {cap.max()} nodes)")
        c = int(fits[rng.integers(fits.size)])
        if len(groups[c]) >= cap[c]:
            out = groups[c].pop(int(rng.integers(len(groups[c]))))
            member[out] = -1
            homeless.append(out)
        groups[c].append(v)
        member[v] = c
    return member


def _pair_stubs(stubs: list[int], rng) -> list[list[int]]:
    stubs = rng.permutation(np.asarray(stubs, dtype=np.int64)).tolist()
    return [[stubs[i], stubs[i + 1]] for i in range(0, len(stubs), 2)]


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _rewire(edges: list[list[int]], seen: Counter, ok, rng, sweeps: int) -> list[int]:
    """Swap endpoints until no edge is a loop, a repeat or fails ``ok``.

    Returns the indices of edges still bad after ``sweeps`` passes.
    """

    def bad(e):
        u, v = e
        return u == v or seen[_key(u, v)] > 1 or not ok(u, v)

    todo = [i for i, e in enumerate(edges) if bad(e)]
    for _ in range(sweeps):
        if not todo:
            break
        for i in todo:
            if not bad(edges[i]):
                continue
            for _ in range(20):
                j = int(rng.integers(len(edges)))
                if j == i:
                    continue
                a, b = edges[i]
                c, d = edges[j]
                if rng.random() < 0.5:
                    c, d = d, c
                # (a, b), (c, d) -> (a, d), (c, b)
                if a == d or c == b or not ok(a, d) or not ok(c, b):
                    continue
                if _key(a, d) == _key(c, b):
                    continue
                if seen[_key(a, d)] or seen[_key(c, b)]:
                    continue
                seen[_key(a, b)] -= 1
                seen[_key(*edges[j])] -= 1
                seen[_key(a, d)] += 1
                seen[_key(c, b)] += 1
                edges[i], edges[j] = [a, d], [c, b]
                break
        todo = [i for i, e in enumerate(edges) if bad(e)]
    return todo


def _havel_hakimi(nodes, degrees, rng) -> list[list[int]]:
    """Simple graph with (as nearly as possible) the given degrees.

    Repeatedly joins the node with most remaining stubs to the next
    highest ones; ties are broken at random.  Stubs that cannot be
    placed are dropped.
    """
    rest = {int(v): int(d) for v, d in zip(nodes, degrees)}
    jitter = {v: rng.random() for v in rest}
    edges = []
    while True:
        order = sorted((v for v in rest if rest[v] > 0),
                       key=lambda v: (-rest[v], jitter[v]))
        if not order:
            return edges
        v, others = order[0], order[1:]
        d = rest[v]
        rest[v] = 0
        for u in others[:d]:
            rest[u] -= 1
            edges.append([v, u])


def _shuffle_edges(edges, seen, rng, tries: int) -> None:
    """Randomize a simple edge list by degree-preserving swaps."""
    m = len(edges)
    if m < 2:
        return
    for _ in range(tries):
        i, j = rng.integers(m, size=2)
        if i == j:
            continue
        a, b = edges[i]
        c, d = edges[j]
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4 or seen[_key(a, d)] or seen[_key(c, b)]:
            continue
        seen[_key(a, b)] -= 1
        seen[_key(c, d)] -= 1
        seen[_key(a, d)] += 1
        seen[_key(c, b)] += 1
        edges[i], edges[j] = [a, d], [c, b]


def gen_lfr(params: LfrParams, seed=None) -> tuple[Graph, Partition]:
    """LFR benchmark graph and its planted partition.

    Degrees follow a power law with exponent ``gamma`` between ``k_min``
    (chosen so the mean is ``avg_k``) and ``max_k``; community sizes
    follow a power law with exponent ``beta`` between ``s_min`` and
    ``s_max``.  Each node keeps about ``(1 - mu)`` of its edges inside
    its community.  Edges are wired configuration-model style and then
    rewired to remove loops and repeats; every node's share of external
    edges ends within ``mu_tol`` of ``mu``.
    """
    p = params
    rng = np.random.default_rng(seed)
    deg = _degree_sequence(p, rng)
    k_in = np.rint((1 - p.mu) * deg).astype(np.int64)
    sizes = _community_sizes(p, rng)
    member = _assign(k_in, sizes, rng, max_steps=100 * p.n)

    # each community needs an even number of internal stubs; move one
    # stub across the boundary at the node whose mixing it disturbs least
    for c in range(len(sizes)):
        nodes = np.flatnonzero(member == c)
        if k_in[nodes].sum() % 2 == 0:
            continue
        options = []
        for v in nodes.tolist():
            for step in (-1, 1):
                new_in = k_in[v] + step
                if 0 <= new_in <= min(deg[v], nodes.size - 1):
                    options.append((abs((deg[v] - new_in) / deg[v] - p.mu), v, step))
        _, v, step = min(options)
        k_in[v] += step
    k_out = deg - k_in
    if k_out.sum() % 2:
        raise LfrError("odd number of external stubs")  # unreachable: both sums even

    seen: Counter = Counter()
    internal: list[list[int]] = []
    for c in range(len(sizes)):
        nodes = np.flatnonzero(member == c)
        stubs = np.repeat(nodes, k_in[nodes]).tolist()
        block = _pair_stubs(stubs, rng)
        for u, v in block:
            seen[_key(u, v)] += 1
        left = _rewire(block, seen, lambda u, v: True, rng, p.max_sweeps)
        if left:
            # near-complete blocks can jam the swaps; build directly instead
            for u, v in block:
                seen[_key(u, v)] -= 1
            block = _havel_hakimi(nodes, k_in[nodes], rng)
            for u, v in block:
                seen[_key(u, v)] += 1
            _shuffle_edges(block, seen, rng, 10 * len(block))
            got = np.bincount(np.asarray(block, dtype=np.int64).ravel(), minlength=p.n)
            k_out[nodes] += k_in[nodes] - got[nodes]
            left = []
        # leftovers become external stubs
        for i in sorted(left, reverse=True):
            u, v = block.pop(i)
            seen[_key(u, v)] -= 1
            k_out[u] += 1
            k_out[v] += 1
        internal += block

    external = _pair_stubs(np.repeat(np.arange(p.n), k_out).tolist(), rng)
    for u, v in external:
        seen[_key(u, v)] += 1
    left = _rewire(external, seen, lambda u, v: member[u] != member[v], rng, p.max_sweeps)
    if left:
        raise LfrError(f"{len(left)} external edges could not be rewired")

    graph = Graph.from_edges(p.n, [tuple(e) for e in internal + external])
    truth = Partition(member)
    frac = mixing_fractions(graph, truth)
    worst = float(np.max(np.abs(frac - p.mu)))
    if worst > p.mu_tol + 1e-12:
        raise LfrError(f"mixing off target: mean mu {frac.mean():.4f}, "
                       f"worst node off by {worst:.4f}")
    return graph, truth


def mixing_fractions(graph: Graph, partition: Partition) -> np.ndarray:
    """Per node, the share of its edges that leave its community."""
    m = partition.membership
    out = np.zeros(graph.node_count)
    for v, nb in enumerate(graph.adjacency):
        if nb:
            out[v] = sum(1 for u in nb if m[u] != m[v]) / len(nb)
    return out
