"""Simple undirected graphs, partitions, and their text formats.

Nodes carry arbitrary string labels externally and dense integer ids
``0..n-1`` internally.  Every algorithm in the package works on the
internal ids; labels only matter when reading or writing files.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "Partition",
    "ParseError",
    "UNASSIGNED",
    "load_graph",
    "read_graph",
    "write_edgelist",
    "write_partition",
    "load_partition",
    "read_partition",
    "partial_membership",
]

UNASSIGNED = -1


class ParseError(ValueError):
    """Raised for malformed graph or partition text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _label_key(label: str):
    # numeric labels sort numerically, everything else after them by text
    try:
        return (0, int(label), "")
    except ValueError:
        return (1, 0, label)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph.

    Build one with :meth:`from_edges` rather than the constructor; it
    drops self-loops and collapses duplicate edges, recording how many of
    each it saw in ``self_loops`` and ``duplicates``.
    """

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    self_loops: int = 0
    duplicates: int = 0

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        if labels is None:
            labels = [str(i + 1) for i in range(n)]
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        loops = dups = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} nodes")
            if u == v:
                loops += 1
            elif v in nbrs[u]:
                dups += 1
            else:
                nbrs[u].add(v)
                nbrs[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        return cls(tuple(str(x) for x in labels), adjacency, loops, dups)

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    def __len__(self) -> int:
        return len(self.adjacency)

    @cached_property
    def degree(self) -> np.ndarray:
        deg = np.fromiter((len(a) for a in self.adjacency), dtype=np.int64,
                          count=len(self.adjacency))
        deg.flags.writeable = False
        return deg

    @cached_property
    def edge_count(self) -> int:
        return int(self.degree.sum()) // 2

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label) -> int:
        """Internal id of the node with the given label."""
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"no node labelled {label!r}") from None

    def indices(self, labels: Iterable) -> list[int]:
        return [self.index(x) for x in labels]

    def label_set(self, nodes: Iterable[int]) -> set[str]:
        return {self.labels[i] for i in nodes}

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    @property
    def mean_degree(self) -> float:
        return 2.0 * self.edge_count / self.node_count if self.node_count else 0.0

    def components(self) -> list[list[int]]:
        seen = np.zeros(self.node_count, dtype=bool)
        out = []
        for s in range(self.node_count):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in self.adjacency[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            out.append(sorted(comp))
        return out

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


@dataclass(frozen=True, eq=False)
class Partition:
    """Total assignment of nodes to disjoint, non-empty communities.

    ``membership[i]`` is the community id of node ``i``; ids are dense
    integers starting at 0, numbered in order of first appearance.
    """

    membership: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.asarray(self.membership, dtype=np.int64)
        if m.ndim != 1:
            raise ValueError("membership must be one-dimensional")
        if m.size and m.min() < 0:
            raise ValueError("partition must assign every node")
        m = _densify(m)
        m.flags.writeable = False
        object.__setattr__(self, "membership", m)

    @classmethod
    def from_communities(cls, communities: Iterable[Iterable[int]], n: int) -> "Partition":
        m = np.full(n, UNASSIGNED, dtype=np.int64)
        for c, members in enumerate(communities):
            for v in members:
                if m[v] != UNASSIGNED:
                    raise ValueError(f"node {v} appears in two communities")
                m[v] = c
        if (m == UNASSIGNED).any():
            missing = np.flatnonzero(m == UNASSIGNED).tolist()
            raise ValueError(f"nodes not covered: {missing[:10]}")
        return cls(m)

    @property
    def n_nodes(self) -> int:
        return int(self.membership.size)

    @property
    def n_communities(self) -> int:
        return int(self.membership.max()) + 1 if self.membership.size else 0

    def __len__(self) -> int:
        return self.n_communities

    def communities(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n_communities)]
        for v, c in enumerate(self.membership.tolist()):
            out[c].append(v)
        return out

    def sizes(self) -> list[int]:
        return np.bincount(self.membership, minlength=self.n_communities).tolist()

    def canonical(self) -> tuple[frozenset[int], ...]:
        """Label-free form, for comparing partitions up to relabeling."""
        return tuple(sorted((frozenset(c) for c in self.communities()), key=min))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return np.array_equal(self.membership, other.membership)

    def __hash__(self) -> int:
        return hash(self.membership.tobytes())


def _densify(m: np.ndarray) -> np.ndarray:
    """Renumber non-negative ids by first appearance; keep -1 entries."""
    out = np.full(m.shape, UNASSIGNED, dtype=np.int64)
    mapping: dict[int, int] = {}
    for i, c in enumerate(m.tolist()):
        if c < 0:
            continue
        if c not in mapping:
            mapping[c] = len(mapping)
        out[i] = mapping[c]
    return out


def partial_membership(m: Sequence[int]) -> np.ndarray:
    """Densified copy of a partial assignment (-1 marks unassigned nodes)."""
    return _densify(np.asarray(m, dtype=np.int64))


# --------------------------------------------------------------------------
# edge lists and GML
# --------------------------------------------------------------------------

def _parse_edgelist(text: str) -> Graph:
    labels: list[str] = []
    index: dict[str, int] = {}
    pairs: list[tuple[int, int]] = []

    def node(tok: str) -> int:
        if tok not in index:
            index[tok] = len(labels)
            labels.append(tok)
        return index[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two node tokens, got {len(parts)}", lineno)
        pairs.append((node(parts[0]), node(parts[1])))
    if not labels:
        raise ParseError("empty graph input")
    return Graph.from_edges(len(labels), pairs, labels)


_GML_TOKEN = re.compile(r'"[^"]*"|\[|\]|[^\s\[\]]+')


def _gml_tokens(text: str) -> Iterator[tuple[str, int]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        for tok in _GML_TOKEN.findall(line):
            yield tok, lineno


def _gml_parse_list(tokens, closing: bool):
    """Parse ``key value`` pairs until ``]`` (or end of input at top level)."""
    items = []
    for key, lineno in tokens:
        if key == "]":
            if not closing:
                raise ParseError("unbalanced ']'", lineno)
            return items
        if key == "[":
            raise ParseError("list without a key", lineno)
        try:
            value, vline = next(tokens)
        except StopIteration:
            raise ParseError(f"key {key!r} has no value", lineno) from None
        if value == "[":
            value = _gml_parse_list(tokens, closing=True)
        elif value == "]":
            raise ParseError(f"key {key!r} has no value", vline)
        items.append((key, value, lineno))
    if closing:
        raise ParseError("unterminated '[' at end of input")
    return items


def _gml_scalar(value, lineno: int) -> str:
    if isinstance(value, list):
        raise ParseError("expected a scalar value", lineno)
    if value.startswith('"'):
        return value[1:-1]
    # integer ids written as floats ("3.0") are still the same node
    try:
        f = float(value)
        if f.is_integer():
            return str(int(f))
    except ValueError:
        pass
    return value


def _parse_gml(text: str) -> Graph:
    top = _gml_parse_list(_gml_tokens(text), closing=False)
    graphs = [(v, ln) for k, v, ln in top if k == "graph"]
    if not graphs:
        raise ParseError("no 'graph [ ... ]' block found")
    body, gline = graphs[0]
    if not isinstance(body, list):
        raise ParseError("'graph' must be a list", gline)

    labels: list[str] = []
    index: dict[str, int] = {}
    raw_edges: list[tuple[str, str, int]] = []
    for key, value, lineno in body:
        if key == "node":
            if not isinstance(value, list):
                raise ParseError("'node' must be a list", lineno)
            ids = [_gml_scalar(v, ln) for k, v, ln in value if k == "id"]
            if len(ids) != 1:
                raise ParseError("node needs exactly one 'id'", lineno)
            if ids[0] in index:
                raise ParseError(f"duplicate node id {ids[0]}", lineno)
            index[ids[0]] = len(labels)
            labels.append(ids[0])
        elif key == "edge":
            if not isinstance(value, list):
                raise ParseError("'edge' must be a list", lineno)
            src = [_gml_scalar(v, ln) for k, v, ln in value if k == "source"]
            dst = [_gml_scalar(v, ln) for k, v, ln in value if k == "target"]
            if len(src) != 1 or len(dst) != 1:
                raise ParseError("edge needs one 'source' and one 'target'", lineno)
            raw_edges.append((src[0], dst[0], lineno))
    if not labels:
        raise ParseError("graph has no nodes")
    pairs = []
    for s, t, lineno in raw_edges:
        for end in (s, t):
            if end not in index:
                raise ParseError(f"edge endpoint {end} is not a declared node", lineno)
        pairs.append((index[s], index[t]))
    return Graph.from_edges(len(labels), pairs, labels)


def load_graph(text: str | bytes, format: str = "edgelist") -> Graph:
    """Parse graph text in ``edgelist`` or ``gml`` format."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if not text.strip():
        raise ParseError("empty graph input")
    if format == "edgelist":
        return _parse_edgelist(text)
    if format == "gml":
        return _parse_gml(text)
    raise ValueError(f"unknown graph format {format!r}")


def read_graph(path, format: str | None = None) -> Graph:
    """Read a graph file; the format defaults from the file extension."""
    path = str(path)
    if format is None:
        format = "gml" if path.lower().endswith(".gml") else "edgelist"
    with open(path, "rb") as fh:
        return load_graph(fh.read(), format)


def write_edgelist(graph: Graph) -> str:
    return "".join(f"{graph.labels[u]} {graph.labels[v]}\n" for u, v in graph.edges())


# --------------------------------------------------------------------------
# partitions
# --------------------------------------------------------------------------

def write_partition(partition: Partition, labels: Sequence[str]) -> str:
    """Render ``label<TAB>community`` lines sorted by label."""
    if len(labels) != partition.n_nodes:
        raise ValueError("label count does not match partition size")
    m = partition.membership
    order = sorted(range(len(labels)), key=lambda i: _label_key(labels[i]))
    return "".join(f"{labels[i]}\t{m[i]}\n" for i in order)


def load_partition(text: str | bytes, graph: Graph) -> Partition:
    """Parse ``label<TAB>community`` lines against the nodes of ``graph``."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    m = np.full(graph.node_count, UNASSIGNED, dtype=np.int64)
    community_ids: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected 'label community'", lineno)
        label, comm = parts
        try:
            v = graph.index(label)
        except KeyError:
            raise ParseError(f"unknown node {label!r}", lineno) from None
        if m[v] != UNASSIGNED:
            raise ParseError(f"duplicate node {label!r}", lineno)
        m[v] = community_ids.setdefault(comm, len(community_ids))
    missing = np.flatnonzero(m == UNASSIGNED)
    if missing.size:
        names = ", ".join(graph.labels[i] for i in missing[:10])
        raise ParseError(f"partition is missing node(s): {names}")
    return Partition(m)


def read_partition(path, graph: Graph) -> Partition:
    with open(path, "rb") as fh:
        return load_partition(fh.read(), graph)
