import math
import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lcif2.graph import Graph, Partition
from lcif2.modularity import (CommunityState, community_counts, f2_community, f2_delta,
                              f2_score, f_score, m_score, make_objective, q_score, r_score,
                              score)
from lcif2.synth import gen_complete, gen_ring_cliques, gen_well_connected, ring_merged_partition


# --- brute-force oracle, one community at a time -------------------------

def oracle_terms(graph, membership):
    """Per-community (d_in, d_out, E_in, E_out, B_in, B_out) by direct counting."""
    edges = list(graph.edges())
    out = []
    for c in sorted(set(membership) - {-1}):
        members = {v for v, x in enumerate(membership) if x == c}
        inside = [(u, v) for u, v in edges if u in members and v in members]
        leaving = [(u, v) for u, v in edges if (u in members) != (v in members)]
        boundary = {u for e in leaving for u in e if u in members}
        b_in = sum(1 for u, v in inside if u in boundary or v in boundary)
        out.append((2 * len(inside), len(leaving), len(inside), len(leaving), b_in, len(leaving)))
    return out


def oracle_scores(graph, membership):
    L = graph.edge_count
    terms = oracle_terms(graph, membership)
    q = sum(ei / L - ((di + do) / (2 * L)) ** 2 for di, do, ei, *_ in terms)
    r = sum(bi / (bi + bo) if bo else 1.0 for *_, bi, bo in terms)
    m = sum(ei / eo if eo else math.inf for _, _, ei, eo, _, _ in terms)
    f = sum(di / (di + do) if di + do else 0.0 for di, do, *_ in terms)
    f2 = sum((di / (di + do)) ** 2 if di + do else 0.0 for di, do, *_ in terms)
    return {"q": q, "r": r, "m": m, "f": f, "f2": f2}


# --- fixed values on small constructions ---------------------------------

@pytest.fixture
def ring():
    g, single = gen_ring_cliques(10, 3)
    return g, single, ring_merged_partition(10, 3, 2)


def test_q_ring(ring):
    g, single, pairs = ring
    assert q_score(g, single).value == pytest.approx(0.65, abs=1e-12)
    assert q_score(g, pairs).value == pytest.approx(0.675, abs=1e-12)


def test_r_ring(ring):
    # each 3-clique has 2 boundary nodes touching all 3 internal edges, and 2 bridges
    g, single, pairs = ring
    s = r_score(g, single)
    assert s.per_community == pytest.approx([0.6] * 10, abs=1e-15)
    assert s.value == pytest.approx(6.0, abs=1e-12)
    assert s.value == pytest.approx(oracle_scores(g, single.membership)["r"], abs=1e-12)


def test_m_ring(ring):
    g, single, pairs = ring
    assert m_score(g, single).value == pytest.approx(15.0, abs=1e-12)
    assert m_score(g, pairs).value == pytest.approx(17.5, abs=1e-12)
    assert m_score(g, Partition(np.zeros(30, int))).value == math.inf


def test_f2_ring(ring):
    g, single, pairs = ring
    assert f2_score(g, single).value == pytest.approx(5.625, abs=1e-12)
    assert f2_score(g, pairs).value == pytest.approx(3.828125, abs=1e-12)


def test_whole_connected_graph(ring):
    g = ring[0]
    whole = Partition(np.zeros(g.node_count, int))
    assert q_score(g, whole).value == pytest.approx(0.0, abs=1e-15)
    assert r_score(g, whole).value == 1.0
    assert f_score(g, whole).value == 1.0
    assert f2_score(g, whole).value == 1.0


def test_isolated_clique_r_is_one():
    g = gen_complete(4)
    assert r_score(g, Partition([0, 0, 0, 0])).per_community == [1.0]


def test_well_connected_scores():
    g = gen_well_connected()
    split = Partition([0, 0, 0, 0, 1, 1, 1, 1])
    whole = Partition([0] * 8)
    assert g.edge_count == 22
    assert f_score(g, split).value == pytest.approx(24 / 22, abs=1e-12)
    assert f2_score(g, split).value == pytest.approx(2 * (12 / 22) ** 2, abs=1e-12)
    assert q_score(g, split).value == pytest.approx(2 * (6 / 22 - 0.25), abs=1e-12)
    assert q_score(g, split).value > q_score(g, whole).value
    assert f_score(g, split).value > f_score(g, whole).value
    assert f2_score(g, split).value < f2_score(g, whole).value


def test_f2_community_values():
    assert f2_community(6, 2) == 0.5625
    assert f2_community(10, 0) == 1.0
    assert f2_community(0, 0) == 0.0
    assert f2_community(12, 10) == pytest.approx(0.29752, abs=1e-5)


def test_f_alpha():
    g, single = gen_ring_cliques(4, 3)
    # each 3-clique has d_in = 6, d_out = 2
    assert f_score(g, single, alpha=2).per_community[0] == pytest.approx(6 / 64, abs=1e-15)
    per = f_score(g, single, alpha=0.5).per_community
    assert per[0] == pytest.approx(6 / math.sqrt(8), abs=1e-12)


def test_q_needs_edges():
    with pytest.raises(ValueError):
        q_score(Graph.from_edges(2, []), Partition([0, 1]))


def test_unknown_function():
    with pytest.raises(ValueError):
        score(gen_complete(3), Partition([0, 0, 0]), "z")


# --- incremental F2 --------------------------------------------------------

def test_f2_delta_first_step_in_k5():
    g = gen_complete(5)
    state = CommunityState(g, 0)
    assert (state.d_in, state.d_out) == (0, 4)
    assert f2_delta(state, 1, g) == pytest.approx(0.0625, abs=1e-15)
    assert (state.d_in, state.d_out) == (0, 4)


def test_f2_delta_no_links_is_negative():
    g, _ = gen_ring_cliques(4, 3)
    state = CommunityState(g, 0)
    state.add(1)
    assert f2_delta(state, 6, g) < 0


def test_f2_delta_completing_isolated_clique():
    g = gen_complete(4)
    state = CommunityState(g, 0)
    state.add(1)
    state.add(2)
    before = state.f2
    assert f2_delta(state, 3) == pytest.approx(1 - before, abs=1e-15)


def test_f2_delta_rejects_member():
    g = gen_complete(3)
    with pytest.raises(ValueError):
        f2_delta(CommunityState(g, 0), 0)


# --- random graphs ----------------------------------------------------------

cases = st.integers(3, 18).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), min_size=1, max_size=50),
    st.lists(st.integers(0, 4), min_size=n, max_size=n)))


@given(cases)
@settings(max_examples=200, deadline=None)
def test_scores_match_oracle(case):
    n, pairs, labels = case
    g = Graph.from_edges(n, pairs)
    if g.edge_count == 0:
        return
    p = Partition(labels)
    want = oracle_scores(g, p.membership.tolist())
    for name in ("q", "r", "f", "f2"):
        got = score(g, p, name)
        assert got.value == pytest.approx(want[name], abs=1e-12)
        assert math.fsum(got.per_community) == pytest.approx(got.value, abs=1e-12)
    assert m_score(g, p).value == pytest.approx(want["m"], abs=1e-12)
    # Q agrees with networkx
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(g.edges())
    comms = [set(c) for c in p.communities()]
    assert q_score(g, p).value == pytest.approx(nx.community.modularity(nxg, comms), abs=1e-12)


@given(cases)
@settings(max_examples=200, deadline=None)
def test_score_identities(case):
    n, pairs, labels = case
    g = Graph.from_edges(n, pairs)
    p = Partition(labels)
    f2 = f2_score(g, p)
    f = f_score(g, p)
    assert 0 <= f2.value <= p.n_communities
    for a, b in zip(f2.per_community, f.per_community):
        assert 0 <= a <= 1
        assert a == pytest.approx(b * b, abs=1e-15)
    if g.edge_count:
        assert q_score(g, p).value <= 1
        if len(g.components()) == 1:
            assert q_score(g, Partition([0] * n)).value == pytest.approx(0, abs=1e-12)


def test_partial_membership_counts_unassigned_as_outside():
    g = gen_complete(4)
    d_in, d_out = community_counts(g, [0, 0, -1, -1])
    assert d_in.tolist() == [2] and d_out.tolist() == [4]


@pytest.mark.parametrize("l", range(6, 13))
@pytest.mark.parametrize("p", range(3, 7))
def test_single_cliques_beat_every_merge(l, p):
    g, single = gen_ring_cliques(l, p)
    best = f2_score(g, single).value
    for h in range(2, l // 2 + 1):
        if l % h == 0:
            assert best > f2_score(g, ring_merged_partition(l, p, h)).value


# --- community state and greedy keys ----------------------------------------

def random_trace(seed):
    rnd = random.Random(seed)
    n = rnd.randint(4, 25)
    pairs = [(rnd.randrange(n), rnd.randrange(n)) for _ in range(rnd.randint(n, 4 * n))]
    g = Graph.from_edges(n, pairs)
    start = rnd.randrange(n)
    state = CommunityState(g, start)
    order = [v for v in range(n) if v != start]
    rnd.shuffle(order)
    return g, state, order


@pytest.mark.parametrize("seed", range(50))
def test_counters_match_recount(seed):
    g, state, order = random_trace(seed)
    for v in order:
        state.add(v)
        assert state.d_in % 2 == 0
        assert (state.d_in, state.d_out) == state.recount()
        assert state.d_in + state.d_out == sum(int(g.degree[u]) for u in state.members)
        assert state.frontier == {w: sum(u in state.members for u in g.adjacency[w])
                                  for w in range(g.node_count)
                                  if w not in state.members
                                  and any(u in state.members for u in g.adjacency[w])}


def community_scores(g, members, name):
    m = [0 if v in members else -1 for v in range(g.node_count)]
    return score(g, m, name).value


@pytest.mark.parametrize("name", ["q", "r", "f2"])
@pytest.mark.parametrize("seed", range(40))
def test_objective_keys_track_recomputed_scores(name, seed):
    g, state, order = random_trace(seed)
    if g.edge_count == 0:
        return
    obj = make_objective(name, g)
    obj.start(state)
    for v in order:
        e = state.links(v)
        key = obj.key(state, v, e)
        before = community_scores(g, state.members, name)
        after = community_scores(g, state.members | {v}, name)
        if name == "q":
            assert key / (4 * g.edge_count ** 2) == pytest.approx(after - before, abs=1e-12)
        elif name == "r":
            assert key == pytest.approx(after, abs=1e-12)
            assert obj.current(state) == pytest.approx(before, abs=1e-12)
        else:
            assert key ** 2 == pytest.approx(after, abs=1e-12)
        state.add(v)
        obj.added(state, v, e)
