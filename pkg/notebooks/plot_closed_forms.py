"""
Closed forms against direct scoring
===================================

For rings of cliques, the two-scale network and split complete graphs,
F2 has a closed form.  Here the closed forms are checked against the
generated graphs, and the ring curve shows why merging never pays.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from lcif2 import Partition, f2_score, q_score
from lcif2.synth import (f2_closed_pq, f2_closed_random_split, f2_closed_ring, gen_complete,
                         gen_pq_network, gen_ring_cliques, ring_merged_partition)

l, p = 12, 4
graph, _ = gen_ring_cliques(l, p)
hs = [h for h in range(1, l + 1) if l % h == 0]
direct = [f2_score(graph, ring_merged_partition(l, p, h)).value for h in hs]
closed = [f2_closed_ring(l, p, h) for h in hs]
q = [q_score(graph, ring_merged_partition(l, p, h)).value for h in hs]
print("largest gap on the ring:", max(abs(a - b) for a, b in zip(direct, closed)))

fig, (a1, a2) = plt.subplots(1, 2, figsize=(8, 3))
a1.plot(hs, closed, "o-", label="F2")
a1.set_xlabel("cliques per community")
a1.set_ylabel("F2")
a1b = a1.twinx()
a1b.plot(hs, q, "s--", color="C1", label="Q")
a1b.set_ylabel("Q")

###############################################################################
# Two big cliques and two small ones: keeping the small pair apart wins.

graph, truth = gen_pq_network(6, 3)
print("pq apart ", f2_score(graph, truth).value, f2_closed_pq(6, 3))
merged = Partition([min(c, 2) for c in truth.membership])
print("pq merged", f2_score(graph, merged).value, f2_closed_pq(6, 3, merged=True))

###############################################################################
# Splitting a complete graph always scores below leaving it whole (F2 = 1).

n = 30
splits = range(2, n - 1)
a2.plot(list(splits), [f2_closed_random_split(k, n - k) for k in splits])
a2.plot(list(splits), [f2_score(gen_complete(n), Partition([0] * k + [1] * (n - k))).value
                       for k in splits], "k.", ms=3)
a2.set_xlabel("size of first part")
a2.set_ylabel("F2 of the split")
fig.tight_layout()
fig.savefig("closed_forms.png", dpi=120)
