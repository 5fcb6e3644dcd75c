"""
Five quality functions on small graphs
======================================

Q, R, M, F and F2 scored on a ring of triangles (split vs merged in
pairs) and on two 4-cliques joined by many edges (split vs whole).
F2 is the only one that picks the intended answer on both.
"""

from lcif2 import Partition, score
from lcif2.modularity import OBJECTIVES
from lcif2.synth import gen_ring_cliques, gen_well_connected, ring_merged_partition

ring, cliques = gen_ring_cliques(10, 3)
pairs = ring_merged_partition(10, 3, 2)

dense = gen_well_connected()
split = Partition([0] * 4 + [1] * 4)
whole = Partition([0] * 8)

print(f"{'':>4}" + "".join(f"{h:>14}" for h in ("ring single", "ring pairs", "dense split", "dense whole")))
for name in OBJECTIVES:
    row = [score(ring, cliques, name).value, score(ring, pairs, name).value,
           score(dense, split, name).value, score(dense, whole, name).value]
    print(f"{name:>4}" + "".join(f"{x:>14.4f}" for x in row))

###############################################################################
# Each score is a sum of per-community terms.

print(score(ring, pairs, "f2").per_community)
