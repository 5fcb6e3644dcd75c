"""
Local centrality on the karate club
===================================

LCI compares a node's degree with the degrees around it.  Only a handful
of karate members score above zero, and those are the seeds from which
communities grow.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from lcif2 import central_nodes, lci_scores, load_dataset

graph, factions = load_dataset("karate")
scores = lci_scores(graph)
central = central_nodes(graph)

for v in sorted(central, key=lambda v: -scores[v]):
    print(f"node {graph.labels[v]:>2}  degree {graph.degree[v]:>2}  LCI {scores[v]:.4f}")

###############################################################################
# Degree against LCI.  High degree alone is not enough: a hub surrounded by
# bigger hubs scores below zero.

fig, ax = plt.subplots(figsize=(5, 4))
colors = np.where(np.isin(np.arange(graph.node_count), central), "C3", "C0")
ax.scatter(graph.degree, scores, c=colors)
for v in central:
    ax.annotate(graph.labels[v], (graph.degree[v], scores[v]), xytext=(4, 2),
                textcoords="offset points")
ax.axhline(0, color="gray", lw=0.5)
ax.set_xlabel("degree")
ax.set_ylabel("LCI")
fig.tight_layout()
fig.savefig("centrality.png", dpi=120)
