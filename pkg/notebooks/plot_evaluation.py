"""
Comparing partitions with NMI
=============================

NMI is 1 for the same grouping under any labels and drops as the
groupings diverge.  The confusion matrix shows where they disagree.
"""

import numpy as np

from lcif2 import DetectionConfig, Partition, confusion_matrix, detect, load_dataset, nmi

graph, conferences = load_dataset("football")
found = detect(graph, DetectionConfig(seed=42)).partition

cm = confusion_matrix(conferences, found)
print(f"{cm.counts.shape[0]} conferences, {cm.counts.shape[1]} found, NMI {nmi(conferences, found):.4f}")
print(cm.counts)

###############################################################################
# Relabeling changes nothing; shuffling nodes destroys the agreement.

relabeled = Partition(conferences.membership.max() - conferences.membership)
print("relabeled:", nmi(conferences, relabeled))
rng = np.random.default_rng(0)
print("shuffled: ", round(nmi(conferences, Partition(rng.permutation(conferences.membership))), 4))
