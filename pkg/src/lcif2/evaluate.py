"""Comparing a found partition with a reference one."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Partition

__all__ = ["ConfusionMatrix", "confusion_matrix", "nmi"]


@dataclass(frozen=True)
class ConfusionMatrix:
    """``counts[i, j]`` = nodes in reference community i and found community j."""

    counts: np.ndarray

    @property
    def row_sums(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def col_sums(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    @property
    def n(self) -> int:
        return int(self.counts.sum())


def _labels(p) -> np.ndarray:
    return p.membership if isinstance(p, Partition) else np.asarray(p)


def confusion_matrix(reference, found) -> ConfusionMatrix:
    a, b = _labels(reference), _labels(found)
    if a.shape != b.shape:
        extra = sorted(set(range(len(a))) ^ set(range(len(b))))
        raise ValueError(f"partitions cover different nodes: {extra[:10]}")
    _, ai = np.unique(a, return_inverse=True)
    _, bi = np.unique(b, return_inverse=True)
    counts = np.zeros((ai.max() + 1, bi.max() + 1), dtype=np.int64)
    np.add.at(counts, (ai, bi), 1)
    return ConfusionMatrix(counts)


def nmi(reference, found) -> float:
    """Normalized mutual information, ``2 I(A;B) / (H(A) + H(B))``.

    1 for identical partitions (up to relabeling), 0 for independent
    ones.  When both sides are a single community the two agree, and
    the result is 1.
    """
    cm = confusion_matrix(reference, found)
    N = cm.n
    if N == 0:
        raise ValueError("partitions are empty")
    nonzero = cm.counts > 0
    if (nonzero.sum(axis=0) == 1).all() and (nonzero.sum(axis=1) == 1).all():
        # same partition up to relabeling; skip the logs so this is exactly 1
        return 1.0
    counts = cm.counts.astype(np.float64)
    rows, cols = cm.row_sums.astype(np.float64), cm.col_sums.astype(np.float64)
    i, j = np.nonzero(counts)
    nij = counts[i, j]
    mutual = np.sum(nij * np.log(nij * N / (rows[i] * cols[j])))
    entropy = np.sum(rows * np.log(rows / N)) + np.sum(cols * np.log(cols / N))
    if entropy == 0:
        return 1.0
    # clip rounding noise just outside [0, 1]
    return float(min(1.0, max(0.0, -2.0 * mutual / entropy)))
