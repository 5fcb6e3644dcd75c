"""The three bundled real-world networks and their reference partitions."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .graph import Graph, Partition, load_graph, load_partition

__all__ = ["DATASETS", "load_dataset", "data_dir"]

# name -> (graph file, format, reference partition file)
DATASETS = {
    "karate": ("karate.gml", "gml", "karate_factions.tsv"),
    "dolphins": ("dolphins.txt", "edgelist", "dolphins_groups.tsv"),
    "football": ("football.txt", "edgelist", "football_conferences.tsv"),
}


def data_dir():
    return resources.files(__package__) / "data"


def load_dataset(name: str, root=None) -> tuple[Graph, Partition]:
    """``(graph, reference)`` for a bundled network.

    ``root`` overrides the directory the files are read from.
    """
    try:
        gfile, fmt, pfile = DATASETS[name]
    except KeyError:
        raise ValueError(f"unknown dataset {name!r}; choose from {sorted(DATASETS)}") from None
    root = data_dir() if root is None else root
    base = Path(str(root))
    for f in (gfile, pfile):
        if not (base / f).is_file():
            raise FileNotFoundError(f"missing dataset file {base / f}")
    graph = load_graph((base / gfile).read_bytes(), fmt)
    reference = load_partition((base / pfile).read_bytes(), graph)
    return graph, reference
