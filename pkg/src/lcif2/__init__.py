"""Community detection by greedy expansion from locally central nodes."""

from .centrality import (CentralityReport, central_nodes, global_max_degree_nodes,
                         lci, lci_scores, local_max_degree_nodes)
from .datasets import load_dataset
from .detect import (DetectionConfig, DetectionResult, assign_residuals, detect,
                     detect_once, expand_community)
from .evaluate import ConfusionMatrix, confusion_matrix, nmi
from .graph import (Graph, ParseError, Partition, load_graph, load_partition,
                    read_graph, read_partition, write_edgelist, write_partition)
from .modularity import (CommunityState, ModularityScore, f2_community, f2_delta,
                         f2_score, f_score, m_score, q_score, r_score, score)

__version__ = "0.1.0"
