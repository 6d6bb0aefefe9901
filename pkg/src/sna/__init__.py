"""Deterministic social-network analysis of directed graphs."""

from .brokerage import ROLES, BrokerageCounts, brokerage_census, brokerage_summary
from .centrality import (
    CentralityVector,
    betweenness_centrality,
    centralization,
    closeness_centrality,
    degree_centrality,
)
from .cohesion import CorePartition, EmptyCoreError, core_decomposition, extract_core
from .communities import CommunityPartition, louvain, modularity
from .graph import UNREACHABLE, Graph, NetworkStats, bfs, build_graph, load_graph, network_stats
from .ingest import EdgeList, IngestError, NodeIdMap, build_id_map, parse_edge_list
from .neighborhoods import DiameterResult, DistancePartition, diameter, influence_domain, k_neighbors
from .ranking import ConvergenceError, ScoreVector, pagerank

__version__ = "0.1.0"
