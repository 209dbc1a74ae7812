"""Rank the intermediaries a set of source nodes relies on.

The reliance of a source ``s`` on a node ``v`` weighs each shortest path
from ``s`` through ``v`` by how far along that path ``v`` sits. Betweenness
(three variants), PageRank and Markov centrality are provided for comparison.
"""
from .centrality import (
    betweenness_brandes,
    betweenness_freeman,
    betweenness_geisberger,
    dependency_brandes,
    dependency_geisberger,
    markov_centrality,
    pagerank,
)
from .errors import RelRankError
from .graph import Graph, SuspectSet, load_edge_list, load_labels, resolve_suspects, write_edge_list
from .reliance import (
    RankedTable,
    RelianceResult,
    crime_priority,
    group_reliance,
    max_normalize,
    path_reliance,
    rank,
    total_reliance,
    trust,
)
from .scores import Measure, ScoreMap
from .sssp import ShortestPathData, bfs, pair_dependency
from .subnet import extract_subnetwork

__version__ = "0.1.0"
