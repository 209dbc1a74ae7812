"""Seed-centred sub-networks built from unions of shortest paths.

Two modes:

``seed_pairs``
    every node and edge on any shortest path between two seeds;
``seed_to_all``
    every node and edge on any shortest path from a seed to any node it can
    reach, i.e. the union of the seeds' BFS predecessor DAGs.

The result is re-indexed by walking its edges in ascending order of the
parent graph's indices, so writing it out and reading it back gives the same
graph.
"""
from __future__ import annotations

import itertools
import logging

from .errors import DataError, EmptyResultError, UsageError
from .graph import Graph, SuspectSet
from .sssp import bfs

logger = logging.getLogger(__name__)

MODES = ("seed_pairs", "seed_to_all")


def _geodesic_edges(spd_a, spd_b, b):
    d = spd_a.dist[b]
    out = set()
    for w in spd_a.order:
        dw = spd_a.dist[w]
        if dw == 0 or dw + spd_b.dist[w] != d:
            continue
        for u in spd_a.preds[w]:
            if spd_b.dist[u] == spd_b.dist[w] + 1:
                out.add((u, w) if u < w else (w, u))
    return out


def extract_subnetwork(graph: Graph, seeds: SuspectSet, mode: str = "seed_pairs") -> Graph:
    if mode not in MODES:
        raise UsageError(f"unknown extraction mode {mode!r}")
    srcs = list(seeds.resolved) if isinstance(seeds, SuspectSet) else sorted(set(seeds))
    spds = {s: bfs(graph, s) for s in srcs}
    edges: set[tuple[int, int]] = set()
    if mode == "seed_pairs":
        if len(srcs) < 2:
            raise DataError("seed_pairs extraction needs at least 2 seeds")
        for a, b in itertools.combinations(srcs, 2):
            if not spds[a].reachable(b):
                logger.warning("seeds %s and %s are not connected; pair skipped", graph.labels[a], graph.labels[b])
                continue
            edges |= _geodesic_edges(spds[a], spds[b], b)
    else:
        if not srcs:
            raise DataError("seed_to_all extraction needs at least 1 seed")
        for s in srcs:
            spd = spds[s]
            for w in spd.order:
                for u in spd.preds[w]:
                    edges.add((u, w) if u < w else (w, u))
    if not edges:
        raise EmptyResultError("no shortest path connects the seeds")
    labels = graph.labels
    return Graph.from_edges((labels[u], labels[v]) for u, v in sorted(edges))
