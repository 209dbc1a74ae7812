"""Breadth-first shortest paths with exact path counts and predecessor sets."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DomainError, UndefinedDistanceError
from .graph import Graph

UNREACHABLE = -1


@dataclass(frozen=True)
class ShortestPathData:
    """Result of one BFS from ``source``.

    ``dist[v]`` is the hop distance or ``UNREACHABLE``; ``sigma[v]`` the
    exact number of shortest paths (Python int, never overflows);
    ``preds[v]`` the immediate predecessors of ``v`` on those paths;
    ``order`` the reachable nodes in nondecreasing distance.
    Treat the lists as read-only.
    """

    source: int
    dist: list[int]
    sigma: list[int]
    preds: list[list[int]]
    order: list[int]

    def reachable(self, v: int) -> bool:
        return self.dist[v] != UNREACHABLE

    def distance(self, v: int) -> int:
        d = self.dist[v]
        if d == UNREACHABLE:
            raise UndefinedDistanceError(f"node {v} is unreachable from {self.source}")
        return d


def bfs(graph: Graph, s: int) -> ShortestPathData:
    graph.check_node(s)
    adj = graph.adjacency
    n = graph.n
    dist = [UNREACHABLE] * n
    sigma = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    dist[s] = 0
    sigma[s] = 1
    order = []
    queue = deque([s])
    while queue:
        v = queue.popleft()
        order.append(v)
        dv = dist[v] + 1
        sv = sigma[v]
        for w in adj[v]:
            dw = dist[w]
            if dw == UNREACHABLE:
                dist[w] = dw = dv
                queue.append(w)
            if dw == dv:
                sigma[w] += sv
                preds[w].append(v)
    return ShortestPathData(s, dist, sigma, preds, order)


def pair_dependency(spd_s: ShortestPathData, spd_v: ShortestPathData, v: int, t: int) -> float:
    """Fraction of shortest ``s``-``t`` paths that pass through ``v``.

    ``spd_v`` must be the BFS from ``v``. Path counts stay exact integers
    until the final division.
    """
    s = spd_s.source
    if spd_v.source != v:
        raise ValueError(f"spd_v was computed from {spd_v.source}, not {v}")
    if s == t or v == s or v == t:
        raise DomainError("pair dependency needs distinct s, v, t")
    d_st = spd_s.distance(t)
    if not spd_s.reachable(v) or spd_s.dist[v] + spd_v.dist[t] != d_st:
        return 0.0
    return spd_s.sigma[v] * spd_v.sigma[t] / spd_s.sigma[t]
