"""Baseline centrality measures: betweenness (three variants), PageRank, Markov.

Betweenness sums over ordered ``(s, t)`` pairs, so on an undirected graph
every unordered pair counts twice. Only normalized values are compared
downstream, so the factor cancels.
"""
from __future__ import annotations

from typing import Iterable, Optional

import numpy as np

from ._parallel import map_ordered, sum_columns
from .errors import ConvergenceError, DataError, DisconnectedGraphError, SingularSystemError, UsageError
from .graph import Graph
from .scores import Measure, ScoreMap, score_map
from .sssp import ShortestPathData, bfs, pair_dependency


def _sources(graph: Graph, sources: Optional[Iterable[int]]) -> list[int]:
    if sources is None:
        return list(range(graph.n))
    return sorted({graph.check_node(s) for s in sources})


def _require_nonempty(graph: Graph):
    if graph.n == 0:
        raise DataError("graph is empty")


def betweenness_freeman(graph: Graph, sources=None) -> ScoreMap:
    """Direct double sum of pair dependencies over ordered pairs.

    Cubic in ``n`` and keeps one BFS per node in memory; it exists as the
    reference the accumulation methods are checked against.
    """
    _require_nonempty(graph)
    srcs = _sources(graph, sources)
    spds = [bfs(graph, u) for u in range(graph.n)]
    bc = [0.0] * graph.n
    for s in srcs:
        spd_s = spds[s]
        for t in spd_s.order:
            if t == s:
                continue
            for v in range(graph.n):
                if v != s and v != t:
                    bc[v] += pair_dependency(spd_s, spds[v], v, t)
    return score_map(Measure.FREEMAN, graph.labels, bc)


def _accumulate(spd: ShortestPathData, n: int, scaled: bool) -> list[float]:
    dist, sigma, preds = spd.dist, spd.sigma, spd.preds
    delta = [0.0] * n
    for w in reversed(spd.order):
        sw = sigma[w]
        carry = 1.0 + delta[w]
        for v in preds[w]:
            term = sigma[v] / sw * carry
            if scaled:
                term *= dist[v] / dist[w]
            delta[v] += term
    delta[spd.source] = 0.0
    return delta


def dependency_brandes(graph: Graph, s: int) -> ScoreMap:
    spd = bfs(graph, s)
    return score_map(Measure.BRANDES, graph.labels, _accumulate(spd, graph.n, False), meta={"source": s})


def dependency_geisberger(graph: Graph, s: int) -> ScoreMap:
    """Per-source dependency with every term scaled by ``dist(v) / dist(w)``."""
    spd = bfs(graph, s)
    return score_map(Measure.GEISBERGER, graph.labels, _accumulate(spd, graph.n, True), meta={"source": s})


def _betweenness(graph, sources, workers, scaled, measure):
    _require_nonempty(graph)
    srcs = _sources(graph, sources)
    rows = map_ordered(lambda s: _accumulate(bfs(graph, s), graph.n, scaled), srcs, workers)
    return score_map(measure, graph.labels, sum_columns(rows, graph.n))


def betweenness_brandes(graph: Graph, sources=None, workers=None) -> ScoreMap:
    return _betweenness(graph, sources, workers, False, Measure.BRANDES)


def betweenness_geisberger(graph: Graph, sources=None, workers=None) -> ScoreMap:
    return _betweenness(graph, sources, workers, True, Measure.GEISBERGER)


def _edge_arrays(graph: Graph):
    if graph.m == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    e = np.asarray(graph.edges, dtype=np.int64)
    src = np.concatenate([e[:, 0], e[:, 1]])
    dst = np.concatenate([e[:, 1], e[:, 0]])
    return src, dst


def pagerank(graph: Graph, damping: float = 0.85, tol: float = 1e-10, max_iter: int = 1000) -> ScoreMap:
    """Power-iteration PageRank treating each edge as two directed links.

    Degree-zero nodes spread their mass uniformly over all nodes. Stops when
    the L1 change between iterates drops below ``tol``.

    Raises
    ------
    ConvergenceError
        ``max_iter`` iterations without reaching ``tol``.
    """
    _require_nonempty(graph)
    if not 0.0 < damping < 1.0:
        raise UsageError(f"damping must lie in (0, 1), got {damping}")
    if tol <= 0 or max_iter < 1:
        raise UsageError("tol must be positive and max_iter at least 1")
    n = graph.n
    src, dst = _edge_arrays(graph)
    deg = np.bincount(src, minlength=n).astype(float)
    dangling = deg == 0
    inv_deg = np.where(dangling, 0.0, 1.0 / np.where(dangling, 1.0, deg))
    x = np.full(n, 1.0 / n)
    teleport = (1.0 - damping) / n
    for it in range(1, max_iter + 1):
        spread = np.bincount(dst, weights=(x * inv_deg)[src], minlength=n)
        new = teleport + damping * (spread + x[dangling].sum() / n)
        new /= new.sum()
        change = np.abs(new - x).sum()
        x = new
        if change < tol:
            return score_map(Measure.PAGERANK, graph.labels, x, meta={"iterations": it, "damping": damping})
    raise ConvergenceError(f"pagerank did not converge in {max_iter} iterations", max_iter)


def markov_centrality(graph: Graph) -> ScoreMap:
    """Inverse mean first-passage time of a simple random walk leaving each node.

    For every target ``t`` the hitting times ``m(u, t)`` solve
    ``m(u, t) = 1 + sum_{w ~ u} m(w, t) / deg(u)`` with ``m(t, t) = 0``.
    The score of ``v`` is ``(n - 1) / sum_{t != v} m(v, t)``.

    Walks are measured from the node outward. The White and Smyth
    formulation averages the walks arriving at the node instead.
    """
    n = graph.n
    if n < 2:
        raise DataError("markov centrality needs at least 2 nodes")
    if len(bfs(graph, 0).order) != n:
        raise DisconnectedGraphError("markov centrality is undefined on a disconnected graph")
    P = np.zeros((n, n))
    for u, nbrs in enumerate(graph.adjacency):
        P[u, list(nbrs)] = 1.0 / len(nbrs)
    totals = np.zeros(n)
    eye = np.eye(n - 1)
    ones = np.ones(n - 1)
    for t in range(n):
        keep = np.r_[0:t, t + 1:n]
        A = eye - P[np.ix_(keep, keep)]
        try:
            m = np.linalg.solve(A, ones)
        except np.linalg.LinAlgError as exc:
            raise SingularSystemError(f"first-passage system for target {t} is singular") from exc
        if not np.all(np.isfinite(m)):
            raise SingularSystemError(f"first-passage system for target {t} is ill-conditioned")
        totals[keep] += m
    return score_map(Measure.MARKOV, graph.labels, (n - 1) / totals)
