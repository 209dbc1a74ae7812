"""Source-intermediate reliance and the tables built from it.

For a source ``s``, an intermediate ``v`` and a target ``t``:

* trust ``T = dist(s, v) / dist(s, t)``, larger the deeper ``v`` sits on the path;
* per-target reliance ``r = pair_dependency(s, t; v) * T``;
* total reliance ``R_s(v) = sum_t r / (n - 2)`` over reachable targets.

``total_reliance`` gets all of ``R_s`` from one BFS by back-propagating
``sum_t pair_dependency(s, t; v) / dist(s, t)`` over the predecessor DAG and
multiplying by ``dist(s, v)`` at the end.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from ._parallel import map_ordered, sum_columns
from .errors import DataError, DomainError, UsageError
from .graph import Graph, SuspectSet
from .scores import Measure, ScoreMap, score_map
from .sssp import ShortestPathData, bfs, pair_dependency

AGGREGATES = ("sum", "max_sum")
AGGREGATE_NOTES = {
    "sum": "sum over sources of total reliance",
    "max_sum": "per source, max over targets of per-target reliance; summed over sources",
}


@dataclass(frozen=True)
class RelianceResult:
    source: int
    values: tuple[float, ...]
    n_used: int

    def to_score_map(self, graph: Graph) -> ScoreMap:
        return score_map(Measure.RELIANCE, graph.labels, self.values, meta={"source": self.source})


def _on_some_geodesic(spd: ShortestPathData, v: int, t: int) -> bool:
    # walk the predecessor DAG backwards from t
    if spd.dist[v] >= spd.dist[t]:
        return False
    stack, seen = [t], {t}
    dv = spd.dist[v]
    while stack:
        w = stack.pop()
        for u in spd.preds[w]:
            if u == v:
                return True
            if u not in seen and spd.dist[u] > dv:
                seen.add(u)
                stack.append(u)
    return False


def trust(spd_s: ShortestPathData, v: int, t: int) -> float:
    """Distance ratio ``dist(s, v) / dist(s, t)`` for ``v`` inside a geodesic.

    Raises
    ------
    UndefinedDistanceError
        ``v`` or ``t`` unreachable from the source.
    DomainError
        ``s, v, t`` not distinct, or ``v`` on no shortest ``s``-``t`` path.
    """
    s = spd_s.source
    if t == s or v == s or v == t:
        raise DomainError("trust needs distinct s, v, t")
    d_st = spd_s.distance(t)
    d_sv = spd_s.distance(v)
    if not _on_some_geodesic(spd_s, v, t):
        raise DomainError(f"node {v} lies on no shortest path from {s} to {t}")
    return d_sv / d_st


def path_reliance(graph: Graph, s: int, v: int, t: int, spd_s=None, spd_v=None) -> float:
    """Reliance of ``s`` on ``v`` for the single target ``t``; 0 off the geodesics."""
    spd_s = spd_s or bfs(graph, s)
    spd_v = spd_v or bfs(graph, v)
    dep = pair_dependency(spd_s, spd_v, v, t)
    if dep == 0.0:
        return 0.0
    return dep * spd_s.dist[v] / spd_s.dist[t]


def _check_size(graph: Graph):
    if graph.n < 3:
        raise DataError(f"reliance needs at least 3 nodes, graph has {graph.n}")


def _reliance_accumulated(spd: ShortestPathData, n: int) -> list[float]:
    dist, sigma, preds = spd.dist, spd.sigma, spd.preds
    # acc[v] = sum over targets t beyond v of pair_dependency / dist(s, t)
    acc = [0.0] * n
    for w in reversed(spd.order):
        if w == spd.source:
            break
        sw = sigma[w]
        carry = 1.0 / dist[w] + acc[w]
        for v in preds[w]:
            acc[v] += sigma[v] / sw * carry
    norm = n - 2
    out = [0.0] * n
    for v in spd.order:
        if acc[v]:
            out[v] = dist[v] * acc[v] / norm
    out[spd.source] = 0.0
    return out


def _reliance_by_definition(graph: Graph, spd: ShortestPathData) -> list[float]:
    s = spd.source
    n = graph.n
    out = [0.0] * n
    for v in spd.order:
        if v == s:
            continue
        spd_v = bfs(graph, v)
        total = 0.0
        for t in spd.order:
            if t == s or t == v:
                continue
            total += path_reliance(graph, s, v, t, spd, spd_v)
        out[v] = total / (n - 2)
    return out


def total_reliance(graph: Graph, s: int, method: str = "accumulate") -> RelianceResult:
    """Total reliance ``R_s(v)`` of source ``s`` on every node.

    ``method="accumulate"`` is a single BFS plus one backward pass.
    ``method="definition"`` runs a BFS from every reachable ``v`` and sums the
    per-target terms literally; it is quadratic and meant for checking.
    Unreachable targets contribute nothing, but the normalizer stays ``n - 2``.
    """
    _check_size(graph)
    spd = bfs(graph, s)
    if method == "accumulate":
        values = _reliance_accumulated(spd, graph.n)
    elif method == "definition":
        values = _reliance_by_definition(graph, spd)
    else:
        raise UsageError(f"unknown reliance method {method!r}")
    return RelianceResult(s, tuple(values), graph.n)


def max_target_reliance(graph: Graph, s: int) -> list[float]:
    """``max_t r_(s,t)(v)`` for every ``v``."""
    spd = bfs(graph, s)
    dist, sigma = spd.dist, spd.sigma
    best = [0.0] * graph.n
    for v in spd.order:
        if v == s:
            continue
        spd_v = bfs(graph, v)
        dv, sv = dist[v], sigma[v]
        dist_v, sigma_v = spd_v.dist, spd_v.sigma
        top = 0.0
        for t in spd.order:
            if t == s or t == v:
                continue
            if dv + dist_v[t] == dist[t]:
                r = sv * sigma_v[t] / sigma[t] * dv / dist[t]
                if r > top:
                    top = r
        best[v] = top
    return best


def _source_list(graph: Graph, suspects) -> list[int]:
    if isinstance(suspects, SuspectSet):
        srcs = list(suspects.resolved)
    else:
        srcs = sorted({graph.check_node(s) for s in suspects})
    if not srcs:
        raise DataError("suspect set is empty")
    return srcs


def group_reliance(graph: Graph, suspects, mode: str = "sum", workers=None) -> ScoreMap:
    """Reliance a whole suspect set places on each node.

    ``sum`` adds the total reliance of every suspect. ``max_sum`` keeps, per
    suspect, only the largest single-target reliance on each node and adds
    those. Suspects still collect the reliance other suspects place on them.
    """
    if mode not in AGGREGATES:
        raise UsageError(f"unknown aggregate mode {mode!r}")
    _check_size(graph)
    srcs = _source_list(graph, suspects)
    if mode == "sum":
        rows = map_ordered(lambda s: _reliance_accumulated(bfs(graph, s), graph.n), srcs, workers)
    else:
        rows = map_ordered(lambda s: max_target_reliance(graph, s), srcs, workers)
    return score_map(
        Measure.GROUP_RELIANCE,
        graph.labels,
        sum_columns(rows, graph.n),
        meta={"aggregate": mode, "aggregate_note": AGGREGATE_NOTES[mode], "sources": srcs},
    )


class Priority(NamedTuple):
    suspect: str
    node: Optional[str]
    value: float


def crime_priority(graph: Graph, suspects: SuspectSet) -> list[Priority]:
    """The node each suspect relies on most, in suspect input order.

    Ties go to the smallest label. ``node`` is None when the suspect relies
    on nobody (no node sits between it and any target).
    """
    if isinstance(suspects, SuspectSet):
        pairs = [(lab, graph.node(lab)) for lab in suspects.members]
    else:
        pairs = [(graph.labels[s], graph.check_node(s)) for s in suspects]
    if not pairs:
        raise DataError("suspect set is empty")
    out = []
    labels = graph.labels
    for lab, s in pairs:
        values = total_reliance(graph, s).values
        best = None
        for v, x in enumerate(values):
            if x > 0 and (best is None or x > values[best] or (x == values[best] and labels[v] < labels[best])):
                best = v
        if best is None:
            out.append(Priority(lab, None, 0.0))
        else:
            out.append(Priority(lab, labels[best], values[best]))
    return out


def max_normalize(scores: ScoreMap) -> ScoreMap:
    top = max(scores.values, default=0.0)
    values = scores.values if top <= 0 else tuple(x / top for x in scores.values)
    return ScoreMap(scores.measure, scores.labels, values, "max", scores.name, dict(scores.meta))


class RankedRow(NamedTuple):
    node: int
    label: str
    values: tuple[float, ...]


@dataclass(frozen=True)
class RankedTable:
    columns: tuple[str, ...]
    rows: tuple[RankedRow, ...]
    sort_key: str

    def column(self, name: str) -> list[float]:
        j = self.columns.index(name)
        return [r.values[j] for r in self.rows]

    def labels(self) -> list[str]:
        return [r.label for r in self.rows]


def rank(score_maps: Sequence[ScoreMap], sort_key: str, drop_zero: Optional[str] = None) -> RankedTable:
    """Join score maps into one table, highest ``sort_key`` first.

    Ties are broken by ascending label. With ``drop_zero`` set to a column
    name, rows where that column is 0 are left out.
    """
    if not score_maps:
        raise UsageError("nothing to rank")
    labels = score_maps[0].labels
    for sm in score_maps[1:]:
        if sm.labels != labels:
            raise DataError(f"score map {sm.name!r} covers a different node set")
    columns = tuple(sm.name for sm in score_maps)
    if len(set(columns)) != len(columns):
        raise UsageError(f"duplicate column names in {columns}")
    for key in (sort_key, drop_zero):
        if key is not None and key not in columns:
            raise UsageError(f"{key!r} is not one of the columns {columns}")
    k = columns.index(sort_key)
    rows = [RankedRow(i, lab, tuple(sm.values[i] for sm in score_maps)) for i, lab in enumerate(labels)]
    if drop_zero is not None:
        z = columns.index(drop_zero)
        rows = [r for r in rows if r.values[z] != 0.0]
    rows.sort(key=lambda r: (-r.values[k], r.label))
    return RankedTable(columns, tuple(rows), sort_key)
