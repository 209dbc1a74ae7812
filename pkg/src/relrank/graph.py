"""Simple undirected graphs loaded from edge-list files.

Node labels are opaque strings (``"686"`` is a label, not the number 686).
Indices are assigned in order of first appearance, so loading the same file
twice always gives the same label -> index mapping.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

from .errors import DataError, EmptyGraphError, InvalidNodeError, ParseError, UnknownLabelError, UsageError

logger = logging.getLogger(__name__)

DELIMITERS = ("auto", "comma", "whitespace")


@dataclass(frozen=True)
class LoadReport:
    loops_dropped: int = 0
    duplicates_collapsed: int = 0

    def messages(self) -> list[str]:
        out = []
        if self.loops_dropped:
            noun = "self-loop" if self.loops_dropped == 1 else "self-loops"
            out.append(f"{self.loops_dropped} {noun} dropped")
        if self.duplicates_collapsed:
            noun = "duplicate edge" if self.duplicates_collapsed == 1 else "duplicate edges"
            out.append(f"{self.duplicates_collapsed} {noun} collapsed")
        return out


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``edges`` keeps each undirected edge once, in the orientation and order it
    was first seen; writing them back out reproduces the same indexing.
    ``adjacency[u]`` is the sorted tuple of neighbours of ``u``.
    """

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...] = field(compare=False)
    report: LoadReport = field(default=LoadReport(), compare=False)
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def node(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def check_node(self, u) -> int:
        if not isinstance(u, int) or isinstance(u, bool) or not 0 <= u < self.n:
            raise InvalidNodeError(f"invalid node index {u!r} (graph has {self.n} nodes)")
        return u

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], nodes: Sequence[str] = ()) -> "Graph":
        """Build a simplified graph from label pairs.

        ``nodes`` are indexed first (this is how isolated nodes get in).
        Self-loops are dropped and repeated pairs, in either orientation,
        collapse to one edge.
        """
        index: dict[str, int] = {}
        labels: list[str] = []

        def intern(lab):
            i = index.get(lab)
            if i is None:
                i = index[lab] = len(labels)
                labels.append(lab)
            return i

        for lab in nodes:
            intern(lab)
        seen = set()
        kept = []
        loops = dups = 0
        for a, b in edges:
            if a == b:
                loops += 1
                continue
            u, v = intern(a), intern(b)
            key = (u, v) if u < v else (v, u)
            if key in seen:
                dups += 1
                continue
            seen.add(key)
            kept.append((u, v))
        adj: list[list[int]] = [[] for _ in labels]
        for u, v in kept:
            adj[u].append(v)
            adj[v].append(u)
        return cls(
            labels=tuple(labels),
            adjacency=tuple(tuple(sorted(a)) for a in adj),
            edges=tuple(kept),
            report=LoadReport(loops, dups),
        )

    def edge_label_pairs(self) -> list[tuple[str, str]]:
        return [(self.labels[u], self.labels[v]) for u, v in self.edges]

    def same_structure(self, other: "Graph") -> bool:
        """Equal as labelled graphs, ignoring how nodes are numbered."""
        if set(self.labels) != set(other.labels) or self.m != other.m:
            return False
        mine = {frozenset(p) for p in self.edge_label_pairs()}
        return mine == {frozenset(p) for p in other.edge_label_pairs()}


def _data_lines(stream: IO[str], skip_comments: bool = True):
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        if skip_comments and line.startswith("#"):
            continue
        yield lineno, line


def load_edge_list(
    stream: IO[str],
    delimiter: str = "auto",
    skip_comments: bool = True,
    nodes: Sequence[str] = (),
) -> Graph:
    """Read an undirected edge list, one ``u v`` pair per line.

    With ``delimiter="auto"`` the file is comma separated if the first data
    line contains a comma, otherwise whitespace separated.

    Raises
    ------
    ParseError
        A data line does not hold exactly two labels.
    EmptyGraphError
        The input holds no edges and no declared nodes.
    """
    if delimiter not in DELIMITERS:
        raise UsageError(f"unknown delimiter {delimiter!r}")
    pairs = []
    mode = None if delimiter == "auto" else delimiter
    for lineno, line in _data_lines(stream, skip_comments):
        if mode is None:
            mode = "comma" if "," in line else "whitespace"
        if mode == "comma":
            tokens = [t.strip() for t in line.split(",")]
            if any(not t for t in tokens):
                raise ParseError(f"empty label in {line!r}", lineno)
        else:
            tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 labels, got {len(tokens)}: {line!r}", lineno)
        pairs.append((tokens[0], tokens[1]))

    graph = Graph.from_edges(pairs, nodes)
    if graph.n == 0:
        raise EmptyGraphError("input contains no edges")
    for msg in graph.report.messages():
        logger.info(msg)
    return graph


def load_labels(stream: IO[str]) -> list[str]:
    """One label per line; ``#`` comments and blank lines ignored."""
    out = []
    for lineno, line in _data_lines(stream):
        tokens = line.split()
        if len(tokens) != 1:
            raise ParseError(f"expected a single label, got {line!r}", lineno)
        out.append(tokens[0])
    return out


def write_edge_list(graph: Graph, stream: IO[str], delimiter: str = " ") -> None:
    for a, b in graph.edge_label_pairs():
        stream.write(f"{a}{delimiter}{b}\n")


@dataclass(frozen=True)
class SuspectSet:
    name: str
    members: tuple[str, ...]
    resolved: tuple[int, ...]

    def __iter__(self):
        return iter(self.resolved)

    def __len__(self):
        return len(self.resolved)


def resolve_suspects(graph: Graph, labels: Sequence[str], name: str = "suspects") -> SuspectSet:
    """Map suspect labels to node indices.

    Repeated labels are kept once. ``members`` stays in input order,
    ``resolved`` is sorted by index.
    """
    if not labels:
        raise DataError("suspect list is empty")
    members = tuple(dict.fromkeys(labels))
    resolved = tuple(sorted(graph.node(lab) for lab in members))
    return SuspectSet(name=name, members=members, resolved=resolved)
