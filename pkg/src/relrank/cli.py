"""Command line interface.

Data goes to ``--output`` (standard output by default); diagnostics and
errors go to standard error. Exit codes: 0 ok, 1 usage, 2 data, 3 numeric.
Set ``RELIANCE_THREADS`` to spread per-source work over several threads;
output does not depend on it.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .centrality import betweenness_brandes, betweenness_freeman, betweenness_geisberger, markov_centrality, pagerank
from .errors import DataError, RelRankError, UsageError
from .graph import Graph, load_edge_list, load_labels, resolve_suspects, write_edge_list
from .reliance import AGGREGATE_NOTES, AGGREGATES, RankedTable, crime_priority, group_reliance, max_normalize, rank
from .subnet import MODES, extract_subnetwork

COMMANDS = ("validate", "extract", "reliance", "betweenness", "pagerank", "markov", "compare", "priority")
FORMATS = ("csv", "json")
NORMALIZE = ("none", "max")
VARIANTS = ("freeman", "brandes", "geisberger")
SCOPES = ("all", "seeds")
MEASURES = ("reliance", "freeman", "brandes", "geisberger", "pagerank", "markov")
NEEDS_SEEDS = ("extract", "reliance", "priority")

log = logging.getLogger("relrank")


@dataclass
class RunConfig:
    command: str
    graph_path: str
    seeds_path: Optional[str] = None
    nodes_path: Optional[str] = None
    output_path: Optional[str] = None
    format: str = "csv"
    normalize: str = "none"
    aggregate: str = "sum"
    variant: str = "brandes"
    scope: str = "all"
    mode: str = "seed_pairs"
    measures: list = field(default_factory=list)
    damping: float = 0.85
    tol: float = 1e-10
    max_iter: int = 1000
    sort_key: Optional[str] = None
    drop_zero: bool = False
    delimiter: str = "auto"

    def validate(self):
        for name, value, allowed in (
            ("command", self.command, COMMANDS),
            ("format", self.format, FORMATS),
            ("normalize", self.normalize, NORMALIZE),
            ("aggregate", self.aggregate, AGGREGATES),
            ("variant", self.variant, VARIANTS),
            ("scope", self.scope, SCOPES),
            ("mode", self.mode, MODES),
        ):
            if value not in allowed:
                raise UsageError(f"--{name} must be one of {', '.join(allowed)}; got {value!r}")
        for m in self.measures:
            if m not in MEASURES:
                raise UsageError(f"unknown measure {m!r}; choose from {', '.join(MEASURES)}")
        if len(set(self.measures)) != len(self.measures):
            raise UsageError("--measures lists a measure twice")
        if not 0.0 < self.damping < 1.0:
            raise UsageError("--damping must lie in (0, 1)")
        if self.tol <= 0 or self.max_iter < 1:
            raise UsageError("--tol must be positive and --max-iter at least 1")
        columns = self.columns()
        if self.sort_key is not None and self.sort_key not in columns:
            raise UsageError(f"--sort-key {self.sort_key!r} is not among the computed columns {columns}")
        if self.seeds_path is None and self.needs_seeds():
            raise UsageError(f"{self.command} requires --seeds")

    def columns(self) -> list:
        if self.command == "compare":
            return list(self.measures)
        if self.command == "betweenness":
            return [self.variant]
        if self.command in ("reliance", "pagerank", "markov"):
            return [self.command]
        return []

    def needs_seeds(self) -> bool:
        if self.command in NEEDS_SEEDS:
            return True
        if self.command in ("compare", "betweenness") and self.scope == "seeds":
            return True
        return self.command == "compare" and "reliance" in self.measures


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="relrank", description="Rank the intermediaries a set of suspects relies on.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("graph", metavar="GRAPH", help="edge-list file, one pair of labels per line")
    p.add_argument("--seeds", help="suspect file, one label per line")
    p.add_argument("--nodes", help="optional node-list file (declares isolated nodes)")
    p.add_argument("-o", "--output", help="write data here instead of standard output")
    p.add_argument("--format", default="csv", choices=FORMATS)
    p.add_argument("--normalize", default="none", choices=NORMALIZE)
    p.add_argument("--aggregate", default="sum", choices=AGGREGATES)
    p.add_argument("--variant", default="brandes", choices=VARIANTS)
    p.add_argument("--scope", default="all", choices=SCOPES,
                   help="betweenness sources: every node, or only the seeds")
    p.add_argument("--mode", default="seed_pairs", choices=MODES, help="extraction mode")
    p.add_argument("--measures", default="reliance,brandes,geisberger",
                   help="comma-separated columns for compare")
    p.add_argument("--damping", type=float, default=0.85)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=1000)
    p.add_argument("--sort-key")
    p.add_argument("--drop-zero", action="store_true",
                   help="drop rows whose reliance (or sort-key) value is 0")
    p.add_argument("--delimiter", default="auto", choices=("auto", "comma", "whitespace"))
    return p


def parse_config(argv) -> RunConfig:
    a = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=a.command,
        graph_path=a.graph,
        seeds_path=a.seeds,
        nodes_path=a.nodes,
        output_path=a.output,
        format=a.format,
        normalize=a.normalize,
        aggregate=a.aggregate,
        variant=a.variant,
        scope=a.scope,
        mode=a.mode,
        measures=[m.strip() for m in a.measures.split(",") if m.strip()] if a.command == "compare" else [],
        damping=a.damping,
        tol=a.tol,
        max_iter=a.max_iter,
        sort_key=a.sort_key,
        drop_zero=a.drop_zero,
        delimiter=a.delimiter,
    )
    cfg.validate()
    return cfg


def fmt(x: float) -> str:
    return format(x, ".12g")


def _read(path):
    try:
        return open(path, encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None


def _load(cfg: RunConfig, err) -> Graph:
    nodes = ()
    if cfg.nodes_path:
        with _read(cfg.nodes_path) as fh:
            nodes = load_labels(fh)
    with _read(cfg.graph_path) as fh:
        graph = load_edge_list(fh, delimiter=cfg.delimiter, nodes=nodes)
    for msg in graph.report.messages():
        print(f"relrank: {msg}", file=err)
    return graph


def _seeds(cfg: RunConfig, graph: Graph):
    with _read(cfg.seeds_path) as fh:
        return resolve_suspects(graph, load_labels(fh), name=cfg.seeds_path)


def _column(cfg: RunConfig, name: str, graph: Graph, seeds):
    sources = seeds.resolved if cfg.scope == "seeds" and seeds is not None else None
    if name == "reliance":
        return group_reliance(graph, seeds, cfg.aggregate).renamed("reliance")
    if name == "freeman":
        return betweenness_freeman(graph, sources)
    if name == "brandes":
        return betweenness_brandes(graph, sources)
    if name == "geisberger":
        return betweenness_geisberger(graph, sources)
    if name == "pagerank":
        return pagerank(graph, cfg.damping, cfg.tol, cfg.max_iter)
    if name == "markov":
        return markov_centrality(graph)
    raise UsageError(f"unknown measure {name!r}")


def _table(cfg: RunConfig, graph: Graph, seeds) -> tuple[RankedTable, dict]:
    names = cfg.columns()
    maps = [_column(cfg, name, graph, seeds) for name in names]
    if cfg.normalize == "max":
        maps = [max_normalize(sm) for sm in maps]
    sort_key = cfg.sort_key or names[0]
    drop = None
    if cfg.drop_zero:
        drop = "reliance" if "reliance" in names else sort_key
    table = rank(maps, sort_key, drop_zero=drop)
    meta = {
        "command": cfg.command,
        "measures": names,
        "normalization": cfg.normalize,
        "aggregate": cfg.aggregate if "reliance" in names else None,
        "aggregate_note": AGGREGATE_NOTES[cfg.aggregate] if "reliance" in names else None,
        "betweenness_scope": cfg.scope if set(names) & set(VARIANTS) else None,
        "sort_key": sort_key,
        "drop_zero": drop,
        "n": graph.n,
        "m": graph.m,
    }
    if "pagerank" in names:
        meta["damping"] = cfg.damping
    return table, meta


def _write_table(table: RankedTable, meta: dict, fmt_name: str, out):
    if fmt_name == "json":
        rows = []
        for r in table.rows:
            row = {"node": r.node, "label": r.label}
            row.update((c, float(fmt(x))) for c, x in zip(table.columns, r.values))
            rows.append(row)
        json.dump({"metadata": meta, "rows": rows}, out, indent=2, ensure_ascii=False)
        out.write("\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["node", "label", *table.columns])
    for r in table.rows:
        w.writerow([r.node, r.label, *(fmt(x) for x in r.values)])


def _execute(cfg: RunConfig, out, err):
    graph = _load(cfg, err)
    seeds = _seeds(cfg, graph) if cfg.seeds_path else None

    if cfg.command == "validate":
        if cfg.format == "json":
            json.dump({"n": graph.n, "m": graph.m}, out)
            out.write("\n")
        else:
            out.write(f"n,m\n{graph.n},{graph.m}\n")
    elif cfg.command == "extract":
        sub = extract_subnetwork(graph, seeds, cfg.mode)
        print(f"relrank: extracted {sub.n} nodes, {sub.m} edges", file=err)
        if cfg.format == "json":
            json.dump({"nodes": list(sub.labels), "edges": [list(e) for e in sub.edge_label_pairs()]},
                      out, ensure_ascii=False)
            out.write("\n")
        else:
            write_edge_list(sub, out, delimiter=" ")
    elif cfg.command == "priority":
        rows = crime_priority(graph, seeds)
        if cfg.format == "json":
            json.dump({"metadata": {"command": "priority", "n": graph.n, "m": graph.m},
                       "rows": [{"suspect": p.suspect, "node": p.node, "reliance": float(fmt(p.value))}
                                for p in rows]}, out, indent=2, ensure_ascii=False)
            out.write("\n")
        else:
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["suspect", "node", "reliance"])
            for p in rows:
                w.writerow([p.suspect, p.node if p.node is not None else "", fmt(p.value)])
    else:
        table, meta = _table(cfg, graph, seeds)
        _write_table(table, meta, cfg.format, out)


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    """Execute one command. Nothing reaches the data stream unless it succeeds."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    buf = io.StringIO()
    try:
        _execute(cfg, buf, stderr)
    except RelRankError as exc:
        print(f"error: {exc.category}: {exc}", file=stderr)
        return exc.exit_code
    data = buf.getvalue()
    if cfg.output_path:
        try:
            with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
                fh.write(data)
        except OSError as exc:
            print(f"error: io: cannot write {cfg.output_path}: {exc.strerror}", file=stderr)
            return DataError.exit_code
    else:
        stdout.write(data)
    return 0


def main(argv=None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("relrank: %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(logging.WARNING)
    log.propagate = False
    try:
        cfg = parse_config(argv)
    except RelRankError as exc:
        print(f"error: {exc.category}: {exc}", file=stderr)
        return exc.exit_code
    return run(cfg, stdout, stderr)


def main_exit():
    sys.exit(main())
