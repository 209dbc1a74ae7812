import io
import sys
from pathlib import Path

import pytest

from relrank import Graph, load_edge_list

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"


def graph_of(*edges, nodes=()):
    """Graph from label pairs; ints are turned into string labels."""
    return Graph.from_edges([(str(a), str(b)) for a, b in edges], [str(x) for x in nodes])


def graph_from_text(text, **kw):
    return load_edge_list(io.StringIO(text), **kw)


def idx(graph, label):
    return graph.node(str(label))


@pytest.fixture
def fig1():
    with open(DATA / "fig1.txt") as fh:
        return load_edge_list(fh)


@pytest.fixture
def path4():
    return graph_of((1, 2), (2, 3), (3, 4))


@pytest.fixture
def diamond():
    return graph_of((1, 2), (1, 3), (2, 4), (3, 4))


@pytest.fixture
def star3():
    return graph_of(("h", "a"), ("h", "b"), ("h", "c"))


# One summary line per acceptance criterion, pass or fail.
_acceptance = {}


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[crit] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_acceptance, key=lambda c: int(c.split(".")[0])):
        status = "PASS" if _acceptance[crit] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {crit}")
