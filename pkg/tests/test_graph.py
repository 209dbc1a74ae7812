import io
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph_from_text, graph_of
from relrank import load_edge_list, load_labels, resolve_suspects, write_edge_list
from relrank.errors import DataError, EmptyGraphError, InvalidNodeError, ParseError, UnknownLabelError


def test_two_edges():
    g = graph_from_text("a b\nb c\n")
    assert (g.n, g.m) == (3, 2)
    assert g.labels == ("a", "b", "c")
    assert g.adjacency == ((1,), (0, 2), (1,))


def test_self_loop_dropped():
    g = graph_from_text("a a\na b\n")
    assert (g.n, g.m) == (2, 1)
    assert g.report.loops_dropped == 1
    assert g.report.messages() == ["1 self-loop dropped"]


def test_duplicates_collapsed():
    g = graph_from_text("a b\nb a\na b\n")
    assert (g.n, g.m) == (2, 1)
    assert g.report.duplicates_collapsed == 2


def test_comments_and_blank_lines():
    g = graph_from_text("# header\n\na b\n  # indented comment\nb c\n")
    assert g.m == 2


def test_comma_delimiter_auto():
    g = graph_from_text("x, y\ny,z\n")
    assert g.labels == ("x", "y", "z")


def test_comma_file_with_spaces_in_second_line_is_still_comma():
    with pytest.raises(ParseError):
        graph_from_text("a,b\nc d\n")


def test_whitespace_forced():
    g = graph_from_text("a\tb\nb   c\n", delimiter="whitespace")
    assert g.m == 2


@pytest.mark.parametrize("text, line", [("a b c\n", 1), ("a b\n\nx\n", 3), ("a,b,c\n", 1), ("a,\n", 1)])
def test_malformed_line_reports_line_number(text, line):
    with pytest.raises(ParseError) as exc:
        graph_from_text(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


@pytest.mark.parametrize("text", ["", "# only a comment\n\n", "a a\n"])
def test_empty_input(text):
    with pytest.raises(EmptyGraphError):
        graph_from_text(text)


def test_numeric_labels_are_opaque():
    g = graph_from_text("686 0686\n687 686\n")
    assert g.labels == ("686", "0686", "687")


def test_node_list_declares_isolated_nodes():
    g = load_edge_list(io.StringIO("a b\n"), nodes=["c", "a"])
    assert g.labels == ("c", "a", "b")
    assert g.adjacency[0] == ()


def test_check_node():
    g = graph_of((1, 2))
    assert g.check_node(1) == 1
    for bad in (-1, 2, "1", True):
        with pytest.raises(InvalidNodeError):
            g.check_node(bad)


def test_resolve_suspects():
    g = graph_of(("a", "b"), ("b", "c"))
    assert resolve_suspects(g, ["a", "c"]).resolved == (0, 2)
    s = resolve_suspects(g, ["a", "a"])
    assert s.resolved == (0,)
    assert s.members == ("a",)
    with pytest.raises(UnknownLabelError, match="'z'"):
        resolve_suspects(g, ["z"])
    with pytest.raises(DataError):
        resolve_suspects(g, [])


def test_load_labels():
    assert load_labels(io.StringIO("# suspects\n686\n\n687\n")) == ["686", "687"]
    with pytest.raises(ParseError):
        load_labels(io.StringIO("a b\n"))


def _random_edge_text(rng):
    labels = [f"n{i}" for i in range(rng.randint(1, 12))]
    lines = []
    for _ in range(rng.randint(1, 30)):
        lines.append(f"{rng.choice(labels)} {rng.choice(labels)}")
    return "\n".join(lines) + "\n"


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_structure_invariants_and_round_trip(seed):
    rng = random.Random(seed)
    text = _random_edge_text(rng)
    try:
        g = graph_from_text(text)
    except EmptyGraphError:
        return
    pairs = set()
    for u, nbrs in enumerate(g.adjacency):
        assert u not in nbrs
        assert list(nbrs) == sorted(set(nbrs))
        for v in nbrs:
            assert u in g.adjacency[v]
            pairs.add((min(u, v), max(u, v)))
    assert len(pairs) == g.m
    assert len(set(g.labels)) == g.n
    assert all(g.node(lab) == i for i, lab in enumerate(g.labels))

    out = io.StringIO()
    write_edge_list(g, out)
    again = graph_from_text(out.getvalue())
    assert again == g
    assert again.labels == g.labels and again.adjacency == g.adjacency
    assert graph_from_text(text) == g
