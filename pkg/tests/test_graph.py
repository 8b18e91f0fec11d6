import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from modpath.generators import complete, cycle
from modpath.graph import (
    Graph,
    GraphFormatError,
    Kind,
    Query,
    ResidueConstraint,
    Verdict,
    Witness,
    canonical_cycle,
    emit_graph,
    emit_witness,
    parse_graph,
    parse_witness,
    validate_witness,
)

K3_TEXT = "g undirected 3 3\n0 1\n0 2\n1 2\n"


def test_undirected_edges_are_canonical():
    g = Graph(3, [(2, 0), (1, 2)])
    assert g.edges == {(0, 2), (1, 2)}
    assert g.has_edge(0, 2) and g.has_edge(2, 0)
    assert Graph(3, [(0, 2), (2, 0)]).m == 1


def test_directed_arcs_keep_orientation():
    g = Graph(2, [(0, 1)], directed=True)
    assert g.has_edge(0, 1) and not g.has_edge(1, 0)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(ValueError):
        Graph(3, edges)


def test_residue_constraint_checks():
    c = ResidueConstraint(3, [2])
    assert c.accepts(8) and not c.accepts(7)
    assert ResidueConstraint.single(-1, 3).allowed == {2}
    with pytest.raises(ValueError):
        ResidueConstraint(3, [5])
    assert str(ResidueConstraint(4, [3, 1])) == "q=4 allowed={1,3}"
    with pytest.raises(ValueError):
        ResidueConstraint(0, [0])
    with pytest.raises(ValueError):
        ResidueConstraint(3, [])


def test_query_shape_is_enforced():
    c = ResidueConstraint.single(0, 2)
    with pytest.raises(ValueError):
        Query(Kind.PATH, c, 0, None)
    with pytest.raises(ValueError):
        Query(Kind.CYCLE, c, 0, 1)


def test_validate_witness_examples():
    c4 = cycle(4)
    q = Query.path(0, 2, ResidueConstraint(2, {0}))
    assert validate_witness(c4, q, Witness("path", [0, 1, 2]))
    assert not validate_witness(c4, q, Witness("path", [0, 2]))
    c5 = cycle(5)
    assert not validate_witness(c5, Query.cycle(ResidueConstraint(2, {0})), Witness("cycle", range(5)))
    assert validate_witness(c5, Query.cycle(ResidueConstraint(2, {1})), Witness("cycle", range(5)))


def test_validate_witness_rejects_malformed_input_without_raising():
    g = cycle(4)
    q = Query.path(0, 2, ResidueConstraint(2, {0}))
    assert not validate_witness(g, q, Witness("path", []))
    assert not validate_witness(g, q, Witness("path", [0, 1, 0, 1, 2]))
    assert not validate_witness(g, q, Witness("cycle", [0, 1, 2]))
    assert not validate_witness(g, q, Witness("path", [0, 9, 2]))
    assert not validate_witness(g, q, None)


def test_walk_witnesses_may_repeat_vertices():
    g = Graph(3, [(0, 1), (1, 2)])
    q = Query.path(0, 2, ResidueConstraint(3, {1}))
    assert validate_witness(g, q, Witness("path", [0, 1, 0, 1, 2], walk=True))


def test_cycle_minimum_lengths():
    und = Graph(2, [(0, 1)])
    assert not validate_witness(und, Query.cycle(ResidueConstraint(1, {0})), Witness("cycle", [0, 1]))
    di = Graph(2, [(0, 1), (1, 0)], directed=True)
    assert validate_witness(di, Query.cycle(ResidueConstraint(2, {0})), Witness("cycle", [0, 1]))


def test_canonical_cycle():
    assert canonical_cycle([2, 3, 0, 1], directed=False) == (0, 1, 2, 3)
    assert canonical_cycle([2, 1, 0, 3], directed=False) == (0, 1, 2, 3)
    assert canonical_cycle([2, 1, 0, 3], directed=True) == (0, 3, 2, 1)


def test_verdict_constructors():
    assert Verdict.no().is_no
    assert Verdict.unknown("budget").reason == "budget"
    assert Verdict.yes(Witness("path", [0])).is_yes


# --- text formats ---------------------------------------------------------------------------


def test_parse_examples():
    assert parse_graph("g undirected 3 3\n0 1\n1 2\n0 2\n") == complete(3)
    assert parse_graph(b"g directed 2 2\n0 1\n1 0\n") == Graph(2, [(0, 1), (1, 0)], directed=True)
    assert parse_graph("# comment\ng undirected 2 0\n\n") == Graph(2)


@pytest.mark.parametrize(
    "text, fragment, line",
    [
        ("g undirected 2 1\n0 0\n", "self-loop", 2),
        ("g undirected 2 1\n0 5\n", "out of range", 2),
        ("g undirected 3 2\n0 1\n1 0\n", "duplicate edge", 3),
        ("g sideways 2 0\n", "malformed header", 1),
        ("g undirected 3 2\n0 1\n", "declares 2 edges", 3),
        ("g undirected 2 1\n0 x\n", "not an integer", 2),
        ("", "missing header", 1),
    ],
)
def test_parse_diagnostics(text, fragment, line):
    with pytest.raises(GraphFormatError) as exc:
        parse_graph(text)
    assert fragment in str(exc.value)
    assert exc.value.line == line


def test_emit_examples():
    assert emit_graph(complete(3)) == K3_TEXT
    assert emit_graph(Graph(0)) == "g undirected 0 0\n"
    two = "g directed 2 2\n0 1\n1 0\n"
    assert emit_graph(parse_graph(two)) == two


@given(graphs(max_n=7))
def test_graph_round_trip(g):
    assert parse_graph(emit_graph(g)) == g


@given(st.sampled_from(["path", "cycle"]), st.lists(st.integers(0, 50), max_size=8))
def test_witness_round_trip(kind, vs):
    w = Witness(kind, vs)
    assert parse_witness(emit_witness(w)) == w


def test_witness_parse_error():
    with pytest.raises(GraphFormatError):
        parse_witness("w path 3\n0\n1\n")
