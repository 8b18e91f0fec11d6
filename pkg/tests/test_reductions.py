import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from modpath.generators import complete, cycle
from modpath.graph import Graph, Kind, Query, ResidueConstraint, validate_witness
from modpath.oracle import KDisjointQuery, oracle_decide, oracle_k_disjoint, oracle_spectrum
from modpath.reductions import (
    ReductionError,
    TwoDisjointPathsInstance,
    back_translate,
    cycle_modulus_multiply_driver,
    cycle_to_path,
    cycle_to_path_driver,
    gadget_cycle_lengths,
    hardness_cycle_gadget,
    hardness_path_gadget,
    input_query,
    modulus_multiply_driver,
    parse_map,
    path_to_cycle,
    shift_remainder,
)

TWO_ARCS = TwoDisjointPathsInstance(Graph(4, [(0, 1), (2, 3)], directed=True), 0, 1, 2, 3)


def _spectrum(out):
    q = out.query
    c = q.constraint
    return oracle_spectrum(out.graph, q.kind, q.source, q.target, c.modulus).achieved


# --- cycle to path --------------------------------------------------------------------------


def test_cycle_to_path_c6():
    out = cycle_to_path(cycle(6), 0, 3, (0, 1))
    assert out.graph == Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    assert (out.query.source, out.query.target, out.query.constraint.allowed) == (0, 1, {2})
    v = oracle_decide(out.graph, out.query)
    assert v.witness.length == 5
    back = out.back_translate(v.witness)
    assert back.length == 6 and validate_witness(cycle(6), Query.cycle(ResidueConstraint(3, {0})), back)


def test_cycle_to_path_k3():
    # K_3 has 0-1 paths of lengths 1 and 2; removing the edge leaves only 2
    assert oracle_spectrum(complete(3), Kind.PATH, 0, 1, 3).achieved == {1, 2}
    out = cycle_to_path(complete(3), 0, 3, (0, 1))
    assert _spectrum(out) == {2}
    v = oracle_decide(out.graph, out.query)
    assert v.witness.length == 2 and out.back_translate(v.witness).length == 3


def test_cycle_to_path_bipartite():
    for e in cycle(4).sorted_edges:
        assert oracle_decide(*_pair(cycle_to_path(cycle(4), 1, 2, e))).is_no


def _pair(out):
    return out.graph, out.query


def test_cycle_to_path_rejects_non_edges():
    with pytest.raises(ReductionError):
        cycle_to_path(cycle(4), 0, 2, (0, 2))


def test_cycle_to_path_driver_examples():
    v = cycle_to_path_driver(cycle(6), 0, 3, oracle_decide)
    assert v.witness.vertices == (0, 1, 2, 3, 4, 5)
    assert cycle_to_path_driver(cycle(5), 0, 2, oracle_decide).is_no
    v = cycle_to_path_driver(complete(4), 1, 3, oracle_decide)
    assert v.witness.length == 4


def test_driver_unknown_contaminates_no():
    from modpath.graph import Verdict

    assert cycle_to_path_driver(cycle(5), 0, 2, lambda g, q: Verdict.unknown("stub")).is_unknown
    # a yes still wins over unknown branches
    calls = []

    def flaky(g, q):
        calls.append(q)
        return Verdict.unknown("stub") if len(calls) == 1 else oracle_decide(g, q)

    assert cycle_to_path_driver(cycle(6), 0, 3, flaky).is_yes


# --- path to cycle --------------------------------------------------------------------------


def test_path_to_cycle_single_edge():
    out = path_to_cycle(Graph(2, [(0, 1)]), 0, 1, 1, 2)
    assert out.graph == Graph(3, [(0, 2), (1, 2), (0, 1)])
    assert out.query.constraint.modulus == 4 and out.query.constraint.allowed == {3}
    v = oracle_decide(out.graph, out.query)
    assert out.back_translate(v.witness).vertices == (0, 1)


def test_path_to_cycle_c4():
    out = path_to_cycle(cycle(4), 0, 2, 0, 2)
    assert out.graph.m == 9 and out.query.constraint.allowed == {1}
    v = oracle_decide(out.graph, out.query)
    assert v.witness.length == 5
    back = out.back_translate(v.witness)
    assert back.length == 2 and validate_witness(cycle(4), Query.path(0, 2, ResidueConstraint(2, {0})), back)
    odd = path_to_cycle(cycle(4), 0, 2, 1, 2)
    assert odd.query.constraint.allowed == {3}
    assert oracle_decide(odd.graph, odd.query).is_no


def test_path_to_cycle_refusals():
    with pytest.raises(ReductionError):
        path_to_cycle(Graph(2, [(0, 1)], directed=True), 0, 1, 0, 2)
    with pytest.raises(ReductionError):
        path_to_cycle(cycle(4), 1, 1, 0, 2)


# --- shift remainder ------------------------------------------------------------------------


def test_shift_remainder_examples():
    out = shift_remainder(cycle(4), 0, 2, 0, 3, 2)
    assert out.graph.n == 6 and out.graph.m == 6
    assert _spectrum(out) == {1}
    assert oracle_decide(out.graph, out.query).is_no
    same = shift_remainder(cycle(4), 0, 2, 1, 3, 1)
    assert same.graph.m == 4 + 3
    one = shift_remainder(Graph(2, [(0, 1)]), 0, 1, 1, 2, 0)
    v = oracle_decide(one.graph, one.query)
    assert v.witness.length == 2 and one.back_translate(v.witness).vertices == (0, 1)


@given(graphs(min_n=2, max_n=5), st.integers(1, 4), st.data())
def test_shift_remainder_twice_is_zero_mod_q(g, q, data):
    s, t = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    p = data.draw(st.integers(0, q - 1))
    p2 = data.draw(st.integers(0, q - 1))
    one = shift_remainder(g, s, t, p, q, p2)
    two = shift_remainder(one.graph, s, one.query.target, p2, q, p)
    appended = (two.graph.m - g.m)
    assert appended % q == 0
    before = oracle_decide(g, Query.path(s, t, ResidueConstraint(q, {p})))
    assert oracle_decide(two.graph, two.query).outcome == before.outcome


# --- modulus multiplication -----------------------------------------------------------------


def test_modulus_multiply_examples():
    v = modulus_multiply_driver(cycle(6), 0, 2, 2, 3, 2, oracle_decide)
    assert v.witness.vertices == (0, 1, 2)
    assert modulus_multiply_driver(cycle(6), 0, 2, 0, 3, 2, oracle_decide).is_no
    seen = []

    def spy(g, q):
        seen.append(q)
        return oracle_decide(g, q)

    modulus_multiply_driver(cycle(6), 0, 2, 1, 3, 1, spy)
    assert len(seen) == 1 and seen[0].constraint.modulus == 3


def test_modulus_multiply_rejects_k0():
    with pytest.raises(ReductionError):
        modulus_multiply_driver(cycle(6), 0, 2, 1, 3, 0, oracle_decide)


@given(graphs(min_n=2, max_n=5), st.integers(1, 3), st.integers(1, 3), st.data())
def test_modulus_multiply_matches_oracle(g, q, k, data):
    s, t = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    p = data.draw(st.integers(0, q - 1))
    query = Query.path(s, t, ResidueConstraint(q, {p}))
    v = modulus_multiply_driver(g, s, t, p, q, k, oracle_decide)
    assert v.outcome == oracle_decide(g, query).outcome
    if v.is_yes:
        assert validate_witness(g, query, v.witness)


@given(graphs(max_n=5), st.integers(1, 3), st.integers(1, 3), st.data())
def test_cycle_modulus_multiply_matches_oracle(g, q, k, data):
    p = data.draw(st.integers(0, q - 1))
    query = Query.cycle(ResidueConstraint(q, {p}))
    v = cycle_modulus_multiply_driver(g, p, q, k, oracle_decide)
    assert v.outcome == oracle_decide(g, query).outcome


# --- hardness gadgets -----------------------------------------------------------------------


def test_hardness_path_two_arcs():
    out = hardness_path_gadget(TWO_ARCS, 1, 2)
    v = oracle_decide(out.graph, out.query)
    assert v.witness.length == 5
    first, second = out.back_translate(v.witness)
    assert first.vertices == (0, 1) and second.vertices == (2, 3)


def test_hardness_path_p0_two_arcs():
    out = hardness_path_gadget(TWO_ARCS, 0, 2)
    v = oracle_decide(out.graph, out.query)
    assert v.witness.length == 6
    assert [w.vertices for w in out.back_translate(v.witness)] == [(0, 1), (2, 3)]


def test_hardness_path_unreachable_t():
    inst = TwoDisjointPathsInstance(Graph(4, [(1, 0), (2, 3)], directed=True), 0, 1, 2, 3)
    for q in (2, 3):
        for p in range(q):
            out = hardness_path_gadget(inst, p, q)
            assert oracle_decide(out.graph, out.query).is_no


def test_hardness_cycle_examples():
    out = hardness_cycle_gadget(TWO_ARCS, 2, 3)
    v = oracle_decide(out.graph, out.query)
    assert v.witness.length == 8
    assert [w.vertices for w in out.back_translate(v.witness)] == [(0, 1), (2, 3)]
    out = hardness_cycle_gadget(TWO_ARCS, 1, 3)
    assert oracle_decide(out.graph, out.query).witness.length == 10


def test_hardness_cycle_without_second_link():
    inst = TwoDisjointPathsInstance(Graph(4, [(0, 1)], directed=True), 0, 1, 2, 3)
    for p in (1, 2):
        out = hardness_cycle_gadget(inst, p, 3)
        assert oracle_decide(out.graph, out.query).is_no


def test_hardness_cycle_refuses_p0():
    with pytest.raises(ReductionError, match="open complexity"):
        hardness_cycle_gadget(TWO_ARCS, 0, 3)


def test_terminals_must_be_distinct():
    with pytest.raises(ValueError):
        TwoDisjointPathsInstance(Graph(3, [(0, 1)], directed=True), 0, 1, 1, 2)


@pytest.mark.parametrize("q", range(3, 51))
def test_gadget_cycle_lengths(q):
    for p in range(1, q):
        p1, p2 = gadget_cycle_lengths(p, q)
        assert 0 < p1 < q and 0 < p2 < q
        assert p1 != p and p2 != p
        assert (p1 + p2) % q == p


@given(graphs(min_n=4, max_n=5, directed=True), st.integers(2, 3), st.data())
def test_hardness_gadgets_match_two_disjoint_paths(g, q, data):
    ends = data.draw(st.permutations(range(g.n)))[:4]
    inst = TwoDisjointPathsInstance(g, *ends)
    truth = oracle_k_disjoint(g, KDisjointQuery.paths([(ends[0], ends[1]), (ends[2], ends[3])], ResidueConstraint(1, {0})))
    p = data.draw(st.integers(0, q - 1))
    outs = [hardness_path_gadget(inst, p, q)]
    if p > 0 and q >= 3:
        outs.append(hardness_cycle_gadget(inst, p, q))
    for out in outs:
        v = oracle_decide(out.graph, out.query)
        assert v.outcome == truth.outcome
        if v.is_yes:
            a, b = out.back_translate(v.witness)
            assert validate_witness(g, Query.path(ends[0], ends[1], ResidueConstraint(1, {0})), a)
            assert validate_witness(g, Query.path(ends[2], ends[3], ResidueConstraint(1, {0})), b)
            assert not set(a.vertices) & set(b.vertices)


# --- round trips and structure --------------------------------------------------------------


@given(graphs(min_n=2, max_n=5, directed=False), st.integers(1, 4), st.data())
def test_reductions_round_trip(g, q, data):
    s, t = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    p = data.draw(st.integers(0, q - 1))
    outs = [path_to_cycle(g, s, t, p, q), shift_remainder(g, s, t, p, q, data.draw(st.integers(0, q - 1)))]
    if g.m:
        outs.append(cycle_to_path(g, p, q, data.draw(st.sampled_from(g.sorted_edges))))
    for out in outs:
        imap = parse_map(out.instance_map.emit())
        assert imap == out.instance_map
        input_q = input_query(imap, p, q)
        v = oracle_decide(out.graph, out.query)
        if out.instance_map.name != "cycle-to-path":
            assert v.outcome == oracle_decide(g, input_q).outcome
        if v.is_yes:
            assert validate_witness(g, input_q, back_translate(imap, v.witness))


def test_map_text():
    out = path_to_cycle(Graph(2, [(0, 1)]), 0, 1, 1, 2)
    assert out.instance_map.emit() == "m path-to-cycle\ninput 2 undirected\nendpoints 0 1\nfresh-edge 0 1\nsub 0 1 2\n"
    with pytest.raises(ValueError, match="unknown map record"):
        parse_map("m x\nbogus 1\n")


@given(graphs(min_n=4, max_n=6, directed=True), st.integers(2, 5), st.data())
def test_gadgets_never_create_parallel_arcs(g, q, data):
    ends = data.draw(st.permutations(range(g.n)))[:4]
    inst = TwoDisjointPathsInstance(g, *ends)
    p = data.draw(st.integers(1, q - 1))
    outs = [hardness_path_gadget(inst, 0, q), hardness_path_gadget(inst, p, q)]
    if q >= 3:
        outs.append(hardness_cycle_gadget(inst, p, q))
    for out in outs:
        h = out.graph
        assert h.m == len(set(h.edges))
        assert all(u != v for u, v in h.edges)
        # subdividing by q multiplies every original arc
        assert h.m >= q * g.m
