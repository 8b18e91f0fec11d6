import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from modpath.generators import complete, cycle, path
from modpath.graph import Graph, Kind, Query, ResidueConstraint, validate_witness
from modpath.oracle import (
    Budget,
    BudgetExhausted,
    KDisjointQuery,
    atlas_graphs,
    enumerate_small_graphs,
    iter_simple_cycles,
    iter_simple_paths,
    oracle_all_same,
    oracle_decide,
    oracle_k_disjoint,
    oracle_spectrum,
)


def test_decide_examples():
    assert oracle_decide(cycle(4), Query.path(0, 2, ResidueConstraint(2, {1}))).is_no
    v = oracle_decide(complete(3), Query.path(0, 1, ResidueConstraint(2, {0})))
    assert v.witness.vertices == (0, 2, 1)
    assert oracle_decide(cycle(5), Query.cycle(ResidueConstraint(2, {0}))).is_no


def test_decide_returns_least_witness():
    v = oracle_decide(complete(4), Query.cycle(ResidueConstraint(1, {0})))
    assert v.witness.vertices == (0, 1, 2)


def test_budget_exhaustion_is_unknown():
    v = oracle_decide(complete(7), Query.cycle(ResidueConstraint(50, {49})), limit=100)
    assert v.is_unknown and v.reason == "budget"


def test_endpoints_out_of_range():
    with pytest.raises(ValueError):
        oracle_decide(cycle(4), Query.path(0, 9, ResidueConstraint(2, {0})))


def test_spectrum_examples():
    assert oracle_spectrum(cycle(6), Kind.CYCLE, q=3).achieved == {0}
    assert oracle_spectrum(complete(4), Kind.CYCLE, q=3).achieved == {0, 1}
    assert oracle_spectrum(cycle(4), Kind.PATH, 0, 2, 2).achieved == {0}
    assert oracle_spectrum(path(3), Kind.PATH, 1, 1, 4).achieved == {0}
    assert str(oracle_spectrum(complete(4), Kind.CYCLE, q=3)) == "spectrum cycle q=3 achieved={0,1}"


def test_spectrum_never_truncates():
    with pytest.raises(BudgetExhausted):
        oracle_spectrum(complete(7), Kind.CYCLE, q=50, limit=100)


def test_all_same_examples():
    assert oracle_all_same(cycle(4), 0, 2, 2) == (True, 0)
    assert oracle_all_same(complete(3), 0, 1, 2) == (False, None)
    assert oracle_all_same(Graph(2, [(0, 1)]), 0, 1, 5) == (True, 1)
    with pytest.raises(ValueError):
        oracle_all_same(Graph(3, [(0, 1)]), 0, 2, 2)


def test_enumerators_count_k4():
    assert len(list(iter_simple_cycles(complete(4), Budget()))) == 7
    assert len(list(iter_simple_paths(complete(4), 0, 3, Budget()))) == 5


def test_directed_two_cycles_are_cycles():
    g = Graph(2, [(0, 1), (1, 0)], directed=True)
    assert list(iter_simple_cycles(g, Budget())) == [(0, 1)]


def test_k_disjoint_examples():
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    v = oracle_k_disjoint(two_triangles, KDisjointQuery.cycles(2, ResidueConstraint(1, {0})))
    assert v.is_yes and len(v.family) == 2
    assert not set(v.family[0].vertices) & set(v.family[1].vertices)
    assert oracle_k_disjoint(complete(4), KDisjointQuery.cycles(2, ResidueConstraint(1, {0}))).is_no


def test_k_disjoint_crossing_gadget():
    # s=0 -> t=1 and s'=2 -> t'=3; every route passes through hub 4
    cross = Graph(5, [(0, 4), (4, 1), (2, 4), (4, 3)], directed=True)
    any_len = ResidueConstraint(1, {0})
    assert oracle_k_disjoint(cross, KDisjointQuery.paths([(0, 1), (2, 3)], any_len)).is_no
    bypass = Graph(6, [(0, 4), (4, 1), (2, 5), (5, 3)], directed=True)
    v = oracle_k_disjoint(bypass, KDisjointQuery.paths([(0, 1), (2, 3)], any_len))
    assert [w.vertices for w in v.family] == [(0, 4, 1), (2, 5, 3)]


def test_k_disjoint_shared_endpoint_is_no():
    g = path(4)
    kq = KDisjointQuery.paths([(0, 1), (1, 3)], ResidueConstraint(1, {0}))
    assert oracle_k_disjoint(g, kq).is_no


def test_k_cap_enforced():
    with pytest.raises(ValueError):
        oracle_k_disjoint(complete(3), KDisjointQuery.cycles(5, ResidueConstraint(1, {0})))


@pytest.mark.parametrize("n, directed, count", [(2, False, 2), (3, False, 8), (3, True, 64)])
def test_enumerate_small_graphs(n, directed, count):
    gs = list(enumerate_small_graphs(n, directed))
    assert len(gs) == count == len(set(gs))


def test_enumeration_size_guard():
    with pytest.raises(ValueError):
        next(enumerate_small_graphs(8))
    with pytest.raises(ValueError):
        next(enumerate_small_graphs(6, directed=True))


def test_atlas_class_counts():
    counts = [sum(1 for g in atlas_graphs(n, n)) for n in range(8)]
    assert counts == [1, 1, 2, 4, 11, 34, 156, 1044]


def _achieved(g, kind, s, t, q):
    return oracle_spectrum(g, kind, s, t, q).achieved


@given(graphs(min_n=1, max_n=5), st.integers(1, 5), st.data())
def test_spectrum_matches_decide(g, q, data):
    s = data.draw(st.integers(0, g.n - 1))
    t = data.draw(st.integers(0, g.n - 1))
    kind = data.draw(st.sampled_from(list(Kind)))
    ends = (s, t) if kind is Kind.PATH else (None, None)
    achieved = _achieved(g, kind, *ends, q)
    for r in range(q):
        query = Query(kind, ResidueConstraint.single(r, q), *ends)
        v = oracle_decide(g, query)
        assert v.is_yes == (r in achieved)
        if v.is_yes:
            assert validate_witness(g, query, v.witness)


@settings(max_examples=40)
@given(graphs(min_n=1, max_n=5), st.integers(2, 5), st.data())
def test_enlarging_allowed_set_is_monotone(g, q, data):
    small = data.draw(st.sets(st.integers(0, q - 1), min_size=1))
    extra = data.draw(st.sets(st.integers(0, q - 1)))
    a = oracle_decide(g, Query.cycle(ResidueConstraint(q, small)))
    b = oracle_decide(g, Query.cycle(ResidueConstraint(q, small | extra)))
    assert not (a.is_yes and b.is_no)


def test_no_unknowns_on_seven_vertices():
    """A no-answer on K_7 needs the full enumeration and fits the default budget."""
    budget = Budget()
    # cycle lengths 3..7 miss residue 2 mod 6
    assert oracle_decide(complete(7), Query.cycle(ResidueConstraint(6, {2})), budget).is_no
    assert budget.used < budget.limit
    paths = Budget()
    assert oracle_decide(complete(7), Query.path(0, 6, ResidueConstraint(7, {0})), paths).is_no
    assert paths.used < paths.limit
