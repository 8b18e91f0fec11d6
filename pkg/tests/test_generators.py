import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from modpath.generators import (
    InfeasibleDescriptor,
    complete,
    complete_bipartite,
    cycle,
    generate,
    gnm_random,
    path,
    random_regular,
    subdivision,
)
from modpath.graph import Graph, Kind
from modpath.oracle import oracle_spectrum


def test_builders():
    assert cycle(5).m == 5
    assert path(4).edges == {(0, 1), (1, 2), (2, 3)}
    assert complete(4).m == 6
    assert complete_bipartite(2, 3).m == 6


def test_subdivided_triangle():
    g = subdivision(complete(3), 2)
    assert (g.n, g.m) == (6, 6)
    assert oracle_spectrum(g, Kind.CYCLE, q=7).achieved == {6}


def test_seeded_generators_are_deterministic():
    assert gnm_random(10, 15, False, seed=7) == gnm_random(10, 15, False, seed=7)
    assert generate("gnm_random(10, 15, false)", seed=7) == gnm_random(10, 15, False, seed=7)
    assert generate("random_regular(12, 6)", seed=3) == random_regular(12, 6, seed=3)
    g = random_regular(12, 6, seed=3)
    assert all(g.degree(v) == 6 for v in range(12))


def test_descriptors_compose():
    assert generate("subdivision(complete(3), 2)") == subdivision(complete(3), 2)
    assert generate("gnm_random(4, 3, true)", seed=1).directed


@pytest.mark.parametrize(
    "desc",
    ["random_regular(5, 3)", "cycle(2)", "gnm_random(3, 9)", "mystery(3)", "cycle(", "cycle(n)", "subdivision(complete(3), 0)"],
)
def test_infeasible_descriptors(desc):
    with pytest.raises(InfeasibleDescriptor):
        generate(desc)


@given(graphs(max_n=6), st.integers(1, 4))
def test_subdivision_counts(g, f):
    h = subdivision(g, f)
    assert h.n == g.n + (f - 1) * g.m
    assert h.m == f * g.m
    assert h.directed == g.directed


@settings(max_examples=40)
@given(graphs(max_n=5), st.integers(1, 3), st.integers(1, 4))
def test_subdivision_scales_cycle_spectrum(g, f, q):
    """Spectrum of the f-subdivision mod f*q is the input spectrum mod q scaled by f."""
    base = oracle_spectrum(g, Kind.CYCLE, q=q).achieved
    scaled = oracle_spectrum(subdivision(g, f), Kind.CYCLE, q=f * q).achieved
    assert scaled == {f * r for r in base}


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=5), st.integers(1, 3), st.integers(1, 4), st.data())
def test_subdivision_scales_path_spectrum(g, f, q, data):
    s = data.draw(st.integers(0, g.n - 1))
    t = data.draw(st.integers(0, g.n - 1))
    base = oracle_spectrum(g, Kind.PATH, s, t, q).achieved
    scaled = oracle_spectrum(subdivision(g, f), Kind.PATH, s, t, f * q).achieved
    assert scaled == {f * r for r in base}


def test_empty_graph_generators():
    assert complete(0) == Graph(0)
    assert path(1) == Graph(1)
