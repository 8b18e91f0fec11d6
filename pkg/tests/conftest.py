import itertools
from pathlib import Path

import hypothesis
from hypothesis import strategies as st

from modpath.graph import Graph, emit_graph

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=6, directed=None, connected=False):
    """Small simple graphs; ``directed=None`` draws either kind."""
    if directed is None:
        directed = draw(st.booleans())
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.permutations(range(n), 2) if directed else itertools.combinations(range(n), 2))
    edges = [p for p in pairs if draw(st.booleans())]
    if connected and n > 1:
        # chain a spanning path so the graph is (weakly) connected
        edges += [(i, i + 1) for i in range(n - 1)]
    return Graph(n, set(edges), directed)


def write_graph(tmp_path: Path, g: Graph, name: str = "g.txt") -> str:
    path = tmp_path / name
    path.write_text(emit_graph(g))
    return str(path)


# criterion number -> (passed, summary); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, summary = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {summary}")
