"""Deterministic graph generators.

``generate`` accepts either a descriptor string such as
``"gnm_random(10, 15, false)"`` or ``"subdivision(complete(3), 2)"``, or an
already-built ``Graph``.
"""

from __future__ import annotations

import ast
import itertools
import random

import networkx as nx

from .graph import Graph


class InfeasibleDescriptor(ValueError):
    pass


def cycle(n: int) -> Graph:
    if n < 3:
        raise InfeasibleDescriptor("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 1:
        raise InfeasibleDescriptor("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 0:
        raise InfeasibleDescriptor("complete needs n >= 0")
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise InfeasibleDescriptor("complete_bipartite needs a, b >= 0")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def gnm_random(n: int, m: int, directed: bool = False, seed: int = 0) -> Graph:
    pairs = list(itertools.permutations(range(n), 2) if directed else itertools.combinations(range(n), 2))
    if not 0 <= m <= len(pairs):
        raise InfeasibleDescriptor(f"gnm_random: m={m} not in 0..{len(pairs)}")
    rng = random.Random(seed)
    return Graph(n, rng.sample(pairs, m), directed)


def random_regular(n: int, d: int, seed: int = 0) -> Graph:
    if n < 0 or d < 0 or d >= max(n, 1) or (n * d) % 2:
        raise InfeasibleDescriptor(f"random_regular({n}, {d}) infeasible")
    h = nx.random_regular_graph(d, n, seed=seed)
    return Graph(n, h.edges())


def subdivision(g: Graph, factor: int) -> Graph:
    """Replace every edge by a path of ``factor`` edges through fresh vertices.

    Fresh vertices are appended after the originals, edge by edge in sorted
    edge order.
    """
    if factor < 1:
        raise InfeasibleDescriptor("subdivision factor must be >= 1")
    nxt = g.n
    edges = []
    for u, v in g.sorted_edges:
        chain = [u] + list(range(nxt, nxt + factor - 1)) + [v]
        nxt += factor - 1
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, edges, g.directed)


_SEEDED = {"gnm_random", "random_regular"}
_BUILDERS = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "gnm_random": gnm_random,
    "random_regular": random_regular,
    "subdivision": subdivision,
}


def _eval(node: ast.AST, seed: int):
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, bool)):
        return node.value
    if isinstance(node, ast.Name) and node.id.lower() in ("true", "false"):
        return node.id.lower() == "true"
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
        name = node.func.id
        if name not in _BUILDERS:
            raise InfeasibleDescriptor(f"unknown generator {name!r}")
        args = [_eval(a, seed) for a in node.args]
        try:
            if name in _SEEDED:
                return _BUILDERS[name](*args, seed=seed)
            return _BUILDERS[name](*args)
        except TypeError as exc:
            raise InfeasibleDescriptor(f"bad arguments for {name}: {exc}") from None
    raise InfeasibleDescriptor(f"cannot parse descriptor fragment: {ast.dump(node)}")


def generate(descriptor: str | Graph, seed: int = 0) -> Graph:
    if isinstance(descriptor, Graph):
        return descriptor
    try:
        tree = ast.parse(descriptor.strip(), mode="eval")
    except SyntaxError as exc:
        raise InfeasibleDescriptor(f"cannot parse descriptor {descriptor!r}") from exc
    g = _eval(tree.body, seed)
    if not isinstance(g, Graph):
        raise InfeasibleDescriptor(f"descriptor {descriptor!r} does not build a graph")
    return g
