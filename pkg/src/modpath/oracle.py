"""Exhaustive ground-truth solvers for small graphs.

Everything here is exponential by design. Searches are depth-first over
partial simple paths with a visited bitset, neighbours in ascending order, so
the first witness found is the lexicographically least one.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, Kind, Outcome, Query, ResidueConstraint, Verdict, Witness

DEFAULT_BUDGET = 10**8
DEFAULT_K_CAP = 4


def default_budget() -> int:
    env = os.environ.get("MODGRAPH_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class BudgetExhausted(RuntimeError):
    """The search-node budget ran out before the search completed."""


class Budget:
    """Counts path extensions; raises ``BudgetExhausted`` past ``limit``."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = default_budget() if limit is None else limit
        self.used = 0


def _as_budget(limit: int | Budget | None) -> Budget:
    return limit if isinstance(limit, Budget) else Budget(limit)


def iter_simple_paths(g: Graph, s: int, t: int, budget: Budget, blocked: int = 0) -> Iterator[tuple[int, ...]]:
    """Simple s-t paths avoiding ``blocked`` (bitmask), in lexicographic order."""
    if (blocked >> s) & 1 or (blocked >> t) & 1:
        return
    if s == t:
        yield (s,)
        return
    nbrs = g.out_neighbors
    path = [s]
    visited = blocked | (1 << s)
    stack = [iter(nbrs[s])]
    limit = budget.limit
    while stack:
        for w in stack[-1]:
            if (visited >> w) & 1:
                continue
            budget.used += 1
            if budget.used > limit:
                raise BudgetExhausted(f"node budget {limit} exhausted")
            if w == t:
                path.append(t)
                yield tuple(path)
                path.pop()
                continue
            path.append(w)
            visited |= 1 << w
            stack.append(iter(nbrs[w]))
            break
        else:
            stack.pop()
            visited &= ~(1 << path.pop())


def iter_simple_cycles(g: Graph, budget: Budget, blocked: int = 0) -> Iterator[tuple[int, ...]]:
    """Each simple cycle once, in canonical form, in lexicographic order.

    Canonical form: least vertex first; for undirected graphs the second
    vertex is smaller than the last.
    """
    nbrs = g.out_neighbors
    directed = g.directed
    min_len = 2 if directed else 3
    limit = budget.limit
    for v in range(g.n):
        if (blocked >> v) & 1:
            continue
        # vertices below v belong to cycles already reported
        visited = blocked | ((1 << (v + 1)) - 1)
        path = [v]
        stack = [iter(nbrs[v])]
        back = g.in_neighbors[v] if directed else nbrs[v]
        closing = 0
        for u in back:
            closing |= 1 << u
        while stack:
            for w in stack[-1]:
                if (visited >> w) & 1:
                    continue
                budget.used += 1
                if budget.used > limit:
                    raise BudgetExhausted(f"node budget {limit} exhausted")
                path.append(w)
                visited |= 1 << w
                stack.append(iter(nbrs[w]))
                if (closing >> w) & 1 and len(path) >= min_len and (directed or path[1] < w):
                    yield tuple(path)
                break
            else:
                stack.pop()
                visited &= ~(1 << path.pop())


def _candidates(g: Graph, query: Query, budget: Budget, blocked: int = 0) -> Iterator[tuple[int, ...]]:
    if query.kind is Kind.PATH:
        return iter_simple_paths(g, query.source, query.target, budget, blocked)
    return iter_simple_cycles(g, budget, blocked)


def oracle_decide(g: Graph, query: Query, limit: int | Budget | None = None) -> Verdict:
    query.check_endpoints(g)
    budget = _as_budget(limit)
    c = query.constraint
    offset = -1 if query.kind is Kind.PATH else 0
    try:
        for vs in _candidates(g, query, budget):
            if c.accepts(len(vs) + offset):
                return Verdict.yes(Witness(query.kind, vs))
    except BudgetExhausted:
        return Verdict.unknown("budget")
    return Verdict.no()


@dataclass(frozen=True)
class Spectrum:
    modulus: int
    kind: Kind
    achieved: frozenset[int]

    @property
    def all_same(self) -> bool:
        return len(self.achieved) == 1

    def __str__(self) -> str:
        return f"spectrum {self.kind.value} q={self.modulus} achieved={{{','.join(map(str, sorted(self.achieved)))}}}"


def oracle_spectrum(
    g: Graph,
    kind: Kind | str,
    s: int | None = None,
    t: int | None = None,
    q: int = 2,
    limit: int | Budget | None = None,
) -> Spectrum:
    """Exact residue spectrum; raises ``BudgetExhausted`` rather than truncating."""
    kind = Kind(kind)
    query = Query(kind, ResidueConstraint(q, range(q)), s, t)
    query.check_endpoints(g)
    budget = _as_budget(limit)
    offset = -1 if kind is Kind.PATH else 0
    achieved: set[int] = set()
    for vs in _candidates(g, query, budget):
        achieved.add((len(vs) + offset) % q)
        if len(achieved) == q:
            break
    return Spectrum(q, kind, frozenset(achieved))


def _reachable(g: Graph, s: int, t: int) -> bool:
    seen = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        if v == t:
            return True
        for w in g.out_neighbors[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def oracle_all_same(g: Graph, s: int, t: int, q: int, limit: int | Budget | None = None) -> tuple[bool, int | None]:
    """``(True, r)`` iff every simple s-t path has length ``r`` mod ``q``."""
    if not _reachable(g, s, t):
        raise ValueError(f"{s} and {t} are not connected")
    spec = oracle_spectrum(g, Kind.PATH, s, t, q, limit)
    if spec.all_same:
        return True, next(iter(spec.achieved))
    return False, None


@dataclass(frozen=True)
class KDisjointQuery:
    """``k`` component queries whose solutions must be pairwise vertex-disjoint."""

    components: tuple[Query, ...]

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise ValueError("need at least one component")
        object.__setattr__(self, "components", components)

    @property
    def k(self) -> int:
        return len(self.components)

    @classmethod
    def paths(cls, pairs, constraint: ResidueConstraint) -> KDisjointQuery:
        return cls(Query.path(s, t, constraint) for s, t in pairs)

    @classmethod
    def cycles(cls, k: int, constraint: ResidueConstraint) -> KDisjointQuery:
        return cls(Query.cycle(constraint) for _ in range(k))


def oracle_k_disjoint(
    g: Graph, kq: KDisjointQuery, limit: int | Budget | None = None, cap: int = DEFAULT_K_CAP
) -> Verdict:
    if kq.k > cap:
        raise ValueError(f"k={kq.k} exceeds cap {cap}")
    for q in kq.components:
        q.check_endpoints(g)
    budget = _as_budget(limit)

    # endpoints each component needs for itself
    required = []
    for q in kq.components:
        ends = set() if q.kind is Kind.CYCLE else {q.source, q.target}
        required.append(ends)
    for a, b in itertools.combinations(range(kq.k), 2):
        if required[a] & required[b]:
            return Verdict.no()
    reserved_after = [0] * (kq.k + 1)
    for i in range(kq.k - 1, -1, -1):
        mask = reserved_after[i + 1]
        for v in required[i]:
            mask |= 1 << v
        reserved_after[i] = mask

    chosen: list[tuple[int, ...]] = []

    def search(i: int, used: int) -> bool:
        if i == kq.k:
            return True
        q = kq.components[i]
        offset = -1 if q.kind is Kind.PATH else 0
        blocked = used | reserved_after[i + 1]
        for vs in _candidates(g, q, budget, blocked):
            if not q.constraint.accepts(len(vs) + offset):
                continue
            mask = 0
            for v in vs:
                mask |= 1 << v
            chosen.append(vs)
            if search(i + 1, used | mask):
                return True
            chosen.pop()
        return False

    try:
        found = search(0, 0)
    except BudgetExhausted:
        return Verdict.unknown("budget")
    if not found:
        return Verdict.no()
    family = tuple(Witness(q.kind, vs) for q, vs in zip(kq.components, chosen))
    return Verdict(Outcome.YES, family[0], family=family)


MAX_ENUM_UNDIRECTED = 7
MAX_ENUM_DIRECTED = 5


def enumerate_small_graphs(n: int, directed: bool = False) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices exactly once.

    Graphs are produced in order of the edge bitmask over the sorted list of
    possible edges.
    """
    cap = MAX_ENUM_DIRECTED if directed else MAX_ENUM_UNDIRECTED
    if not 0 <= n <= cap:
        raise ValueError(f"enumeration limited to n <= {cap} ({'directed' if directed else 'undirected'})")
    pairs = list(itertools.permutations(range(n), 2) if directed else itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1], directed)


def atlas_graphs(max_n: int = 7, min_n: int = 0) -> Iterator[Graph]:
    """One representative per isomorphism class of undirected graphs, n <= 7."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas only covers n <= 7")
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if min_n <= n <= max_n:
            yield Graph(n, h.edges())
