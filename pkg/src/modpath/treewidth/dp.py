"""Dynamic program over a nice tree decomposition for residue-constrained
simple paths and cycles.

A state at a node summarises a family of vertex-disjoint path segments in
the subgraph processed below that node:

``(pairs, interior, residue, closed)``

* ``pairs``: sorted tuple of endpoint pairs, one per open segment. Endpoints
  are bag vertices, or the virtual markers ``VS``/``VT`` standing for an
  already-forgotten source/target.
* ``interior``: bitmask of bag vertices of degree 2.
* ``residue``: total number of edges used, mod q.
* ``closed``: cycle mode only; the single cycle has been closed.

Bag vertices neither in a pair nor interior are unused. Every edge is
consumed at exactly one introduce node (its owner), never at joins.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import Graph, Kind, Query, ResidueConstraint, Verdict, Witness, canonical_cycle
from .decomposition import DecompositionFailure, compute_decomposition
from .nice import NiceDecomposition, NiceNode, NodeKind, make_nice

VS = -2
VT = -1
DEFAULT_STATE_CAP = 5_000_000

EMPTY = ((), 0, 0, False)


class StateBudgetExceeded(RuntimeError):
    pass


def edge_owners(g: Graph, nd: NiceDecomposition) -> dict[tuple[int, int], int]:
    """Assign each edge to the first introduce node (in storage order) whose
    bag holds both endpoints while its child lacks the introduced vertex."""
    owners: dict[tuple[int, int], int] = {}
    for i, node in enumerate(nd.nodes):
        if node.kind is not NodeKind.INTRODUCE:
            continue
        v = node.vertex
        for u in node.bag:
            if u != v and g.has_edge(u, v):
                key = (u, v) if u < v else (v, u)
                owners.setdefault(key, i)
    missing = [e for e in g.sorted_edges if e not in owners]
    if missing:
        raise ValueError(f"decomposition does not match graph: edge {missing[0]} never introduced")
    return owners


@dataclass
class DPRun:
    """Tables of one DP run; ``tables[i]`` maps state -> back-pointer."""

    g: Graph
    nodes: list[NiceNode]
    kind: Kind
    s: int | None
    t: int | None
    q: int
    tables: list[dict] = field(default_factory=list)
    owned: dict[int, list[tuple[int, int]]] = field(default_factory=dict)
    state_count: int = 0

    @property
    def root(self) -> int:
        return len(self.nodes) - 1


class _Solver:
    def __init__(self, run: DPRun, state_cap: int):
        self.run = run
        self.q = run.q
        self.path_mode = run.kind is Kind.PATH
        self.s, self.t = run.s, run.t
        self.state_cap = state_cap

    def cap(self, v: int) -> int:
        if self.path_mode and (v == self.s or v == self.t):
            return 1
        return 2

    def add_edge(self, state, x: int, y: int):
        pairs, interior, residue, closed = state
        if closed:
            return None
        partner = {}
        for a, b in pairs:
            partner[a] = b
            partner[b] = a
        dx = 2 if (interior >> x) & 1 else (1 if x in partner else 0)
        dy = 2 if (interior >> y) & 1 else (1 if y in partner else 0)
        if dx >= self.cap(x) or dy >= self.cap(y):
            return None
        residue = (residue + 1) % self.q
        if dx == 0 and dy == 0:
            new_pairs = pairs + ((x, y) if x < y else (y, x),)
            return tuple(sorted(new_pairs)), interior, residue, False
        if dx == 0 or dy == 0:
            old, new = (y, x) if dx == 0 else (x, y)
            other = partner[old]
            rest = [p for p in pairs if old not in p]
            rest.append((new, other) if new < other else (other, new))
            return tuple(sorted(rest)), interior | (1 << old), residue, False
        px = partner[x]
        if px == y:
            # closing the segment x..y into a cycle
            if self.path_mode or len(pairs) != 1:
                return None
            return (), interior | (1 << x) | (1 << y), residue, True
        py = partner[y]
        rest = [p for p in pairs if x not in p and y not in p]
        rest.append((px, py) if px < py else (py, px))
        return tuple(sorted(rest)), interior | (1 << x) | (1 << y), residue, False

    def forget(self, state, v: int):
        pairs, interior, residue, closed = state
        if (interior >> v) & 1:
            return pairs, interior & ~(1 << v), residue, closed
        in_pair = any(v in p for p in pairs)
        if self.path_mode and (v == self.s or v == self.t):
            if not in_pair:
                return None
            mark = VS if v == self.s else VT
            new = []
            for a, b in pairs:
                if a == v:
                    a = mark
                elif b == v:
                    b = mark
                new.append((a, b) if a < b else (b, a))
            return tuple(sorted(new)), interior, residue, closed
        if in_pair:
            return None
        return state

    def join(self, a, b):
        pa, ia, ra, ca = a
        pb, ib, rb, cb = b
        if ca or cb:
            if ca and cb:
                return None
            other = b if ca else a
            if other != EMPTY:
                return None
            return a if ca else b
        ends_a = {x for p in pa for x in p}
        ends_b = {x for p in pb for x in p}
        used_a = ia
        used_b = ib
        for x in ends_a:
            if x >= 0:
                used_a |= 1 << x
        for x in ends_b:
            if x >= 0:
                used_b |= 1 << x
        if (ia & used_b) or (ib & used_a):
            return None
        shared = ends_a & ends_b
        if any(x < 0 or self.cap(x) < 2 for x in shared):
            return None
        interior = ia | ib
        for x in shared:
            interior |= 1 << x
        residue = (ra + rb) % self.q
        if not shared:
            return tuple(sorted(pa + pb)), interior, residue, False
        link: dict[int, list[int]] = {}
        for x, y in pa + pb:
            link.setdefault(x, []).append(y)
            link.setdefault(y, []).append(x)
        seen: set[int] = set()
        new_pairs = []
        for start in sorted(link):
            if start in seen or len(link[start]) != 1:
                continue
            seen.add(start)
            prev, cur = start, link[start][0]
            while len(link[cur]) == 2:
                seen.add(cur)
                x, y = link[cur]
                prev, cur = cur, (y if x == prev else x)
            seen.add(cur)
            new_pairs.append((start, cur) if start < cur else (cur, start))
        if len(seen) != len(link):
            # leftover endpoints all have degree 2: the union closed cycle(s)
            if self.path_mode or new_pairs:
                return None
            rest = [x for x in link if x not in seen]
            first = rest[0]
            prev, cur = first, link[first][0]
            size = 1
            while cur != first:
                x, y = link[cur]
                prev, cur = cur, (y if x == prev else x)
                size += 1
            if size != len(rest):
                return None
            return (), interior, residue, True
        return tuple(sorted(new_pairs)), interior, residue, False

    def _store(self, table: dict, state, bp) -> None:
        if state not in table:
            table[state] = bp
            self.run.state_count += 1
            if self.run.state_count > self.state_cap:
                raise StateBudgetExceeded(f"state budget {self.state_cap} exceeded")

    def solve(self) -> None:
        run = self.run
        for i, node in enumerate(run.nodes):
            table: dict = {}
            if node.kind is NodeKind.LEAF:
                self._store(table, EMPTY, ("leaf",))
            elif node.kind is NodeKind.INTRODUCE:
                child = run.tables[node.children[0]]
                owned = run.owned.get(i, [])
                for st in child:
                    branches = [(st, ())]
                    for e in owned:
                        grown = []
                        for cur, used in branches:
                            nxt = self.add_edge(cur, *e)
                            if nxt is not None:
                                grown.append((nxt, used + (e,)))
                        branches.extend(grown)
                    for cur, used in branches:
                        self._store(table, cur, ("intro", st, used))
            elif node.kind is NodeKind.FORGET:
                for st in run.tables[node.children[0]]:
                    nxt = self.forget(st, node.vertex)
                    if nxt is not None:
                        self._store(table, nxt, ("forget", st))
            else:
                left, right = (run.tables[c] for c in node.children)
                for a in left:
                    for b in right:
                        nxt = self.join(a, b)
                        if nxt is not None:
                            self._store(table, nxt, ("join", a, b))
            run.tables.append(table)


def _finalised_nodes(nd: NiceDecomposition) -> list[NiceNode]:
    """Append forget nodes so the root bag is empty."""
    nodes = list(nd.nodes)
    bag = nodes[-1].bag
    for v in sorted(bag):
        bag = bag - {v}
        nodes.append(NiceNode(NodeKind.FORGET, bag, v, (len(nodes) - 1,)))
    return nodes


def run_dp(
    g: Graph,
    nd: NiceDecomposition,
    kind: Kind | str,
    q: int,
    s: int | None = None,
    t: int | None = None,
    state_cap: int = DEFAULT_STATE_CAP,
) -> DPRun:
    """Fill all tables. Raises ``StateBudgetExceeded`` on overflow."""
    if g.directed:
        raise ValueError("the treewidth DP handles undirected graphs only")
    kind = Kind(kind)
    nodes = _finalised_nodes(nd)
    owners = edge_owners(g, nd)
    for v in range(g.n):
        if not any(v in node.bag for node in nd.nodes):
            raise ValueError(f"decomposition does not match graph: vertex {v} in no bag")
    owned: dict[int, list[tuple[int, int]]] = {}
    for e, i in sorted(owners.items()):
        owned.setdefault(i, []).append(e)
    run = DPRun(g, nodes, kind, s, t, q, owned=owned)
    _Solver(run, state_cap).solve()
    return run


def accepting_states(run: DPRun) -> dict[int, tuple]:
    """Residue -> first accepting root state."""
    out: dict[int, tuple] = {}
    for st in run.tables[run.root]:
        pairs, _, residue, closed = st
        if run.kind is Kind.PATH:
            ok = pairs == ((VS, VT),)
        else:
            ok = closed
        if ok and residue not in out:
            out[residue] = st
    return out


def reconstruct_edges(run: DPRun, node: int, state) -> list[tuple[int, int]]:
    """Edges of the partial solution behind ``state`` at ``node``.

    Raises ``AssertionError`` if any edge would be consumed twice.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    stack = [(node, state)]
    while stack:
        i, st = stack.pop()
        bp = run.tables[i][st]
        kids = run.nodes[i].children
        if bp[0] == "intro":
            for e in bp[2]:
                assert e not in seen, f"edge {e} consumed twice"
                seen.add(e)
                edges.append(e)
            stack.append((kids[0], bp[1]))
        elif bp[0] == "forget":
            stack.append((kids[0], bp[1]))
        elif bp[0] == "join":
            stack.append((kids[0], bp[1]))
            stack.append((kids[1], bp[2]))
    return sorted(edges)


def _walk_edges(edges, start: int) -> list[int]:
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    out = [start]
    prev = None
    cur = start
    while True:
        nxt = [x for x in adj.get(cur, []) if x != prev]
        if not nxt or nxt[0] == start:
            break
        prev, cur = cur, nxt[0]
        out.append(cur)
    return out


def _witness(run: DPRun, state) -> Witness:
    edges = reconstruct_edges(run, run.root, state)
    if run.kind is Kind.PATH:
        return Witness(Kind.PATH, _walk_edges(edges, run.s))
    start = min(x for e in edges for x in e)
    return Witness(Kind.CYCLE, canonical_cycle(_walk_edges(edges, start), False))


def tw_spectrum(
    g: Graph,
    kind: Kind | str,
    q: int,
    nd: NiceDecomposition,
    s: int | None = None,
    t: int | None = None,
    state_cap: int = DEFAULT_STATE_CAP,
) -> dict[int, Witness]:
    """Achieved residue -> witness, from a single DP run."""
    kind = Kind(kind)
    if kind is Kind.PATH and s == t:
        return {0: Witness(Kind.PATH, [s])}
    run = run_dp(g, nd, kind, q, s, t, state_cap)
    return {r: _witness(run, st) for r, st in sorted(accepting_states(run).items())}


def tw_decide(
    g: Graph,
    query: Query,
    nd: NiceDecomposition,
    state_cap: int = DEFAULT_STATE_CAP,
) -> Verdict:
    query.check_endpoints(g)
    c = query.constraint
    if query.kind is Kind.PATH and query.source == query.target:
        return Verdict.yes(Witness(Kind.PATH, [query.source])) if 0 in c.allowed else Verdict.no()
    try:
        run = run_dp(g, nd, query.kind, c.modulus, query.source, query.target, state_cap)
    except StateBudgetExceeded:
        return Verdict.unknown("state budget")
    acc = accepting_states(run)
    for r in sorted(c.allowed):
        if r in acc:
            return Verdict.yes(_witness(run, acc[r]))
    return Verdict.no()


def decompose_nice(g: Graph, width_cap: int, effort: int | None = None) -> NiceDecomposition:
    """``compute_decomposition`` followed by ``make_nice``."""
    kwargs = {} if effort is None else {"effort": effort}
    return make_nice(compute_decomposition(g, width_cap, **kwargs), g)


def modcycle_zero_decide(
    g: Graph,
    q: int,
    width_cap: int = 4,
    effort: int | None = None,
    threshold: int | None = None,
    state_cap: int = DEFAULT_STATE_CAP,
) -> Verdict:
    """Cycle of length divisible by ``q``.

    Small treewidth: exact DP. Otherwise a configured trusted threshold
    ``T(q)`` lets a proof of treewidth >= T answer yes without a witness;
    with no threshold the answer is unknown.
    """
    if g.directed:
        raise ValueError("modcycle_zero_decide needs an undirected graph")
    try:
        nd = decompose_nice(g, width_cap, effort)
    except DecompositionFailure as exc:
        failure = exc
    else:
        return tw_decide(g, Query.cycle(ResidueConstraint(q, {0})), nd, state_cap)
    if threshold is None:
        return Verdict.unknown(
            f"decomposition not found ({failure}); treewidth threshold for the wall-minor argument not configured"
        )
    proved = failure.proved and width_cap + 1 >= threshold
    if not proved and threshold - 1 >= 1:
        try:
            kwargs = {} if effort is None else {"effort": effort}
            compute_decomposition(g, threshold - 1, **kwargs)
        except DecompositionFailure as exc:
            proved = exc.proved
        else:
            proved = False
    if proved:
        return Verdict.yes(None, reason=f"existential: treewidth >= {threshold} forces a cycle of length 0 mod {q}")
    return Verdict.unknown(f"decomposition not found ({failure}); treewidth >= {threshold} not proved")
