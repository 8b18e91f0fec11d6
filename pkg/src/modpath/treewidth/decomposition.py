"""Tree decompositions: validation, exchange format, heuristic and exact search."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from ..graph import Graph, GraphFormatError

DEFAULT_EFFORT = 200_000
EXACT_MAX_N = 40
EXACT_MAX_WIDTH = 4


class InvalidDecomposition(ValueError):
    pass


class DecompositionFailure(RuntimeError):
    """No decomposition within the cap was found.

    ``proved`` is set only when exhaustive search showed treewidth > cap.
    """

    def __init__(self, message: str, proved: bool = False):
        super().__init__(message)
        self.proved = proved


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]
    root: int = 0

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.bags]
        for a, b in self.tree_edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def children(self) -> list[list[int]]:
        """Child lists when rooted at ``root``."""
        adj = self.adjacency()
        kids: list[list[int]] = [[] for _ in self.bags]
        seen = {self.root}
        queue = deque([self.root])
        while queue:
            x = queue.popleft()
            for y in sorted(adj[x]):
                if y not in seen:
                    seen.add(y)
                    kids[x].append(y)
                    queue.append(y)
        return kids


def validate_decomposition(td: TreeDecomposition, g: Graph | None = None) -> None:
    """Raise ``InvalidDecomposition`` naming the first violated axiom."""
    k = len(td.bags)
    if k == 0:
        raise InvalidDecomposition("tree: decomposition has no nodes")
    if not 0 <= td.root < k:
        raise InvalidDecomposition(f"tree: root {td.root} out of range")
    if len(td.tree_edges) != k - 1:
        raise InvalidDecomposition(f"tree: {k} nodes need {k - 1} tree edges, got {len(td.tree_edges)}")
    for a, b in td.tree_edges:
        if not (0 <= a < k and 0 <= b < k) or a == b:
            raise InvalidDecomposition(f"tree: bad tree edge ({a}, {b})")
    adj = td.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != k:
        raise InvalidDecomposition("tree: decomposition tree is not connected")
    if g is None:
        return
    where: dict[int, list[int]] = {}
    for i, bag in enumerate(td.bags):
        for v in bag:
            if not 0 <= v < g.n:
                raise InvalidDecomposition(f"vertex coverage: bag {i} holds unknown vertex {v}")
            where.setdefault(v, []).append(i)
    for v in range(g.n):
        if v not in where:
            raise InvalidDecomposition(f"vertex coverage: vertex {v} is in no bag")
    for u, v in g.sorted_edges:
        if not any(u in td.bags[i] for i in where[v]):
            raise InvalidDecomposition(f"edge coverage: edge ({u}, {v}) is in no bag")
    for v, nodes in where.items():
        nodes_set = set(nodes)
        start = nodes[0]
        reach = {start}
        stack = [start]
        while stack:
            for y in adj[stack.pop()]:
                if y in nodes_set and y not in reach:
                    reach.add(y)
                    stack.append(y)
        if reach != nodes_set:
            raise InvalidDecomposition(f"connectivity: bags holding vertex {v} are not connected")


# --- exchange format ----------------------------------------------------------


def emit_decomposition(td: TreeDecomposition) -> str:
    out = [f"td {len(td.bags)} {td.width}"]
    for i, bag in enumerate(td.bags):
        out.append(" ".join(["b", str(i)] + [str(v) for v in sorted(bag)]))
    for a, b in sorted(td.tree_edges):
        out.append(f"e {a} {b}")
    return "\n".join(out) + "\n"


def parse_decomposition(text: str) -> TreeDecomposition:
    header = None
    bags: dict[int, frozenset[int]] = {}
    edges = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if header is None:
                if len(parts) != 3 or parts[0] != "td":
                    raise GraphFormatError("malformed header, expected 'td <nodes> <width>'", no)
                header = (int(parts[1]), int(parts[2]))
            elif parts[0] == "b" and len(parts) >= 2:
                node = int(parts[1])
                if node in bags:
                    raise GraphFormatError(f"bag {node} given twice", no)
                bags[node] = frozenset(int(x) for x in parts[2:])
            elif parts[0] == "e" and len(parts) == 3:
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise GraphFormatError(f"unrecognised line {line!r}", no)
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"non-integer field in {line!r}", no) from None
    if header is None:
        raise GraphFormatError("missing header", 1)
    count, width = header
    if sorted(bags) != list(range(count)):
        raise GraphFormatError(f"expected bags 0..{count - 1}")
    td = TreeDecomposition(tuple(bags[i] for i in range(count)), tuple(edges))
    if td.width != width:
        raise GraphFormatError(f"header width {width} but bags give {td.width}")
    return td


# --- construction ---------------------------------------------------------------


def _adjacency_sets(g: Graph) -> dict[int, set[int]]:
    adj = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def decomposition_from_order(g: Graph, order: list[int]) -> TreeDecomposition:
    """Standard elimination-ordering decomposition: one bag per vertex."""
    if g.n == 0:
        return TreeDecomposition((frozenset(),), ())
    adj = _adjacency_sets(g)
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    parent = []
    for v in order:
        nb = adj[v]
        bags.append(frozenset(nb | {v}))
        parent.append(pos[min(nb, key=pos.__getitem__)] if nb else None)
        for a, b in itertools.combinations(nb, 2):
            adj[a].add(b)
            adj[b].add(a)
        for a in nb:
            adj[a].discard(v)
        del adj[v]
    root = len(order) - 1
    edges = []
    for i, p in enumerate(parent):
        if p is not None:
            edges.append((i, p))
        elif i != root:
            edges.append((i, root))
    return TreeDecomposition(tuple(bags), tuple(edges), root)


def _fill_in(adj: dict[int, set[int]], v: int) -> int:
    nb = list(adj[v])
    return sum(1 for a, b in itertools.combinations(nb, 2) if b not in adj[a])


def _eliminate(adj: dict[int, set[int]], v: int) -> None:
    nb = adj.pop(v)
    for a in nb:
        adj[a].discard(v)
        adj[a].update(nb - {a})


def greedy_order(g: Graph, rule: str = "min-fill") -> list[int]:
    adj = _adjacency_sets(g)
    order = []
    while adj:
        if rule == "min-fill":
            v = min(adj, key=lambda x: (_fill_in(adj, x), len(adj[x]), x))
        else:
            v = min(adj, key=lambda x: (len(adj[x]), x))
        order.append(v)
        _eliminate(adj, v)
    return order


def order_width(g: Graph, order: list[int]) -> int:
    adj = _adjacency_sets(g)
    width = -1
    for v in order:
        width = max(width, len(adj[v]))
        _eliminate(adj, v)
    return width


def minor_min_width(adj: dict[int, set[int]]) -> int:
    """Lower bound on treewidth: contract a min-degree vertex into its
    min-degree neighbour, tracking the largest minimum degree seen."""
    adj = {v: set(nb) for v, nb in adj.items()}
    lb = 0
    while len(adj) > 1:
        v = min(adj, key=lambda x: (len(adj[x]), x))
        lb = max(lb, len(adj[v]))
        if not adj[v]:
            del adj[v]
            continue
        u = min(adj[v], key=lambda x: (len(adj[x]), x))
        for w in adj[v]:
            if w != u:
                adj[w].discard(v)
                adj[w].add(u)
                adj[u].add(w)
        adj[u].discard(v)
        del adj[v]
    return lb


class _SearchExhausted(Exception):
    pass


def exact_order(g: Graph, width_cap: int, effort: int = DEFAULT_EFFORT) -> list[int] | None:
    """Elimination order of width <= ``width_cap``, or None if none exists.

    Branch and bound over elimination sets with memoised failures, the
    simplicial-vertex rule and the minor-min-width bound. Raises
    ``_SearchExhausted`` when ``effort`` search nodes are used up.
    """
    nodes = 0
    failed: set[frozenset[int]] = set()

    def search(adj: dict[int, set[int]], eliminated: frozenset[int]) -> list[int] | None:
        nonlocal nodes
        nodes += 1
        if nodes > effort:
            raise _SearchExhausted
        if len(adj) <= width_cap + 1:
            return sorted(adj)
        if eliminated in failed:
            return None
        adj = {v: set(nb) for v, nb in adj.items()}
        forced = []
        changed = True
        while changed and len(adj) > width_cap + 1:
            changed = False
            for v in sorted(adj):
                if len(adj[v]) <= width_cap and _fill_in(adj, v) == 0:
                    forced.append(v)
                    _eliminate(adj, v)
                    changed = True
                    break
        if len(adj) <= width_cap + 1:
            return forced + sorted(adj)
        elim = eliminated | frozenset(forced)
        if elim in failed or minor_min_width(adj) > width_cap:
            failed.add(eliminated)
            failed.add(elim)
            return None
        cands = sorted((v for v in adj if len(adj[v]) <= width_cap), key=lambda x: (_fill_in(adj, x), x))
        for v in cands:
            sub = {x: set(nb) for x, nb in adj.items()}
            _eliminate(sub, v)
            rest = search(sub, elim | {v})
            if rest is not None:
                return forced + [v] + rest
        failed.add(eliminated)
        failed.add(elim)
        return None

    return search(_adjacency_sets(g), frozenset())


def compute_decomposition(
    g: Graph,
    width_cap: int,
    effort: int = DEFAULT_EFFORT,
    exact: bool = True,
    underlying: bool = False,
) -> TreeDecomposition:
    """Decomposition of width <= ``width_cap``.

    Tries min-fill, then min-degree; if both miss the cap and the instance
    is small (n <= 40, cap <= 4), runs the exact search. Raises
    ``DecompositionFailure`` otherwise.
    """
    if width_cap < 1:
        raise ValueError("width_cap must be >= 1")
    if g.directed:
        if not underlying:
            raise ValueError("directed input: pass underlying=True to decompose the underlying graph")
        g = g.underlying()
    for rule in ("min-fill", "min-degree"):
        order = greedy_order(g, rule)
        if order_width(g, order) <= width_cap:
            return decomposition_from_order(g, order)
    if not exact or g.n > EXACT_MAX_N or width_cap > EXACT_MAX_WIDTH:
        raise DecompositionFailure(f"not found within budget (heuristics exceed width {width_cap})")
    try:
        order = exact_order(g, width_cap, effort)
    except _SearchExhausted:
        raise DecompositionFailure(f"not found within budget ({effort} search nodes)") from None
    if order is None:
        raise DecompositionFailure(f"treewidth exceeds {width_cap} (proved)", proved=True)
    return decomposition_from_order(g, order)
