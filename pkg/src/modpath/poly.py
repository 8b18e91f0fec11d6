"""Polynomial-time solvers for the tractable cases.

* ``walk_decide``: residue-constrained walks via the q-layer product graph.
* ``dag_decide``: on acyclic digraphs every walk is a simple path.
* ``parity_path_decide`` / ``all_same_parity``: undirected q=2 paths along
  the block-cut tree.
* ``parity_cycle_decide``: undirected odd/even cycles.
* ``directed_odd_cycle``: odd closed walks inside strongly connected
  components, shortcut to a simple odd cycle.
"""

from __future__ import annotations

from collections import deque

from .blocks import BlockClass, block_adjacency, parity_profile, two_color
from .graph import Graph, Kind, ResidueConstraint, Verdict, Witness, canonical_cycle


def _check_vertex(g: Graph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")


# --- walks ------------------------------------------------------------------


def walk_decide(g: Graph, s: int, t: int, constraint: ResidueConstraint) -> Verdict:
    """Is there an s-t walk whose length is in ``constraint``?

    BFS over states (vertex, length mod q); the witness is a shortest such
    walk, so it has fewer than ``n * q`` edges.
    """
    _check_vertex(g, s, t)
    q = constraint.modulus
    start = (s, 0)
    pred = {start: None}
    queue = deque([start])
    found = None
    while queue:
        state = queue.popleft()
        v, r = state
        if v == t and r in constraint.allowed:
            found = state
            break
        nr = (r + 1) % q
        for w in g.out_neighbors[v]:
            nxt = (w, nr)
            if nxt not in pred:
                pred[nxt] = state
                queue.append(nxt)
    if found is None:
        return Verdict.no()
    walk = []
    while found is not None:
        walk.append(found[0])
        found = pred[found]
    return Verdict.yes(Witness(Kind.PATH, walk[::-1], walk=True))


def topological_order(g: Graph) -> list[int] | None:
    indeg = [0] * g.n
    for _, v in g.edges:
        indeg[v] += 1
    ready = [v for v in range(g.n) if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in g.out_neighbors[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return order if len(order) == g.n else None


def dag_decide(g: Graph, s: int, t: int, constraint: ResidueConstraint) -> Verdict:
    if not g.directed:
        raise ValueError("dag_decide needs a directed graph")
    if topological_order(g) is None:
        raise ValueError("input has a directed cycle")
    v = walk_decide(g, s, t, constraint)
    if v.is_yes:
        return Verdict.yes(Witness(Kind.PATH, v.witness.vertices))
    return v


# --- undirected parity ------------------------------------------------------


def _tree_path_to_root(parent: dict, v: int) -> list[int]:
    out = [v]
    while parent[v] is not None:
        v = parent[v]
        out.append(v)
    return out


def _tree_cycle(parent: dict, a: int, b: int) -> list[int]:
    """Cycle formed by the non-tree edge ``a-b`` and the tree paths to their
    common ancestor."""
    pa = _tree_path_to_root(parent, a)
    pb = _tree_path_to_root(parent, b)
    on_b = {v: i for i, v in enumerate(pb)}
    for i, v in enumerate(pa):
        if v in on_b:
            j = on_b[v]
            return pa[: i + 1] + pb[:j][::-1]
    raise AssertionError("conflict edge endpoints lie in different trees")


def _bfs_path(adj: dict, u: int, v: int, avoid=frozenset()) -> list[int] | None:
    prev = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            out = []
            while x is not None:
                out.append(x)
                x = prev[x]
            return out[::-1]
        for y in adj[x]:
            if y not in prev and y not in avoid:
                prev[y] = x
                queue.append(y)
    return None


def _bfs_to_set(adj: dict, u: int, targets: set, avoid=frozenset()) -> list[int] | None:
    """Shortest path from ``u`` to the first vertex of ``targets`` it meets."""
    prev = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x in targets:
            out = []
            while x is not None:
                out.append(x)
                x = prev[x]
            return out[::-1]
        for y in adj[x]:
            if y not in prev and y not in avoid:
                prev[y] = x
                queue.append(y)
    return None


def _two_disjoint_to_set(adj: dict, u: int, v: int, targets: set) -> tuple[list[int], list[int]]:
    """Vertex-disjoint paths u -> targets and v -> targets, each stopping at
    its first target vertex. Needs a 2-connected ``adj`` with ``|targets| >= 2``.
    """
    if u in targets and v in targets:
        return [u], [v]
    if u in targets or v in targets:
        a, b = (u, v) if u in targets else (v, u)
        pb = _bfs_to_set(adj, b, targets - {a}, avoid={a})
        if pb is None:
            raise AssertionError("block is not 2-connected")
        return ([a], pb) if a == u else (pb, [a])

    # unit vertex capacities: node ("i", x) -> ("o", x)
    cap: dict = {}

    def arc(a, b):
        cap.setdefault(a, {})[b] = cap.get(a, {}).get(b, 0) + 1
        cap.setdefault(b, {}).setdefault(a, 0)

    src, snk = ("S",), ("T",)
    for x in adj:
        arc(("i", x), ("o", x))
        for y in adj[x]:
            if x not in targets:
                arc(("o", x), ("i", y))
    for x in targets:
        arc(("o", x), snk)
    arc(src, ("i", u))
    arc(src, ("i", v))
    for _ in range(2):
        prev = {src: None}
        queue = deque([src])
        while queue and snk not in prev:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in prev:
                    prev[b] = a
                    queue.append(b)
        if snk not in prev:
            raise AssertionError("block is not 2-connected")
        b = snk
        while prev[b] is not None:
            a = prev[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a

    def follow(start: int) -> list[int]:
        out = [start]
        x = start
        while x not in targets:
            for y in adj[x]:
                # flow used arc o(x) -> i(y) iff residual capacity is 0 on it
                if cap[("o", x)].get(("i", y), 1) == 0 and cap[("i", y)][("o", x)] > 0:
                    out.append(y)
                    x = y
                    break
            else:
                raise AssertionError("flow decomposition failed")
        return out

    return follow(u), follow(v)


def _cycle_arcs(cycle: list[int], x: int, y: int) -> tuple[list[int], list[int]]:
    """The two x-y arcs of ``cycle`` as vertex lists from x to y."""
    L = len(cycle)
    i, j = cycle.index(x), cycle.index(y)
    fwd = [cycle[(i + k) % L] for k in range((j - i) % L + 1)]
    bwd = [cycle[(i - k) % L] for k in range((i - j) % L + 1)]
    return fwd, bwd


def _parity_path_in_block(adj: dict, u: int, v: int, parity: int) -> list[int]:
    """Simple u-v path of the given length parity in a 2-connected
    non-bipartite block."""
    path = _bfs_path(adj, u, v)
    if (len(path) - 1) % 2 == parity:
        return path
    _, conflict, parent = two_color(set(adj), adj.__getitem__)
    cycle = _tree_cycle(parent, *conflict)
    pu, pv = _two_disjoint_to_set(adj, u, v, set(cycle))
    x, y = pu[-1], pv[-1]
    for arc in _cycle_arcs(cycle, x, y):
        cand = pu + arc[1:] + pv[::-1][1:]
        if (len(cand) - 1) % 2 == parity:
            return cand
    raise AssertionError("odd cycle arcs must differ in parity")


def _block_chain(bd, s: int, t: int) -> list[tuple[int, int, int]] | None:
    """``(block, entry, exit)`` triples along the block-cut tree from s to t."""
    a, b = bd.tree_node(s), bd.tree_node(t)
    if a is None or b is None:
        return None
    tp = bd.tree_path(a, b)
    if tp is None:
        return None
    chain = []
    entry = s
    for i, node in enumerate(tp):
        if node[0] != "B":
            continue
        exit_ = tp[i + 1][1] if i + 1 < len(tp) else t
        chain.append((node[1], entry, exit_))
        entry = exit_
    return chain


def _chain_options(g: Graph, s: int, t: int):
    bd, profile = parity_profile(g)
    chain = _block_chain(bd, s, t)
    if chain is None:
        return None
    options = []
    for bi, u, v in chain:
        bp = profile[bi]
        if bp.cls is BlockClass.SINGLE_EDGE:
            options.append((1,))
        elif bp.cls is BlockClass.BIPARTITE:
            options.append((bp.coloring[u] ^ bp.coloring[v],))
        else:
            options.append((0, 1))
    return bd, chain, options


def _sumset(options) -> set[int]:
    acc = {0}
    for opt in options:
        acc = {(a + b) % 2 for a in acc for b in opt}
    return acc


def parity_path_decide(g: Graph, s: int, t: int, p: int) -> Verdict:
    if g.directed:
        raise ValueError("parity_path_decide needs an undirected graph")
    _check_vertex(g, s, t)
    p %= 2
    if s == t:
        return Verdict.yes(Witness(Kind.PATH, [s])) if p == 0 else Verdict.no()
    res = _chain_options(g, s, t)
    if res is None:
        return Verdict.no()
    bd, chain, options = res
    if p not in _sumset(options):
        return Verdict.no()
    picks = [opt[0] for opt in options]
    if sum(picks) % 2 != p:
        k = next(i for i, opt in enumerate(options) if len(opt) == 2)
        picks[k] = 1 - picks[k]
    walk = [s]
    for (bi, u, v), opt, want in zip(chain, options, picks):
        block = bd.blocks[bi]
        if block.is_single_edge:
            seg = [u, v]
        elif len(opt) == 1:
            seg = _bfs_path(block_adjacency(block), u, v)
        else:
            seg = _parity_path_in_block(block_adjacency(block), u, v, want)
        walk.extend(seg[1:])
    return Verdict.yes(Witness(Kind.PATH, walk))


def all_same_parity(g: Graph, s: int, t: int) -> tuple[bool, int | None]:
    if g.directed:
        raise ValueError("all_same_parity needs an undirected graph")
    _check_vertex(g, s, t)
    if s == t:
        return True, 0
    res = _chain_options(g, s, t)
    if res is None:
        raise ValueError(f"{s} and {t} are not connected")
    sums = _sumset(res[2])
    if len(sums) == 1:
        return True, next(iter(sums))
    return False, None


def _even_cycle_in_block(adj: dict) -> list[int] | None:
    """An even cycle inside a block, or None when the block is a single edge
    or an odd cycle."""
    nv = len(adj)
    ne = sum(len(a) for a in adj.values()) // 2
    if ne == 1 or (ne == nv and nv % 2 == 1):
        return None
    color, conflict, parent = two_color(set(adj), adj.__getitem__)
    if conflict is None:
        # bipartite: any fundamental cycle is even
        for a in sorted(adj):
            for b in adj[a]:
                if parent[a] != b and parent[b] != a:
                    return _tree_cycle(parent, a, b)
        raise AssertionError("bipartite block without a non-tree edge")
    cycle = _tree_cycle(parent, *conflict)
    on_cycle = set(cycle)
    L = len(cycle)
    cycle_edges = {frozenset((cycle[i], cycle[(i + 1) % L])) for i in range(L)}
    ear = None
    for x in cycle:
        for w in adj[x]:
            if w in on_cycle:
                if frozenset((x, w)) not in cycle_edges:
                    ear = [x, w]
                    break
                continue
            # leave the cycle at x through w, return at the first other cycle vertex
            rest = _ear_back(adj, w, on_cycle, x)
            if rest is not None:
                ear = [x] + rest
                break
        if ear is not None:
            break
    if ear is None:
        raise AssertionError("block is neither an odd cycle nor has an ear")
    x, y = ear[0], ear[-1]
    for arc in _cycle_arcs(cycle, y, x):
        cand = ear + arc[1:-1]
        if len(cand) % 2 == 0:
            return cand
    raise AssertionError("ear cycles must differ in parity")


def _ear_back(adj: dict, w: int, on_cycle: set, x: int) -> list[int] | None:
    """Path from w (off the cycle) to a cycle vertex other than x whose
    interior avoids the cycle."""
    prev = {w: None}
    queue = deque([w])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b in prev or b == x:
                continue
            prev[b] = a
            if b in on_cycle:
                out = [b]
                while a is not None:
                    out.append(a)
                    a = prev[a]
                return out[::-1]
            queue.append(b)
    return None


def parity_cycle_decide(g: Graph, p: int) -> Verdict:
    if g.directed:
        raise ValueError("parity_cycle_decide needs an undirected graph")
    p %= 2
    if p == 1:
        _, conflict, parent = two_color(set(range(g.n)), g.out_neighbors.__getitem__)
        if conflict is None:
            return Verdict.no()
        return Verdict.yes(Witness(Kind.CYCLE, canonical_cycle(_tree_cycle(parent, *conflict), False)))
    bd, _ = parity_profile(g)
    for block in bd.blocks:
        cyc = _even_cycle_in_block(block_adjacency(block))
        if cyc is not None:
            return Verdict.yes(Witness(Kind.CYCLE, canonical_cycle(cyc, False)))
    return Verdict.no()


# --- directed ---------------------------------------------------------------


def strongly_connected_components(g: Graph) -> list[list[int]]:
    """Tarjan's algorithm, iterative; components sorted, ordered by least vertex."""
    index = [-1] * g.n
    low = [0] * g.n
    on_stack = [False] * g.n
    stack: list[int] = []
    comps = []
    counter = 0
    nbrs = g.out_neighbors
    for root in range(g.n):
        if index[root] != -1:
            continue
        work = [(root, iter(nbrs[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            pushed = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(nbrs[w])))
                    pushed = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if pushed:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    comps.sort()
    return comps


def shortcut_odd_closed_walk(seq: list[int]) -> list[int]:
    """Simple odd cycle contained in the odd closed walk ``seq`` (cyclic,
    last vertex joined back to the first)."""
    seq = list(seq)
    if len(seq) % 2 == 0:
        raise ValueError("closed walk must have odd length")
    while True:
        first: dict = {}
        for j, v in enumerate(seq):
            if v in first:
                i = first[v]
                piece = seq[i:j]
                if len(piece) % 2 == 1:
                    return piece
                seq = seq[:i] + seq[j:]
                break
            first[v] = j
        else:
            return seq


def directed_odd_cycle(g: Graph) -> Verdict:
    if not g.directed:
        raise ValueError("directed_odd_cycle needs a directed graph")
    for comp in strongly_connected_components(g):
        if len(comp) < 2:
            continue
        members = set(comp)
        r = comp[0]
        start, goal = (r, 0), (r, 1)
        pred = {start: None}
        queue = deque([start])
        while queue and goal not in pred:
            v, par = queue.popleft()
            for w in g.out_neighbors[v]:
                nxt = (w, 1 - par)
                if w in members and nxt not in pred:
                    pred[nxt] = (v, par)
                    queue.append(nxt)
        if goal not in pred:
            continue
        walk = []
        state = goal
        while state is not None:
            walk.append(state[0])
            state = pred[state]
        walk.reverse()  # r ... r, odd number of arcs
        cyc = shortcut_odd_closed_walk(walk[:-1])
        return Verdict.yes(Witness(Kind.CYCLE, canonical_cycle(cyc, True)))
    return Verdict.no()


def any_cycle_decide(g: Graph) -> Verdict:
    """Does ``g`` contain any cycle at all (the q=1 cycle case)?"""
    if g.directed:
        for comp in strongly_connected_components(g):
            if len(comp) < 2:
                continue
            members = set(comp)
            r = comp[0]
            # shortest cycle through r inside its component
            prev = {r: None}
            queue = deque([r])
            while queue:
                v = queue.popleft()
                for w in g.out_neighbors[v]:
                    if w == r:
                        out = []
                        while v is not None:
                            out.append(v)
                            v = prev[v]
                        return Verdict.yes(Witness(Kind.CYCLE, canonical_cycle(out[::-1], True)))
                    if w in members and w not in prev:
                        prev[w] = v
                        queue.append(w)
        return Verdict.no()
    color, _, parent = two_color(set(range(g.n)), g.out_neighbors.__getitem__)
    for a, b in g.sorted_edges:
        if parent[a] != b and parent[b] != a:
            pa = _tree_path_to_root(parent, a)
            pb = _tree_path_to_root(parent, b)
            on_b = {v: i for i, v in enumerate(pb)}
            for i, v in enumerate(pa):
                if v in on_b:
                    cyc = pa[: i + 1] + pb[: on_b[v]][::-1]
                    return Verdict.yes(Witness(Kind.CYCLE, canonical_cycle(cyc, False)))
    return Verdict.no()
