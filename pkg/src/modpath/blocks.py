"""Biconnected components, block-cut trees and per-block parity profiles."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]

    @property
    def is_single_edge(self) -> bool:
        return len(self.edges) == 1


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    # block-cut tree on nodes ("B", i) and ("C", v)
    tree: dict

    def blocks_of(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]

    def tree_node(self, v: int):
        """Tree node housing ``v``: its cut-vertex node, or its unique block."""
        if v in self.cut_vertices:
            return ("C", v)
        owners = self.blocks_of(v)
        return ("B", owners[0]) if owners else None

    def tree_path(self, a, b) -> list | None:
        prev = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y in self.tree.get(x, ()):
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        if b not in prev:
            return None
        out = []
        while b is not None:
            out.append(b)
            b = prev[b]
        return out[::-1]


def biconnected_components(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan with an explicit edge stack (iterative)."""
    if g.directed:
        raise ValueError("biconnected components need an undirected graph")
    nbrs = g.out_neighbors
    disc = [-1] * g.n
    low = [0] * g.n
    counter = 0
    blocks: list[Block] = []
    cuts: set[int] = set()

    for root in range(g.n):
        if disc[root] != -1 or not nbrs[root]:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(nbrs[w])))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp_edges = []
                while True:
                    e = edge_stack.pop()
                    comp_edges.append(e)
                    if e == (parent, v):
                        break
                es = frozenset((min(a, b), max(a, b)) for a, b in comp_edges)
                vs = frozenset(x for e in es for x in e)
                blocks.append(Block(vs, es))
        if root_children > 1:
            cuts.add(root)

    blocks.sort(key=lambda b: (min(b.vertices), sorted(b.edges)))
    tree: dict = {}
    for i, b in enumerate(blocks):
        tree.setdefault(("B", i), [])
        for v in sorted(b.vertices & cuts):
            tree[("B", i)].append(("C", v))
            tree.setdefault(("C", v), []).append(("B", i))
    return BlockDecomposition(tuple(blocks), frozenset(cuts), tree)


class BlockClass(enum.Enum):
    SINGLE_EDGE = "single-edge"
    BIPARTITE = "bipartite"
    NON_BIPARTITE = "non-bipartite"


@dataclass(frozen=True)
class BlockParity:
    cls: BlockClass
    coloring: dict | None = None  # vertex -> 0/1 for bipartite blocks


def two_color(vertices, adjacency) -> tuple[dict, tuple[int, int] | None, dict]:
    """BFS 2-colouring restricted to ``vertices``.

    Returns ``(colour, conflict_edge, parent)``; ``conflict_edge`` is an edge
    joining two equally coloured vertices, or ``None`` when bipartite.
    """
    color: dict = {}
    parent: dict = {}
    conflict = None
    for r in sorted(vertices):
        if r in color:
            continue
        color[r] = 0
        parent[r] = None
        queue = deque([r])
        while queue:
            v = queue.popleft()
            for w in adjacency(v):
                if w not in vertices:
                    continue
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v] and conflict is None:
                    conflict = (min(v, w), max(v, w))
    return color, conflict, parent


def block_adjacency(block: Block) -> dict:
    adj: dict = {v: [] for v in block.vertices}
    for a, b in block.edges:
        adj[a].append(b)
        adj[b].append(a)
    for v in adj:
        adj[v].sort()
    return adj


@lru_cache(maxsize=256)
def parity_profile(g: Graph) -> tuple[BlockDecomposition, tuple[BlockParity, ...]]:
    bd = biconnected_components(g)
    profile = []
    for b in bd.blocks:
        if b.is_single_edge:
            profile.append(BlockParity(BlockClass.SINGLE_EDGE))
            continue
        adj = block_adjacency(b)
        color, conflict, _ = two_color(b.vertices, adj.__getitem__)
        if conflict is None:
            profile.append(BlockParity(BlockClass.BIPARTITE, color))
        else:
            profile.append(BlockParity(BlockClass.NON_BIPARTITE))
    return bd, tuple(profile)
