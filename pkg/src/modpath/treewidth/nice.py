"""Nice tree decompositions (leaf / introduce / forget / join)."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..graph import Graph
from .decomposition import InvalidDecomposition, TreeDecomposition, validate_decomposition


class NodeKind(str, enum.Enum):
    LEAF = "leaf"
    INTRODUCE = "introduce"
    FORGET = "forget"
    JOIN = "join"


@dataclass(frozen=True)
class NiceNode:
    kind: NodeKind
    bag: frozenset[int]
    vertex: int | None = None
    children: tuple[int, ...] = ()


@dataclass(frozen=True)
class NiceDecomposition:
    """Nodes are stored children-first, so index order is a valid bottom-up
    processing order; the root is the last node."""

    nodes: tuple[NiceNode, ...]

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    @property
    def width(self) -> int:
        return max((len(n.bag) for n in self.nodes), default=0) - 1

    def as_tree_decomposition(self) -> TreeDecomposition:
        edges = tuple((c, i) for i, node in enumerate(self.nodes) for c in node.children)
        return TreeDecomposition(tuple(n.bag for n in self.nodes), edges, self.root)

    def validate(self, g: Graph | None = None) -> None:
        for i, node in enumerate(self.nodes):
            kids = [self.nodes[c] for c in node.children]
            if any(c >= i for c in node.children):
                raise InvalidDecomposition(f"nice: node {i} has a child stored after it")
            if node.kind is NodeKind.LEAF:
                ok = not kids and not node.bag
            elif node.kind is NodeKind.INTRODUCE:
                ok = len(kids) == 1 and node.vertex in node.bag and kids[0].bag == node.bag - {node.vertex}
            elif node.kind is NodeKind.FORGET:
                ok = len(kids) == 1 and node.vertex not in node.bag and kids[0].bag == node.bag | {node.vertex}
            else:
                ok = len(kids) == 2 and all(k.bag == node.bag for k in kids)
            if not ok:
                raise InvalidDecomposition(f"nice: node {i} violates the {node.kind.value} rule")
        validate_decomposition(self.as_tree_decomposition(), g)


def make_nice(td: TreeDecomposition, g: Graph | None = None) -> NiceDecomposition:
    """Refine ``td`` into a nice decomposition of the same width.

    The root keeps the bag of ``td``'s root; with ``g`` given, the input is
    also checked for vertex/edge coverage and connectivity.
    """
    validate_decomposition(td, g)
    kids = td.children()
    nodes: list[NiceNode] = []

    def add(kind: NodeKind, bag: frozenset[int], vertex=None, children=()) -> int:
        nodes.append(NiceNode(kind, bag, vertex, tuple(children)))
        return len(nodes) - 1

    def chain(top: int, src: frozenset[int], dst: frozenset[int]) -> int:
        bag = src
        for v in sorted(src - dst):
            bag = bag - {v}
            top = add(NodeKind.FORGET, bag, v, (top,))
        for v in sorted(dst - src):
            bag = bag | {v}
            top = add(NodeKind.INTRODUCE, bag, v, (top,))
        return top

    # iterative post-order over the rooted input tree
    top_of: dict[int, int] = {}
    stack = [(td.root, False)]
    while stack:
        x, done = stack.pop()
        if not done:
            stack.append((x, True))
            for c in reversed(kids[x]):
                stack.append((c, False))
            continue
        bag = td.bags[x]
        if not kids[x]:
            top_of[x] = chain(add(NodeKind.LEAF, frozenset()), frozenset(), bag)
            continue
        tops = [chain(top_of[c], td.bags[c], bag) for c in kids[x]]
        cur = tops[0]
        for other in tops[1:]:
            cur = add(NodeKind.JOIN, bag, None, (cur, other))
        top_of[x] = cur
    # the root's subtree is built last, so its top is the final node
    assert top_of[td.root] == len(nodes) - 1
    return NiceDecomposition(tuple(nodes))
