"""Core types: graphs, residue constraints, queries, witnesses and verdicts.

Graphs are simple (no self-loops, no parallel edges) over dense vertex
indices ``0..n-1``. Undirected edges are stored as ``(min, max)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Malformed graph or witness text; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    directed: bool = False
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        directed: bool = False,
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not directed and u > v:
                u, v = v, u
            canon.add((u, v))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("one label per vertex required")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))
        object.__setattr__(self, "directed", bool(directed))
        object.__setattr__(self, "labels", labels)

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph({kind}, n={self.n}, edges={sorted(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted successor lists (all neighbours when undirected)."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            if not self.directed:
                adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        if not self.directed:
            return self.out_neighbors
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Successor sets as bitmasks."""
        masks = []
        for nbrs in self.out_neighbors:
            b = 0
            for w in nbrs:
                b |= 1 << w
            masks.append(b)
        return tuple(masks)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.out_neighbors[v]

    def has_edge(self, u: int, v: int) -> bool:
        if not self.directed and u > v:
            u, v = v, u
        return (u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def underlying(self) -> Graph:
        """The undirected graph obtained by forgetting arc directions."""
        if not self.directed:
            return self
        return Graph(self.n, self.edges, directed=False, labels=self.labels)

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1`` plus the index -> vertex list."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), edges, self.directed), keep

    def components(self) -> list[list[int]]:
        """Weakly connected components, each sorted, ordered by least vertex."""
        und = self.underlying().out_neighbors
        seen = [False] * self.n
        comps = []
        for r in range(self.n):
            if seen[r]:
                continue
            seen[r] = True
            stack, comp = [r], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in und[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


@dataclass(frozen=True)
class ResidueConstraint:
    modulus: int
    allowed: frozenset[int]

    def __init__(self, modulus: int, allowed: Iterable[int]):
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        allowed = frozenset(int(r) for r in allowed)
        if not allowed:
            raise ValueError("allowed residue set must be nonempty")
        if any(not 0 <= r < modulus for r in allowed):
            raise ValueError(f"allowed residues must lie in 0..{modulus - 1}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "allowed", allowed)

    @classmethod
    def single(cls, p: int, q: int) -> ResidueConstraint:
        """Lengths congruent to ``p`` mod ``q`` (``p`` is reduced first)."""
        return cls(q, {p % q})

    def accepts(self, length: int) -> bool:
        return length % self.modulus in self.allowed

    def shifted(self, delta: int) -> ResidueConstraint:
        return ResidueConstraint(self.modulus, {(r + delta) % self.modulus for r in self.allowed})

    def __str__(self) -> str:
        return f"q={self.modulus} allowed={{{','.join(map(str, sorted(self.allowed)))}}}"


class Kind(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"


@dataclass(frozen=True)
class Query:
    kind: Kind
    constraint: ResidueConstraint
    source: int | None = None
    target: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.PATH and (self.source is None or self.target is None):
            raise ValueError("path query needs source and target")
        if self.kind is Kind.CYCLE and (self.source is not None or self.target is not None):
            raise ValueError("cycle query takes no endpoints")

    @classmethod
    def path(cls, s: int, t: int, constraint: ResidueConstraint) -> Query:
        return cls(Kind.PATH, constraint, s, t)

    @classmethod
    def cycle(cls, constraint: ResidueConstraint) -> Query:
        return cls(Kind.CYCLE, constraint)

    def check_endpoints(self, g: Graph) -> None:
        for v in (self.source, self.target):
            if v is not None and not 0 <= v < g.n:
                raise ValueError(f"endpoint {v} out of range for n={g.n}")


@dataclass(frozen=True)
class Witness:
    """A path (``vertices[0]`` to ``vertices[-1]``) or a cyclic vertex sequence.

    ``walk=True`` marks a path witness that may repeat vertices.
    """

    kind: Kind
    vertices: tuple[int, ...]
    walk: bool = False

    def __init__(self, kind: Kind | str, vertices: Iterable[int], walk: bool = False):
        object.__setattr__(self, "kind", Kind(kind))
        object.__setattr__(self, "vertices", tuple(int(v) for v in vertices))
        object.__setattr__(self, "walk", walk)

    @property
    def length(self) -> int:
        if self.kind is Kind.PATH:
            return len(self.vertices) - 1
        return len(self.vertices)


def canonical_cycle(vertices: Sequence[int], directed: bool) -> tuple[int, ...]:
    """Rotate so the least vertex comes first; undirected cycles also pick the
    direction whose second vertex is smaller."""
    vs = list(vertices)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if not directed and len(vs) > 2 and vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


class Outcome(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    witness: Witness | None = None
    reason: str = ""
    # pairwise disjoint witnesses for multi-component queries
    family: tuple[Witness, ...] = ()

    @classmethod
    def yes(cls, witness: Witness | None, reason: str = "") -> Verdict:
        return cls(Outcome.YES, witness, reason)

    @classmethod
    def no(cls) -> Verdict:
        return cls(Outcome.NO)

    @classmethod
    def unknown(cls, reason: str) -> Verdict:
        return cls(Outcome.UNKNOWN, reason=reason)

    @property
    def is_yes(self) -> bool:
        return self.outcome is Outcome.YES

    @property
    def is_no(self) -> bool:
        return self.outcome is Outcome.NO

    @property
    def is_unknown(self) -> bool:
        return self.outcome is Outcome.UNKNOWN


def _is_int_seq(vs) -> bool:
    return all(isinstance(v, int) and not isinstance(v, bool) for v in vs)


def validate_witness(g: Graph, query: Query, w: Witness) -> bool:
    """True iff ``w`` is a simple path/cycle (or walk, if flagged) in ``g``
    answering ``query``. Never raises on malformed witnesses."""
    try:
        vs = tuple(w.vertices)
        if w.kind is not query.kind or not vs or not _is_int_seq(vs):
            return False
        if any(not 0 <= v < g.n for v in vs):
            return False
        if w.kind is Kind.PATH:
            if vs[0] != query.source or vs[-1] != query.target:
                return False
            if not w.walk and len(set(vs)) != len(vs):
                return False
            if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
                return False
            length = len(vs) - 1
        else:
            if w.walk or len(set(vs)) != len(vs):
                return False
            if len(vs) < (2 if g.directed else 3):
                return False
            if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:] + vs[:1])):
                return False
            length = len(vs)
        return query.constraint.accepts(length)
    except (TypeError, AttributeError, ValueError):
        return False


# --- text formats -----------------------------------------------------------


def _data_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line


def _int(tok: str, no: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"{what} is not an integer: {tok!r}", no) from None


def parse_graph(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = list(_data_lines(text))
    if not lines:
        raise GraphFormatError("missing header", 1)
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "g" or parts[1] not in ("directed", "undirected"):
        raise GraphFormatError("malformed header, expected 'g <directed|undirected> <n> <m>'", no)
    directed = parts[1] == "directed"
    n = _int(parts[2], no, "vertex count")
    m = _int(parts[3], no, "edge count")
    if n < 0 or m < 0:
        raise GraphFormatError("malformed header, negative count", no)
    body = lines[1:]
    if len(body) != m:
        line = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else no + 1)
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}", line)
    seen: set[tuple[int, int]] = set()
    for no, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError("malformed edge line, expected '<u> <v>'", no)
        u, v = _int(parts[0], no, "endpoint"), _int(parts[1], no, "endpoint")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range: {u} {v} (n={n})", no)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", no)
        key = (u, v) if directed or u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", no)
        seen.add(key)
    return Graph(n, seen, directed)


def emit_graph(g: Graph) -> str:
    kind = "directed" if g.directed else "undirected"
    out = [f"g {kind} {g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(out) + "\n"


def emit_witness(w: Witness) -> str:
    out = [f"w {w.kind.value} {len(w.vertices)}"]
    out.extend(str(v) for v in w.vertices)
    return "\n".join(out) + "\n"


def parse_witness(text: str | bytes) -> Witness:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = list(_data_lines(text))
    if not lines:
        raise GraphFormatError("missing witness header", 1)
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "w" or parts[1] not in ("path", "cycle"):
        raise GraphFormatError("malformed header, expected 'w <path|cycle> <k>'", no)
    k = _int(parts[2], no, "vertex count")
    body = lines[1:]
    if len(body) != k:
        raise GraphFormatError(f"header declares {k} vertices, found {len(body)}", no)
    return Witness(parts[1], [_int(line, no, "vertex") for no, line in body])
