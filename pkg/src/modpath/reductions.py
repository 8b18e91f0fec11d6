"""Instance transformations between modular path/cycle problems, the
Turing-reduction drivers built on them, and hardness gadgets from
two-disjoint-paths instances.

Fresh vertices are always appended after the input's vertices, in a fixed
order, so instance maps are reproducible. Back-translation therefore drops
every vertex index ``>= input_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .graph import Graph, Kind, Query, ResidueConstraint, Verdict, Witness, canonical_cycle

Solver = Callable[[Graph, Query], Verdict]


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class InstanceMap:
    """What is needed to turn an output witness into an input witness."""

    name: str
    input_n: int
    directed: bool
    source: int | None = None
    target: int | None = None
    removed_edge: tuple[int, int] | None = None
    fresh_edge: tuple[int, int] | None = None
    # original edge -> fresh interior vertices of its subdivision path
    subdivisions: tuple[tuple[tuple[int, int], tuple[int, ...]], ...] = ()
    # appended paths, each listed from its attachment vertex outward
    appended: tuple[tuple[int, ...], ...] = ()
    # two-disjoint-paths terminals (s, t, s', t')
    terminals: tuple[int, ...] = ()

    def lines(self) -> list[str]:
        out = [f"m {self.name}", f"input {self.input_n} {'directed' if self.directed else 'undirected'}"]
        if self.source is not None:
            out.append(f"endpoints {self.source} {self.target}")
        if self.terminals:
            out.append("terminals " + " ".join(map(str, self.terminals)))
        if self.removed_edge:
            out.append("removed-edge {} {}".format(*self.removed_edge))
        if self.fresh_edge:
            out.append("fresh-edge {} {}".format(*self.fresh_edge))
        for (u, v), fresh in self.subdivisions:
            out.append(" ".join(["sub", str(u), str(v)] + [str(x) for x in fresh]))
        for p in self.appended:
            out.append(" ".join(["appended"] + [str(x) for x in p]))
        return out

    def emit(self) -> str:
        return "\n".join(self.lines()) + "\n"


def parse_map(text: str) -> InstanceMap:
    kw: dict = {"subdivisions": [], "appended": []}
    for no, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        tag, args = parts[0], parts[1:]
        if tag == "m":
            kw["name"] = args[0]
        elif tag == "input":
            kw["input_n"] = int(args[0])
            kw["directed"] = args[1] == "directed"
        elif tag == "endpoints":
            kw["source"], kw["target"] = int(args[0]), int(args[1])
        elif tag == "terminals":
            kw["terminals"] = tuple(map(int, args))
        elif tag == "removed-edge":
            kw["removed_edge"] = (int(args[0]), int(args[1]))
        elif tag == "fresh-edge":
            kw["fresh_edge"] = (int(args[0]), int(args[1]))
        elif tag == "sub":
            kw["subdivisions"].append(((int(args[0]), int(args[1])), tuple(map(int, args[2:]))))
        elif tag == "appended":
            kw["appended"].append(tuple(map(int, args)))
        else:
            raise ValueError(f"line {no}: unknown map record {tag!r}")
    kw["subdivisions"] = tuple(kw["subdivisions"])
    kw["appended"] = tuple(kw["appended"])
    return InstanceMap(**kw)


@dataclass(frozen=True)
class ReductionOutput:
    graph: Graph
    query: Query
    instance_map: InstanceMap

    def back_translate(self, w: Witness) -> Witness | tuple[Witness, Witness]:
        return back_translate(self.instance_map, w)


@dataclass(frozen=True)
class TwoDisjointPathsInstance:
    graph: Graph
    s: int
    t: int
    s2: int
    t2: int

    def __post_init__(self):
        ends = (self.s, self.t, self.s2, self.t2)
        if any(not 0 <= v < self.graph.n for v in ends):
            raise ValueError("terminal out of range")
        if len(set(ends)) != 4:
            raise ValueError("terminals s, t, s', t' must be pairwise distinct")


# --- helpers --------------------------------------------------------------------


@dataclass
class _Builder:
    n: int
    directed: bool
    edges: list[tuple[int, int]] = field(default_factory=list)

    def fresh(self) -> int:
        self.n += 1
        return self.n - 1

    def chain(self, a: int, b: int, length: int) -> tuple[int, ...]:
        """Path of ``length`` edges from a to b; returns its fresh interior."""
        inner = tuple(self.fresh() for _ in range(length - 1))
        seq = (a,) + inner + (b,)
        self.edges.extend(zip(seq, seq[1:]))
        return inner

    def graph(self) -> Graph:
        g = Graph(self.n, self.edges, self.directed)
        if g.m != len(self.edges):
            raise AssertionError("construction created a parallel edge")
        return g


def _subdivide(g: Graph, b: _Builder, factor: int):
    subs = []
    for u, v in g.sorted_edges:
        subs.append(((u, v), b.chain(u, v, factor)))
    return tuple(subs)


def _originals(vs, n: int) -> list[int]:
    return [v for v in vs if v < n]


def _rotate_to(vs: tuple[int, ...], v: int) -> list[int]:
    i = vs.index(v)
    return list(vs[i:] + vs[:i])


# --- transformations on undirected and general graphs ------------------------------


def cycle_to_path(g: Graph, p: int, q: int, e: tuple[int, int]) -> ReductionOutput:
    """Cycles through edge ``e=(u, v)`` <-> u-v paths in ``g - e``.

    For a directed arc u->v the path query runs v -> u instead.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise ReductionError(f"({u}, {v}) is not an edge")
    key = (u, v) if g.directed or u < v else (v, u)
    ge = Graph(g.n, g.edges - {key}, g.directed)
    a, b = (v, u) if g.directed else (u, v)
    query = Query.path(a, b, ResidueConstraint.single(p - 1, q))
    imap = InstanceMap("cycle-to-path", g.n, g.directed, source=a, target=b, removed_edge=(u, v))
    return ReductionOutput(ge, query, imap)


def cycle_to_path_driver(g: Graph, p: int, q: int, path_solver: Solver) -> Verdict:
    """OR over all edges of ``path_solver`` on ``cycle_to_path``.

    Any unknown branch turns an overall no into unknown.
    """
    unknown = None
    for e in g.sorted_edges:
        out = cycle_to_path(g, p, q, e)
        verdict = path_solver(out.graph, out.query)
        if verdict.is_yes:
            return Verdict.yes(out.back_translate(verdict.witness))
        if verdict.is_unknown and unknown is None:
            unknown = f"branch edge {e}: {verdict.reason}"
    return Verdict.unknown(unknown) if unknown else Verdict.no()


def path_to_cycle(g: Graph, s: int, t: int, p: int, q: int) -> ReductionOutput:
    """Subdivide every edge once (doubling all lengths), then add a fresh
    s-t edge; ask for a cycle of length 2p+1 mod 2q."""
    if g.directed:
        raise ReductionError("path_to_cycle is defined for undirected graphs")
    if s == t:
        raise ReductionError("path_to_cycle needs s != t")
    b = _Builder(g.n, False)
    subs = _subdivide(g, b, 2)
    b.edges.append((s, t))
    query = Query.cycle(ResidueConstraint.single(2 * p + 1, 2 * q))
    imap = InstanceMap(
        "path-to-cycle", g.n, False, source=s, target=t, fresh_edge=(s, t), subdivisions=subs
    )
    return ReductionOutput(b.graph(), query, imap)


def shift_remainder(g: Graph, s: int, t: int, p: int, q: int, p_new: int) -> ReductionOutput:
    """Append a path of length ``(p_new - p) mod q`` (``q`` when that is 0)
    from t to a fresh target."""
    length = (p_new - p) % q or q
    b = _Builder(g.n, g.directed, list(g.sorted_edges))
    t_new = b.fresh()
    inner = b.chain(t, t_new, length)
    query = Query.path(s, t_new, ResidueConstraint.single(p_new, q))
    imap = InstanceMap("shift-remainder", g.n, g.directed, source=s, target=t, appended=((t,) + inner + (t_new,),))
    return ReductionOutput(b.graph(), query, imap)


def modulus_multiply_driver(g: Graph, s: int, t: int, p: int, q: int, k: int, solver_kq: Solver) -> Verdict:
    """Decide ModPath_{p,q} from a solver for remainder ``p mod kq``.

    Branch i asks for length ``p + i*q`` mod ``kq``; branches other than i=0
    are shifted onto remainder ``p`` with ``shift_remainder``.
    """
    if k < 1:
        raise ReductionError("k must be >= 1")
    kq = k * q
    base = p % kq
    unknown = None
    for i in range(k):
        r = (p + i * q) % kq
        if r == base:
            verdict = solver_kq(g, Query.path(s, t, ResidueConstraint(kq, {base})))
            back = lambda w: w  # noqa: E731
        else:
            out = shift_remainder(g, s, t, r, kq, base)
            verdict = solver_kq(out.graph, out.query)
            back = out.back_translate
        if verdict.is_yes:
            return Verdict.yes(back(verdict.witness))
        if verdict.is_unknown and unknown is None:
            unknown = f"branch {i}: {verdict.reason}"
    return Verdict.unknown(unknown) if unknown else Verdict.no()


def cycle_modulus_multiply_driver(g: Graph, p: int, q: int, k: int, cycle_solver: Solver) -> Verdict:
    """ModCycle_{p,q} as an OR of ModCycle_{p+iq, kq} queries."""
    if k < 1:
        raise ReductionError("k must be >= 1")
    unknown = None
    for i in range(k):
        verdict = cycle_solver(g, Query.cycle(ResidueConstraint.single(p + i * q, k * q)))
        if verdict.is_yes:
            return verdict
        if verdict.is_unknown and unknown is None:
            unknown = f"branch {i}: {verdict.reason}"
    return Verdict.unknown(unknown) if unknown else Verdict.no()


# --- directed hardness gadgets ------------------------------------------------------


def gadget_cycle_lengths(p: int, q: int) -> tuple[int, int]:
    """``(p1, p2)`` with ``0 < p1, p2 < q``, both != p, and p1 + p2 = p mod q."""
    if q < 3 or not 0 < p < q:
        raise ReductionError("need q >= 3 and 0 < p < q")
    if p >= 2:
        return 1, p - 1
    return 2, q - 1


def hardness_path_gadget(inst: TwoDisjointPathsInstance, p: int, q: int) -> ReductionOutput:
    g = inst.graph
    if not g.directed:
        raise ReductionError("hardness gadgets take directed instances")
    if q < 2 or not 0 <= p < q:
        raise ReductionError("need q >= 2 and 0 <= p < q")
    b = _Builder(g.n, True)
    subs = _subdivide(g, b, q)
    if p > 0:
        bridge = b.chain(inst.t, inst.s2, p)
        source = inst.s
        appended = ((inst.t,) + bridge + (inst.s2,),)
    else:
        source = b.fresh()
        b.edges.append((source, inst.s))
        bridge = b.chain(inst.t, inst.s2, q - 1)
        appended = ((source, inst.s), (inst.t,) + bridge + (inst.s2,))
    query = Query.path(source, inst.t2, ResidueConstraint.single(p, q))
    imap = InstanceMap(
        "hardness-path",
        g.n,
        True,
        subdivisions=subs,
        appended=appended,
        terminals=(inst.s, inst.t, inst.s2, inst.t2),
    )
    return ReductionOutput(b.graph(), query, imap)


def hardness_cycle_gadget(inst: TwoDisjointPathsInstance, p: int, q: int) -> ReductionOutput:
    g = inst.graph
    if not g.directed:
        raise ReductionError("hardness gadgets take directed instances")
    if p == 0:
        raise ReductionError(
            "p = 0 is refused: simple cycles of length 0 mod q in directed graphs have open complexity"
        )
    p1, p2 = gadget_cycle_lengths(p, q)
    b = _Builder(g.n, True)
    subs = _subdivide(g, b, q)
    a1 = b.chain(inst.t, inst.s2, p1)
    a2 = b.chain(inst.t2, inst.s, p2)
    query = Query.cycle(ResidueConstraint.single(p, q))
    imap = InstanceMap(
        "hardness-cycle",
        g.n,
        True,
        subdivisions=subs,
        appended=((inst.t,) + a1 + (inst.s2,), (inst.t2,) + a2 + (inst.s,)),
        terminals=(inst.s, inst.t, inst.s2, inst.t2),
    )
    return ReductionOutput(b.graph(), query, imap)


# --- back-translation ---------------------------------------------------------------


def back_translate(imap: InstanceMap, w: Witness) -> Witness | tuple[Witness, Witness]:
    n = imap.input_n
    vs = tuple(w.vertices)
    if imap.name == "cycle-to-path":
        # the removed edge closes the path into a cycle
        return Witness(Kind.CYCLE, canonical_cycle(vs, imap.directed))
    if imap.name == "path-to-cycle":
        s, t = imap.fresh_edge
        cyc = _rotate_to(vs, s)
        # orient so the fresh edge s-t is the closing edge
        if cyc[1] == t:
            cyc = [cyc[0]] + cyc[:0:-1]
        if cyc[-1] != t:
            raise ValueError("cycle does not use the fresh edge")
        return Witness(Kind.PATH, _originals(cyc, n))
    if imap.name == "shift-remainder":
        seq = _originals(vs, n)
        if seq[-1] != imap.target:
            raise ValueError("path does not pass through the original target")
        return Witness(Kind.PATH, seq)
    if imap.name == "hardness-path":
        s, t, s2, t2 = imap.terminals
        seq = _originals(vs, n)
        i, j = seq.index(t), seq.index(s2)
        if j != i + 1:
            raise ValueError("path does not use the t -> s' bridge")
        return Witness(Kind.PATH, seq[: i + 1]), Witness(Kind.PATH, seq[j:])
    if imap.name == "hardness-cycle":
        s, t, s2, t2 = imap.terminals
        seq = _originals(_rotate_to(vs, s), n)
        i, j = seq.index(t), seq.index(s2)
        if j != i + 1 or seq[-1] != t2:
            raise ValueError("cycle does not use both bridges")
        return Witness(Kind.PATH, seq[: i + 1]), Witness(Kind.PATH, seq[j:])
    raise ValueError(f"unknown reduction {imap.name!r}")


def input_query(imap: InstanceMap, p: int, q: int) -> Query:
    """The input-side query a back-translated witness answers."""
    if imap.name == "cycle-to-path":
        return Query.cycle(ResidueConstraint.single(p, q))
    if imap.name in ("path-to-cycle", "shift-remainder"):
        return Query.path(imap.source, imap.target, ResidueConstraint.single(p, q))
    raise ValueError(f"{imap.name} translates to a pair of paths")


__all__ = [
    "InstanceMap",
    "ReductionError",
    "ReductionOutput",
    "TwoDisjointPathsInstance",
    "back_translate",
    "cycle_modulus_multiply_driver",
    "cycle_to_path",
    "cycle_to_path_driver",
    "gadget_cycle_lengths",
    "hardness_cycle_gadget",
    "hardness_path_gadget",
    "input_query",
    "modulus_multiply_driver",
    "parse_map",
    "path_to_cycle",
    "shift_remainder",
]
