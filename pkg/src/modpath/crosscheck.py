"""Oracle-equivalence suites shared by ``modpath crosscheck`` and the tests.

Each suite compares a fast solver against an exhaustive or independently
implemented reference over an enumerated or seeded-random graph stream.
Solvers are keyword arguments so a deliberately broken one can be injected.
Per-sample randomness is derived from ``(seed, suite, index)``.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import reductions as red
from .blocks import biconnected_components, two_color
from .generators import gnm_random
from .graph import Graph, Kind, Query, ResidueConstraint, Verdict, emit_graph, validate_witness
from .oracle import (
    KDisjointQuery,
    atlas_graphs,
    enumerate_small_graphs,
    iter_simple_cycles,
    Budget,
    oracle_decide,
    oracle_k_disjoint,
    oracle_spectrum,
)
from .poly import dag_decide, directed_odd_cycle, parity_cycle_decide, parity_path_decide, walk_decide
from .treewidth import DecompositionFailure, decompose_nice, tw_decide, tw_spectrum


@dataclass
class CrosscheckConfig:
    max_n: int = 6
    labelled_max_n: int = 5
    directed_max_n: int = 4
    qs: tuple[int, ...] = (1, 2, 3, 4)
    samples: int = 200
    random_max_n: int = 10
    seed: int = 0


@dataclass
class Discrepancy:
    suite: str
    graph: Graph
    detail: str

    def dump(self) -> str:
        return f"# discrepancy suite={self.suite} {self.detail}\n" + emit_graph(self.graph)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    discrepancies: list[Discrepancy] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def check(self, good: bool, g: Graph, detail: str) -> None:
        self.checks += 1
        if not good:
            self.discrepancies.append(Discrepancy(self.name, g, detail))

    def line(self) -> str:
        return f"suite={self.name} checks={self.checks} discrepancies={len(self.discrepancies)}"


def rng_for(seed: int, suite: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{index}")


def random_connected(rng: random.Random, n: int, m: int | None = None, tries: int = 100) -> Graph:
    """Connected G(n, m); a random spanning tree is added if sampling keeps failing."""
    top = n * (n - 1) // 2
    if m is None:
        m = rng.randint(n - 1, top)
    for _ in range(tries):
        g = gnm_random(n, m, False, rng.randrange(1 << 30))
        if g.is_connected():
            return g
    edges = {(min(v, rng.randrange(v)), v) for v in range(1, n)}
    extra = [e for e in itertools.combinations(range(n), 2) if e not in edges]
    rng.shuffle(extra)
    return Graph(n, list(edges) + extra[: max(0, m - len(edges))])


def _verdict_str(v: Verdict) -> str:
    return v.outcome.value


def _same(a: Verdict, b: Verdict) -> bool:
    return a.outcome == b.outcome


def connected_graphs(max_n: int, labelled_max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """Atlas representatives up to ``max_n``, then every labelled graph up to
    ``labelled_max_n``; connected graphs only."""
    for g in atlas_graphs(max_n, min_n):
        if g.is_connected():
            yield g
    for n in range(max(min_n, 1), labelled_max_n + 1):
        for g in enumerate_small_graphs(n):
            if g.is_connected():
                yield g


# --- parity solvers -------------------------------------------------------------


def suite_parity(cfg: CrosscheckConfig, path_solver=parity_path_decide, cycle_solver=parity_cycle_decide) -> SuiteResult:
    res = SuiteResult("parity")
    for g in connected_graphs(cfg.max_n, cfg.labelled_max_n):
        cyc = oracle_spectrum(g, Kind.CYCLE, q=2).achieved
        for p in (0, 1):
            q = Query.cycle(ResidueConstraint.single(p, 2))
            v = cycle_solver(g, p)
            good = (v.is_yes == (p in cyc)) and not v.is_unknown
            if v.is_yes:
                good = good and validate_witness(g, q, v.witness)
            res.check(good, g, f"cycle p={p} solver={_verdict_str(v)} oracle={'yes' if p in cyc else 'no'}")
        for s in range(g.n):
            for t in range(g.n):
                spec = oracle_spectrum(g, Kind.PATH, s, t, 2).achieved
                for p in (0, 1):
                    q = Query.path(s, t, ResidueConstraint.single(p, 2))
                    v = path_solver(g, s, t, p)
                    good = (v.is_yes == (p in spec)) and not v.is_unknown
                    if v.is_yes:
                        good = good and validate_witness(g, q, v.witness)
                    res.check(good, g, f"path s={s} t={t} p={p} solver={_verdict_str(v)}")
    return res


# --- structural characterisations ------------------------------------------------


def odd_cycle_predicted(g: Graph) -> bool:
    return two_color(range(g.n), lambda v: g.out_neighbors[v])[1] is not None


def even_cycle_predicted(g: Graph) -> bool:
    """Some block is neither a single edge nor an odd cycle."""
    for b in biconnected_components(g).blocks:
        is_cycle = len(b.edges) == len(b.vertices)
        if not b.is_single_edge and not (is_cycle and len(b.vertices) % 2 == 1):
            return True
    return False


def all_graphs(max_n: int, labelled_max_n: int) -> Iterator[Graph]:
    yield from atlas_graphs(max_n)
    for n in range(labelled_max_n + 1):
        yield from enumerate_small_graphs(n)


def suite_characterisation(cfg: CrosscheckConfig) -> SuiteResult:
    res = SuiteResult("characterisation")
    for g in all_graphs(cfg.max_n, cfg.labelled_max_n):
        spec = oracle_spectrum(g, Kind.CYCLE, q=2).achieved
        res.check(odd_cycle_predicted(g) == (1 in spec), g, "odd cycle iff non-bipartite")
        res.check(even_cycle_predicted(g) == (0 in spec), g, "even cycle iff a block is not an edge or odd cycle")
    return res


def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or not g.is_connected():
        return False
    blocks = biconnected_components(g).blocks
    return len(blocks) == 1 and len(blocks[0].vertices) == g.n


def suite_block_lemma(cfg: CrosscheckConfig) -> SuiteResult:
    res = SuiteResult("block-lemma")
    for g in all_graphs(cfg.max_n, cfg.labelled_max_n):
        if not is_two_connected(g) or not odd_cycle_predicted(g):
            continue
        for s, t in itertools.combinations(range(g.n), 2):
            spec = oracle_spectrum(g, Kind.PATH, s, t, 2).achieved
            res.check(spec == {0, 1}, g, f"s={s} t={t} spectrum={sorted(spec)}")
    return res


# --- walks -------------------------------------------------------------------------


def matrix_walk_residues(g: Graph, q: int) -> np.ndarray:
    """``R[r, s, t]``: some s-t walk has length = r mod q.

    Boolean adjacency powers A^0 .. A^(nq-1); a shortest walk to a state of
    the (vertex, residue) product has fewer than n*q edges.
    """
    n = g.n
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = 1
        if not g.directed:
            a[v, u] = 1
    out = np.zeros((q, n, n), dtype=bool)
    power = np.eye(n, dtype=np.int64)
    for k in range(n * q):
        out[k % q] |= power > 0
        power = ((power @ a) > 0).astype(np.int64)
    return out


def random_dag(rng: random.Random, n: int) -> Graph:
    order = list(range(n))
    rng.shuffle(order)
    pairs = [(order[i], order[j]) for i, j in itertools.combinations(range(n), 2)]
    return Graph(n, [e for e in pairs if rng.random() < 0.5], directed=True)


def _walk_graphs(cfg: CrosscheckConfig) -> Iterator[Graph]:
    yield from atlas_graphs(cfg.max_n, 1)
    for n in range(1, cfg.labelled_max_n + 1):
        yield from enumerate_small_graphs(n)
    for n in range(1, cfg.directed_max_n + 1):
        yield from enumerate_small_graphs(n, directed=True)
    for i in range(cfg.samples):
        rng = rng_for(cfg.seed, "walk", i)
        n = rng.randint(1, cfg.max_n)
        yield gnm_random(n, rng.randint(0, n * (n - 1)), True, rng.randrange(1 << 30))


def suite_walk(cfg: CrosscheckConfig, solver=walk_decide) -> SuiteResult:
    res = SuiteResult("walk")
    for g in _walk_graphs(cfg):
        for q in cfg.qs:
            reach = matrix_walk_residues(g, q)
            for s in range(g.n):
                for t in range(g.n):
                    for r in range(q):
                        c = ResidueConstraint.single(r, q)
                        v = solver(g, s, t, c)
                        good = v.is_yes == bool(reach[r, s, t]) and not v.is_unknown
                        if v.is_yes:
                            good = good and v.witness.walk and validate_witness(g, Query.path(s, t, c), v.witness)
                        res.check(good, g, f"s={s} t={t} r={r} q={q} solver={_verdict_str(v)}")
    for i in range(cfg.samples):
        rng = rng_for(cfg.seed, "dag", i)
        g = random_dag(rng, rng.randint(1, cfg.max_n))
        s, t = rng.randrange(g.n), rng.randrange(g.n)
        q = rng.choice(cfg.qs)
        c = ResidueConstraint.single(rng.randrange(q), q)
        truth = oracle_decide(g, Query.path(s, t, c))
        for name, fn in (("walk", solver), ("dag", dag_decide)):
            v = fn(g, s, t, c)
            res.check(_same(v, truth), g, f"dag {name} s={s} t={t} {c} solver={_verdict_str(v)}")
    return res


# --- directed odd cycles ---------------------------------------------------------------


def suite_directed(cfg: CrosscheckConfig, solver=directed_odd_cycle, random_max_n: int = 12) -> SuiteResult:
    res = SuiteResult("directed-odd-cycle")
    query = Query.cycle(ResidueConstraint.single(1, 2))

    def one(g: Graph, detail: str) -> None:
        truth = oracle_decide(g, query)
        v = solver(g)
        good = _same(v, truth) and not v.is_unknown
        if v.is_yes:
            good = good and validate_witness(g, query, v.witness)
        res.check(good, g, f"{detail} solver={_verdict_str(v)} oracle={_verdict_str(truth)}")

    for n in range(cfg.directed_max_n + 1):
        for g in enumerate_small_graphs(n, directed=True):
            one(g, "enumerated")
    for i in range(cfg.samples):
        rng = rng_for(cfg.seed, "directed", i)
        n = rng.randint(2, random_max_n)
        m = rng.randint(0, min(n * (n - 1), 3 * n))
        one(gnm_random(n, m, True, rng.randrange(1 << 30)), f"random sample={i}")
    return res


# --- treewidth DP ---------------------------------------------------------------------


def suite_treewidth(
    cfg: CrosscheckConfig, decide=tw_decide, spectrum=tw_spectrum, width: int = 3
) -> SuiteResult:
    res = SuiteResult("treewidth")
    done = i = 0
    while done < cfg.samples:
        rng = rng_for(cfg.seed, "treewidth", i)
        i += 1
        n = rng.randint(4, cfg.random_max_n)
        g = random_connected(rng, n, rng.randint(n - 1, min(n * (n - 1) // 2, 3 * n)))
        try:
            nd = decompose_nice(g, width)
        except DecompositionFailure:
            continue
        done += 1
        s, t = rng.randrange(n), rng.randrange(n)
        for q in cfg.qs:
            for kind in (Kind.PATH, Kind.CYCLE):
                ends = (s, t) if kind is Kind.PATH else (None, None)
                truth = oracle_spectrum(g, kind, *ends, q=q).achieved
                got = spectrum(g, kind, q, nd, *ends)
                full = Query(kind, ResidueConstraint(q, range(q)), *ends)
                good = set(got) == truth and all(
                    validate_witness(g, full, w) and w.length % q == r for r, w in got.items()
                )
                res.check(good, g, f"spectrum {kind.value} s={s} t={t} q={q} dp={sorted(got)} oracle={sorted(truth)}")
                for r in range(q):
                    query = Query(kind, ResidueConstraint.single(r, q), *ends)
                    v = decide(g, query, nd)
                    good = v.is_yes == (r in truth) and not v.is_unknown
                    if v.is_yes:
                        good = good and validate_witness(g, query, v.witness)
                    res.check(good, g, f"decide {kind.value} s={s} t={t} r={r} q={q} dp={_verdict_str(v)}")
    return res


# --- reductions ---------------------------------------------------------------------------


def _random_graph(rng: random.Random, lo: int, hi: int, directed: bool, min_m: int = 0) -> Graph:
    n = rng.randint(lo, hi)
    top = n * (n - 1) if directed else n * (n - 1) // 2
    return gnm_random(n, rng.randint(min(min_m, top), top), directed, rng.randrange(1 << 30))


def _cycle_has_edge(vs, e, directed: bool) -> bool:
    u, v = e
    arcs = set(zip(vs, vs[1:] + vs[:1]))
    return (u, v) in arcs or (not directed and (v, u) in arcs)


def _check_pair(g: Graph, inst: red.TwoDisjointPathsInstance, pair) -> bool:
    any_len = ResidueConstraint(1, {0})
    a, b = pair
    return (
        validate_witness(g, Query.path(inst.s, inst.t, any_len), a)
        and validate_witness(g, Query.path(inst.s2, inst.t2, any_len), b)
        and not set(a.vertices) & set(b.vertices)
    )


def _check_translated(res: SuiteResult, g: Graph, out, verdict: Verdict, input_query: Query, detail: str) -> None:
    if not verdict.is_yes:
        return
    try:
        w = out.back_translate(verdict.witness)
        ok = validate_witness(g, input_query, w)
    except ValueError:
        ok = False
    res.check(ok, g, f"{detail} back-translation")


def suite_reductions(cfg: CrosscheckConfig, solver=oracle_decide) -> SuiteResult:
    """Round-trip soundness of every reduction, ``cfg.samples`` inputs each,
    sources on at most ``cfg.max_n`` vertices."""
    res = SuiteResult("reductions")
    hi = max(cfg.max_n, 2)
    path_qs = [q for q in cfg.qs if q >= 2] or [2]
    cycle_qs = [q for q in cfg.qs if q >= 3] or [3]

    for i in range(cfg.samples):  # cycle_to_path, per edge and through the driver
        rng = rng_for(cfg.seed, "cycle-to-path", i)
        g = _random_graph(rng, 2, hi, False, min_m=1)
        if not g.m:
            continue
        q = rng.choice(cfg.qs)
        p = rng.randrange(q)
        e = rng.choice(g.sorted_edges)
        out = red.cycle_to_path(g, p, q, e)
        truth = any(
            _cycle_has_edge(list(vs), e, False) and (len(vs) - p) % q == 0
            for vs in iter_simple_cycles(g, Budget())
        )
        v = solver(out.graph, out.query)
        res.check(v.is_yes == truth, g, f"cycle-to-path e={e} p={p} q={q}")
        cq = Query.cycle(ResidueConstraint.single(p, q))
        _check_translated(res, g, out, v, cq, f"cycle-to-path e={e} p={p} q={q}")
        driven = red.cycle_to_path_driver(g, p, q, solver)
        res.check(_same(driven, oracle_decide(g, cq)), g, f"cycle-to-path driver p={p} q={q}")
        if driven.is_yes:
            res.check(validate_witness(g, cq, driven.witness), g, "cycle-to-path driver witness")

    for i in range(cfg.samples):
        rng = rng_for(cfg.seed, "path-to-cycle", i)
        g = _random_graph(rng, 2, hi, False)
        q = rng.choice(cfg.qs)
        p = rng.randrange(q)
        s, t = rng.sample(range(g.n), 2)
        out = red.path_to_cycle(g, s, t, p, q)
        pq = Query.path(s, t, ResidueConstraint.single(p, q))
        v = solver(out.graph, out.query)
        res.check(_same(v, oracle_decide(g, pq)), g, f"path-to-cycle s={s} t={t} p={p} q={q}")
        _check_translated(res, g, out, v, pq, f"path-to-cycle s={s} t={t} p={p} q={q}")

    for i in range(cfg.samples):
        rng = rng_for(cfg.seed, "shift-remainder", i)
        g = _random_graph(rng, 1, hi, rng.random() < 0.5)
        q = rng.choice(cfg.qs)
        p, p2 = rng.randrange(q), rng.randrange(q)
        s, t = rng.randrange(g.n), rng.randrange(g.n)
        out = red.shift_remainder(g, s, t, p, q, p2)
        pq = Query.path(s, t, ResidueConstraint.single(p, q))
        v = solver(out.graph, out.query)
        res.check(_same(v, oracle_decide(g, pq)), g, f"shift-remainder s={s} t={t} p={p}->{p2} q={q}")
        _check_translated(res, g, out, v, pq, f"shift-remainder p={p}->{p2} q={q}")

    for i in range(cfg.samples):
        rng = rng_for(cfg.seed, "modulus-multiply", i)
        g = _random_graph(rng, 1, hi, rng.random() < 0.5)
        q = rng.choice(cfg.qs)
        k = rng.randint(1, 3)
        p = rng.randrange(q)
        s, t = rng.randrange(g.n), rng.randrange(g.n)
        pq = Query.path(s, t, ResidueConstraint.single(p, q))
        v = red.modulus_multiply_driver(g, s, t, p, q, k, solver)
        res.check(_same(v, oracle_decide(g, pq)), g, f"modulus-multiply s={s} t={t} p={p} q={q} k={k}")
        if v.is_yes:
            res.check(validate_witness(g, pq, v.witness), g, f"modulus-multiply p={p} q={q} k={k} witness")
        cq = Query.cycle(ResidueConstraint.single(p, q))
        cv = red.cycle_modulus_multiply_driver(g, p, q, k, solver)
        res.check(_same(cv, oracle_decide(g, cq)), g, f"cycle modulus-multiply p={p} q={q} k={k}")

    any_len = ResidueConstraint(1, {0})
    for gadget, plo in (("path", 0), ("cycle", 1)):
        for i in range(cfg.samples):
            rng = rng_for(cfg.seed, f"hardness-{gadget}", i)
            g = _random_graph(rng, 4, hi, True)
            inst = red.TwoDisjointPathsInstance(g, *rng.sample(range(g.n), 4))
            q = rng.choice(path_qs if gadget == "path" else cycle_qs)
            p = rng.randint(plo, q - 1)
            build = red.hardness_path_gadget if gadget == "path" else red.hardness_cycle_gadget
            out = build(inst, p, q)
            truth = oracle_k_disjoint(g, KDisjointQuery.paths([(inst.s, inst.t), (inst.s2, inst.t2)], any_len))
            v = solver(out.graph, out.query)
            detail = f"hardness-{gadget} terminals={(inst.s, inst.t, inst.s2, inst.t2)} p={p} q={q}"
            res.check(_same(v, truth), g, detail)
            if v.is_yes:
                try:
                    ok = _check_pair(g, inst, out.back_translate(v.witness))
                except ValueError:
                    ok = False
                res.check(ok, g, f"{detail} back-translation")
    return res


# --- gadget arithmetic -------------------------------------------------------------------


def suite_gadget_arithmetic(cfg: CrosscheckConfig | None = None, max_q: int = 50) -> SuiteResult:
    res = SuiteResult("gadget-arithmetic")
    empty = Graph(0, [])
    for q in range(3, max_q + 1):
        for p in range(1, q):
            p1, p2 = red.gadget_cycle_lengths(p, q)
            good = (p1 + p2) % q == p and p1 != p and p2 != p and 0 < p1 < q and 0 < p2 < q
            res.check(good, empty, f"p={p} q={q} p1={p1} p2={p2}")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "parity": suite_parity,
    "characterisation": suite_characterisation,
    "block-lemma": suite_block_lemma,
    "walk": suite_walk,
    "directed": suite_directed,
    "treewidth": suite_treewidth,
    "reductions": suite_reductions,
    "gadget-arithmetic": suite_gadget_arithmetic,
}


@dataclass(frozen=True)
class AcceptanceRun:
    criterion: int
    suite: str
    config: CrosscheckConfig
    limit_s: float | None = None


# full-scale settings for acceptance criteria 1-8 (criterion 9 is a CLI check)
ACCEPTANCE_RUNS = (
    AcceptanceRun(1, "parity", CrosscheckConfig(max_n=7, labelled_max_n=6), 600),
    AcceptanceRun(2, "treewidth", CrosscheckConfig(samples=2000, random_max_n=10, qs=(1, 2, 3, 4, 5)), 900),
    AcceptanceRun(3, "reductions", CrosscheckConfig(samples=500, max_n=6, qs=(1, 2, 3, 4)), 600),
    AcceptanceRun(4, "walk", CrosscheckConfig(max_n=6, labelled_max_n=5, directed_max_n=4, samples=500, qs=(1, 2, 3, 4, 5))),
    AcceptanceRun(5, "characterisation", CrosscheckConfig(max_n=7, labelled_max_n=6)),
    AcceptanceRun(6, "directed", CrosscheckConfig(directed_max_n=5, samples=2000)),
    AcceptanceRun(7, "block-lemma", CrosscheckConfig(max_n=7, labelled_max_n=6)),
    AcceptanceRun(8, "gadget-arithmetic", CrosscheckConfig(), 1.0),
)


def run_suite(name: str, cfg: CrosscheckConfig, **solvers) -> SuiteResult:
    start = time.perf_counter()
    res = SUITES[name](cfg, **solvers)
    res.elapsed = time.perf_counter() - start
    return res


__all__ = [
    "ACCEPTANCE_RUNS",
    "AcceptanceRun",
    "CrosscheckConfig",
    "Discrepancy",
    "SUITES",
    "SuiteResult",
    "all_graphs",
    "connected_graphs",
    "even_cycle_predicted",
    "is_two_connected",
    "matrix_walk_residues",
    "odd_cycle_predicted",
    "random_connected",
    "random_dag",
    "rng_for",
    "run_suite",
]
