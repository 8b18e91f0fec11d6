"""Command-line entry point: ``modpath {solve,transform,spectrum,experiment,crosscheck}``.

Every command writes one or more single-line ``key=value`` records to
standard output; diagnostics go to standard error. Exit codes: 0 yes,
1 no, 2 unknown, 3 usage error, 4 unreadable input.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import reductions as red
from .crosscheck import SUITES, CrosscheckConfig, run_suite
from .generators import InfeasibleDescriptor, generate
from .graph import (
    Graph,
    GraphFormatError,
    Kind,
    Query,
    ResidueConstraint,
    Verdict,
    Witness,
    emit_graph,
    parse_graph,
    validate_witness,
)
from .oracle import Budget, BudgetExhausted, Spectrum, default_budget, oracle_decide, oracle_spectrum
from .poly import (
    any_cycle_decide,
    dag_decide,
    directed_odd_cycle,
    parity_cycle_decide,
    parity_path_decide,
    topological_order,
    walk_decide,
)
from .treewidth import DecompositionFailure, decompose_nice, modcycle_zero_decide, tw_decide, tw_spectrum

EXIT_YES, EXIT_NO, EXIT_UNKNOWN, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3, 4
DEFAULT_WIDTH_CAP = 3
AUTO_ORACLE_MAX_N = 16

CAPABILITIES = {
    "oracle": "any query on any graph (exponential, budgeted)",
    "walk": "path queries, any q; answers for walks, not simple paths",
    "dag": "path queries, any q, on directed acyclic graphs",
    "parity-path": "undirected path queries with q=2",
    "parity-cycle": "undirected cycle queries with q=2",
    "directed-odd-cycle": "directed cycle queries with q=2, allowed={1}",
    "treewidth": "undirected queries, any q, treewidth <= --width-cap",
    "modcycle-zero": "undirected cycle queries with allowed={0}",
    "any-cycle": "cycle queries with q=1",
    "auto": "dispatches to the cheapest applicable solver above",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --- report records ---------------------------------------------------------------


def _fmt(value) -> str:
    if isinstance(value, (set, frozenset)):
        return "{" + ",".join(map(str, sorted(value))) + "}"
    if isinstance(value, (list, tuple)):
        return ",".join(map(str, value)) if value else "-"
    text = str(value)
    if not text or any(c.isspace() or c in "\"'=" for c in text):
        return json.dumps(text)
    return text


def record(**fields) -> str:
    return " ".join(f"{k}={_fmt(v)}" for k, v in fields.items() if v is not None)


@dataclass
class RunReport:
    command: str
    digest: str
    solver: str
    verdict: Verdict
    query: Query | None = None
    extra: dict = field(default_factory=dict)
    elapsed: float | None = None

    def line(self) -> str:
        q = self.query
        w = self.verdict.witness
        fields = dict(command=self.command, input=self.digest, solver=self.solver)
        if q is not None:
            fields.update(kind=q.kind.value, s=q.source, t=q.target, q=q.constraint.modulus, allowed=q.constraint.allowed)
        fields["verdict"] = self.verdict.outcome.value
        if self.verdict.is_yes:
            fields["witness"] = list(w.vertices) if w else "none"
            fields["length"] = w.length if w else None
            fields["walk"] = 1 if w and w.walk else None
        fields["reason"] = self.verdict.reason or None
        fields.update(self.extra)
        if self.elapsed is not None:
            fields["elapsed"] = f"{self.elapsed:.3f}"
        return record(**fields)


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()[:16]


def _read_graph(path: str) -> tuple[Graph, str]:
    try:
        data = Path(path).read_bytes() if path != "-" else sys.stdin.buffer.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(data), digest(data)


# --- solver dispatch --------------------------------------------------------------------


def _require(cond: bool, solver: str) -> None:
    if not cond:
        raise UsageError(f"solver {solver!r} does not handle this query; it covers: {CAPABILITIES[solver]}")


def _or_over_allowed(fn: Callable[[int], Verdict], allowed) -> Verdict:
    unknown = None
    for r in sorted(allowed):
        v = fn(r)
        if v.is_yes:
            return v
        if v.is_unknown and unknown is None:
            unknown = v
    return unknown or Verdict.no()


@dataclass
class SolveContext:
    budget: int
    width_cap: int = DEFAULT_WIDTH_CAP
    threshold: int | None = None
    counters: dict = field(default_factory=dict)


def run_solver(name: str, g: Graph, query: Query, ctx: SolveContext) -> tuple[Verdict, str]:
    """Run solver ``name``; returns the verdict and the solver actually used."""
    c = query.constraint
    path = query.kind is Kind.PATH
    if name == "oracle":
        budget = Budget(ctx.budget)
        v = oracle_decide(g, query, budget)
        ctx.counters["oracle_nodes"] = budget.used
        return v, name
    if name == "walk":
        _require(path, name)
        return walk_decide(g, query.source, query.target, c), name
    if name == "dag":
        _require(path and g.directed and topological_order(g) is not None, name)
        return dag_decide(g, query.source, query.target, c), name
    if name == "parity-path":
        _require(path and not g.directed and c.modulus == 2, name)
        return _or_over_allowed(lambda r: parity_path_decide(g, query.source, query.target, r), c.allowed), name
    if name == "parity-cycle":
        _require(not path and not g.directed and c.modulus == 2, name)
        return _or_over_allowed(lambda r: parity_cycle_decide(g, r), c.allowed), name
    if name == "directed-odd-cycle":
        _require(not path and g.directed and c.modulus == 2 and c.allowed == {1}, name)
        return directed_odd_cycle(g), name
    if name == "treewidth":
        _require(not g.directed, name)
        try:
            nd = decompose_nice(g, ctx.width_cap)
        except DecompositionFailure as exc:
            return Verdict.unknown(f"decomposition not found ({exc})"), name
        return tw_decide(g, query, nd), name
    if name == "modcycle-zero":
        _require(not path and not g.directed and c.allowed == {0}, name)
        return modcycle_zero_decide(g, c.modulus, ctx.width_cap, threshold=ctx.threshold), name
    if name == "any-cycle":
        _require(not path and c.modulus == 1, name)
        return any_cycle_decide(g), name
    if name == "auto":
        return _auto(g, query, ctx)
    raise UsageError(f"unknown solver {name!r}; choose from {', '.join(CAPABILITIES)}")


def _auto(g: Graph, query: Query, ctx: SolveContext) -> tuple[Verdict, str]:
    c = query.constraint
    path = query.kind is Kind.PATH
    if c.modulus == 1:
        if path:
            # with q=1 the BFS walk is a shortest path, hence simple
            v = walk_decide(g, query.source, query.target, c)
            if v.is_yes:
                v = Verdict.yes(Witness(Kind.PATH, v.witness.vertices))
            return v, "auto:walk"
        return run_solver("any-cycle", g, query, ctx)[0], "auto:any-cycle"
    if not g.directed and c.modulus == 2:
        name = "parity-path" if path else "parity-cycle"
        return run_solver(name, g, query, ctx)[0], f"auto:{name}"
    if g.directed and path and topological_order(g) is not None:
        return dag_decide(g, query.source, query.target, c), "auto:dag"
    if g.directed and not path and c.modulus == 2 and c.allowed == {1}:
        return directed_odd_cycle(g), "auto:directed-odd-cycle"
    if not g.directed:
        name = "modcycle-zero" if not path and c.allowed == {0} else "treewidth"
        v = run_solver(name, g, query, ctx)[0]
        if not v.is_unknown or g.n > AUTO_ORACLE_MAX_N:
            return v, f"auto:{name}"
    elif g.n > AUTO_ORACLE_MAX_N:
        return Verdict.unknown(f"no polynomial solver applies and n > {AUTO_ORACLE_MAX_N}"), "auto"
    return run_solver("oracle", g, query, ctx)[0], "auto:oracle"


# --- argument helpers --------------------------------------------------------------------


def _constraint(args) -> ResidueConstraint:
    if args.q is None or args.q < 1:
        raise UsageError("--q must be given and >= 1")
    if args.allowed is not None:
        try:
            allowed = [int(x) for x in args.allowed.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"--allowed expects comma-separated integers, got {args.allowed!r}") from None
        return ResidueConstraint(args.q, allowed)
    if args.p is None:
        raise UsageError("give --p or --allowed")
    return ResidueConstraint.single(args.p, args.q)


def _query(args, g: Graph) -> Query:
    c = _constraint(args)
    if args.kind == "path":
        if args.s is None or args.t is None:
            raise UsageError("path queries need --s and --t")
        q = Query.path(args.s, args.t, c)
    else:
        q = Query.cycle(c)
    try:
        q.check_endpoints(g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return q


def _emit_verdict(report: RunReport, g: Graph) -> int:
    v = report.verdict
    if v.is_yes and v.witness is not None and not validate_witness(g, report.query, v.witness):
        print(f"internal error: solver {report.solver} produced an invalid witness", file=sys.stderr)
        return 5
    print(report.line())
    return {"yes": EXIT_YES, "no": EXIT_NO}.get(v.outcome.value, EXIT_UNKNOWN)


def _ctx(args) -> SolveContext:
    return SolveContext(
        budget=args.budget if args.budget is not None else default_budget(),
        width_cap=args.width_cap,
        threshold=args.trusted_threshold,
    )


def _witness_less_yes(v: Verdict, args) -> Verdict:
    """A yes without a witness is only reported when a threshold was trusted."""
    if v.is_yes and v.witness is None and args.trusted_threshold is None:
        return Verdict.unknown("existential answer requires --trusted-threshold")
    return v


# --- commands ----------------------------------------------------------------------------


def cmd_solve(args) -> int:
    g, dig = _read_graph(args.graph)
    query = _query(args, g)
    ctx = _ctx(args)
    start = time.perf_counter()
    try:
        verdict, used = run_solver(args.solver, g, query, ctx)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verdict = _witness_less_yes(verdict, args)
    extra = dict(seed=args.seed, budget=ctx.budget, width_cap=ctx.width_cap, **ctx.counters)
    report = RunReport("solve", dig, used, verdict, query, extra, time.perf_counter() - start if args.timing else None)
    return _emit_verdict(report, g)


def _transform_output(args, g: Graph) -> red.ReductionOutput:
    need = lambda *names: [_need(args, n) for n in names]  # noqa: E731
    name = args.reduction
    if name == "cycle-to-path":
        p, q = need("p", "q")
        return red.cycle_to_path(g, p, q, tuple(_need(args, "edge")))
    if name == "path-to-cycle":
        s, t, p, q = need("s", "t", "p", "q")
        return red.path_to_cycle(g, s, t, p, q)
    if name == "shift-remainder":
        s, t, p, q, p_new = need("s", "t", "p", "q", "p_new")
        return red.shift_remainder(g, s, t, p, q, p_new)
    if name in ("hardness-path", "hardness-cycle"):
        p, q, terms = need("p", "q", "terminals")
        inst = red.TwoDisjointPathsInstance(g, *terms)
        build = red.hardness_path_gadget if name == "hardness-path" else red.hardness_cycle_gadget
        return build(inst, p, q)
    raise UsageError(f"unknown reduction {name!r}")


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"reduction {args.reduction} needs --{name.replace('_', '-')}")
    return value


def _driver_solver(args, ctx: SolveContext):
    def solve(g: Graph, query: Query) -> Verdict:
        return run_solver(args.solve_with, g, query, ctx)[0]

    return solve


def cmd_transform(args) -> int:
    g, dig = _read_graph(args.graph)
    ctx = _ctx(args)
    try:
        if args.reduction == "modulus-multiply" or (args.reduction == "cycle-to-path" and args.edge is None):
            return _run_driver(args, g, dig, ctx)
        out = _transform_output(args, g)
    except (red.ReductionError, ValueError) as exc:
        raise UsageError(f"{args.reduction}: {exc}") from None
    graph_text, map_text = emit_graph(out.graph), out.instance_map.emit()
    if args.out:
        Path(args.out).write_text(graph_text)
        Path(args.map or args.out + ".map").write_text(map_text)
    else:
        sys.stdout.write(graph_text)
        sys.stdout.write(map_text)
    oq = out.query
    print(
        record(
            command="transform",
            input=dig,
            reduction=args.reduction,
            output=digest(graph_text.encode()),
            n=out.graph.n,
            m=out.graph.m,
            kind=oq.kind.value,
            s=oq.source,
            t=oq.target,
            q=oq.constraint.modulus,
            allowed=oq.constraint.allowed,
        )
    )
    if not args.solve_with:
        return 0
    try:
        verdict, used = run_solver(args.solve_with, out.graph, oq, ctx)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verdict = _witness_less_yes(verdict, args)
    code = _emit_verdict(RunReport("transform-solve", digest(graph_text.encode()), used, verdict, oq), out.graph)
    if verdict.is_yes and verdict.witness is not None and code == EXIT_YES:
        back = out.back_translate(verdict.witness)
        parts = back if isinstance(back, tuple) else (back,)
        for i, w in enumerate(parts):
            print(record(command="back-translate", input=dig, part=i, kind=w.kind.value, witness=list(w.vertices), length=w.length))
    return code


def _run_driver(args, g: Graph, dig: str, ctx: SolveContext) -> int:
    if not args.solve_with:
        raise UsageError(f"{args.reduction} without a single instance is a driver; pass --solve-with")
    solve = _driver_solver(args, ctx)
    if args.reduction == "cycle-to-path":
        p, q = _need(args, "p"), _need(args, "q")
        verdict = red.cycle_to_path_driver(g, p, q, solve)
        query = Query.cycle(ResidueConstraint.single(p, q))
    else:
        p, q, k = _need(args, "p"), _need(args, "q"), _need(args, "k")
        if args.kind == "cycle":
            verdict = red.cycle_modulus_multiply_driver(g, p, q, k, solve)
            query = Query.cycle(ResidueConstraint.single(p, q))
        else:
            s, t = _need(args, "s"), _need(args, "t")
            verdict = red.modulus_multiply_driver(g, s, t, p, q, k, solve)
            query = Query.path(s, t, ResidueConstraint.single(p, q))
    verdict = _witness_less_yes(verdict, args)
    report = RunReport("transform-driver", dig, f"{args.reduction}/{args.solve_with}", verdict, query)
    return _emit_verdict(report, g)


def cmd_spectrum(args) -> int:
    g, dig = _read_graph(args.graph)
    kind = Kind(args.kind)
    if args.q is None or args.q < 1:
        raise UsageError("--q must be given and >= 1")
    s, t = (args.s, args.t) if kind is Kind.PATH else (None, None)
    if kind is Kind.PATH and (s is None or t is None):
        raise UsageError("path spectra need --s and --t")
    Query(kind, ResidueConstraint(args.q, [0]), s, t).check_endpoints(g)
    budget = args.budget if args.budget is not None else default_budget()
    head = f"spectrum {kind.value} q={args.q}"
    tail = dict(s=s, t=t, input=dig, backend=args.backend)
    try:
        if args.backend == "oracle":
            achieved = oracle_spectrum(g, kind, s, t, args.q, Budget(budget)).achieved
        else:
            if g.directed:
                raise UsageError("the treewidth backend needs an undirected graph")
            achieved = frozenset(tw_spectrum(g, kind, args.q, decompose_nice(g, args.width_cap), s, t))
    except BudgetExhausted:
        print(head, record(status="unknown", reason="budget", **tail, budget=budget))
        return EXIT_UNKNOWN
    except DecompositionFailure as exc:
        print(head, record(status="unknown", reason=f"decomposition not found ({exc})", **tail))
        return EXIT_UNKNOWN
    print(str(Spectrum(args.q, kind, achieved)), record(**tail))
    return 0


# --- experiments ---------------------------------------------------------------------------

PROBES = ("zero", "all", "all-even", "residue=<r>")


@dataclass
class ExperimentSpec:
    """An ensemble of generated graphs and a predicate on their spectra.

    ``generator`` is a descriptor template such as ``"random_regular({n}, {d})"``
    filled from each point of the cartesian ``grid``.
    """

    generator: str
    grid: dict[str, list]
    samples: int
    probe: str
    q: int
    seed: int = 0
    kind: str = "cycle"
    expect: str | None = None  # "all" or "none"
    claim: str = ""

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not self.grid or any(not v for v in self.grid.values()):
            raise ValueError("grid must be nonempty")
        if self.q < 1:
            raise ValueError("q must be >= 1")
        if self.expect not in (None, "all", "none"):
            raise ValueError("expect must be 'all' or 'none'")
        if Kind(self.kind) is Kind.PATH:
            raise ValueError("experiments probe cycle spectra")
        probe_predicate(self.probe, self.q)

    @classmethod
    def load(cls, path: str) -> ExperimentSpec:
        return cls(**json.loads(Path(path).read_text()))

    def points(self) -> list[dict]:
        keys = sorted(self.grid)
        return [dict(zip(keys, combo)) for combo in itertools.product(*(self.grid[k] for k in keys))]


def probe_predicate(probe: str, q: int) -> Callable[[frozenset], bool]:
    if probe == "zero":
        return lambda a: 0 in a
    if probe == "all":
        return lambda a: len(a) == q
    if probe == "all-even":
        return lambda a: all(r in a for r in range(0, q, 2))
    if probe.startswith("residue="):
        r = int(probe.split("=", 1)[1]) % q
        return lambda a: r in a
    raise ValueError(f"unknown probe {probe!r}; expected one of {', '.join(PROBES)}")


def sample_seed(master: int, point: int, sample: int) -> int:
    return int.from_bytes(hashlib.sha256(f"{master}:{point}:{sample}".encode()).digest()[:4], "big")


def run_experiment(spec: ExperimentSpec, budget: int) -> list[list[str]]:
    pred = probe_predicate(spec.probe, spec.q)
    rows = []
    for i, point in enumerate(spec.points()):
        desc = spec.generator.format(**point)
        hits = unknown = 0
        try:
            for j in range(spec.samples):
                g = generate(desc, seed=sample_seed(spec.seed, i, j))
                try:
                    achieved = oracle_spectrum(g, Kind.CYCLE, q=spec.q, limit=Budget(budget)).achieved
                except BudgetExhausted:
                    unknown += 1
                    continue
                hits += pred(achieved)
        except (InfeasibleDescriptor, ValueError, KeyError) as exc:
            rows.append([desc, "-", "-", "-", "-", f"infeasible: {exc}"])
            continue
        decided = spec.samples - unknown
        frac = hits / decided if decided else float("nan")
        if spec.expect is None or not decided:
            label = "-"
        else:
            target = 1.0 if spec.expect == "all" else 0.0
            label = "consistent" if frac == target and not unknown else "inconsistent"
            if unknown and frac == target:
                label = "undecided"
        rows.append([desc, str(spec.samples), str(hits), str(unknown), f"{frac:.3f}", label])
    return rows


def cmd_experiment(args) -> int:
    try:
        spec = ExperimentSpec.load(args.spec)
    except (OSError, json.JSONDecodeError) as exc:
        raise GraphFormatError(f"cannot load experiment spec {args.spec}: {exc}") from None
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad experiment spec: {exc}") from None
    budget = args.budget if args.budget is not None else default_budget()
    seed = spec.seed if args.seed is None else args.seed
    if args.seed is not None:
        spec.seed = seed
    print(f"# probe={spec.probe} kind={spec.kind} q={spec.q} samples={spec.samples} seed={seed} budget={budget}")
    if spec.claim:
        print(f"# claim: {spec.claim}")
    print("# empirical check at desk scale; labels say whether the sample is consistent with the claim, not a proof")
    print("\t".join(["ensemble", "samples", "satisfied", "unknown", "fraction", "label"]))
    rows = run_experiment(spec, budget)
    for row in rows:
        print("\t".join(row))
    return EXIT_UNKNOWN if any(r[5] in ("inconsistent", "undecided") for r in rows) else 0


# --- crosscheck ------------------------------------------------------------------------------


def cmd_crosscheck(args, overrides: dict | None = None) -> int:
    names = list(SUITES) if args.suite == "all" else args.suite.split(",")
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = CrosscheckConfig(
        max_n=args.max_n,
        labelled_max_n=min(args.max_n, args.labelled_max_n),
        directed_max_n=args.directed_max_n,
        qs=tuple(int(x) for x in args.q.split(",")),
        samples=args.samples,
        seed=args.seed,
    )
    failed = False
    for name in names:
        res = run_suite(name, cfg, **(overrides or {}).get(name, {}))
        line = res.line() + (f" elapsed={res.elapsed:.3f}" if args.timing else "")
        print(line, flush=True)
        for d in res.discrepancies[: args.show]:
            sys.stdout.write(d.dump())
        failed |= not res.ok
    return 1 if failed else 0


# --- parser --------------------------------------------------------------------------------------


def _common(seed_default: int | None = 0) -> argparse.ArgumentParser:
    # a fresh parent per subcommand: argparse parents share action objects,
    # so a per-subcommand default would otherwise leak into the others
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=seed_default)
    common.add_argument("--budget", type=int, default=None, help="oracle search-node budget (env MODGRAPH_BUDGET)")
    common.add_argument("--timing", action="store_true", help="append wall time to reports (breaks byte-stability)")
    return common


def build_parser() -> argparse.ArgumentParser:

    query = _Parser(add_help=False)
    query.add_argument("--graph", required=True, help="edge-list file, or - for stdin")
    query.add_argument("--kind", choices=["path", "cycle"], default="cycle")
    query.add_argument("--s", type=int)
    query.add_argument("--t", type=int)
    query.add_argument("--p", type=int)
    query.add_argument("--q", type=int)
    query.add_argument("--allowed", help="comma-separated residues; overrides --p")
    query.add_argument("--width-cap", type=int, default=DEFAULT_WIDTH_CAP)
    query.add_argument("--trusted-threshold", type=int, default=None, metavar="T")

    parser = _Parser(prog="modpath", description="Modular-length simple paths and cycles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[_common(), query], help="decide one query")
    p.add_argument("--solver", default="auto", choices=list(CAPABILITIES))

    p = sub.add_parser("transform", parents=[_common(), query], help="apply a reduction")
    p.add_argument(
        "reduction",
        choices=["cycle-to-path", "path-to-cycle", "shift-remainder", "modulus-multiply", "hardness-path", "hardness-cycle"],
    )
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
    p.add_argument("--p-new", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--terminals", type=int, nargs=4, metavar=("S", "T", "S2", "T2"))
    p.add_argument("--out", help="write the output graph here (map goes to OUT.map)")
    p.add_argument("--map", help="sidecar map path")
    p.add_argument("--solve-with", choices=list(CAPABILITIES))

    p = sub.add_parser("spectrum", parents=[_common(), query], help="residue spectrum of a graph")
    p.add_argument("--backend", choices=["oracle", "treewidth"], default="oracle")

    # no seed default: the experiment file's seed applies unless --seed is given
    p = sub.add_parser("experiment", parents=[_common(None)], help="run an ExperimentSpec JSON file")
    p.add_argument("spec")

    p = sub.add_parser("crosscheck", parents=[_common()], help="oracle-equivalence suites")
    p.add_argument("--suite", default="all", help=f"comma-separated subset of: {', '.join(SUITES)}")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--labelled-max-n", type=int, default=5)
    p.add_argument("--directed-max-n", type=int, default=4)
    p.add_argument("--q", default="1,2,3,4")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--show", type=int, default=5, help="discrepancies dumped per suite")
    return parser


COMMANDS = {
    "solve": cmd_solve,
    "transform": cmd_transform,
    "spectrum": cmd_spectrum,
    "experiment": cmd_experiment,
    "crosscheck": cmd_crosscheck,
}


def main(argv: list[str] | None = None, overrides: dict | None = None) -> int:
    """``overrides`` maps crosscheck suite names to solver keyword arguments
    (used to inject broken solvers in tests)."""
    args = build_parser().parse_args(argv)
    try:
        if args.command == "crosscheck":
            return cmd_crosscheck(args, overrides)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"modpath {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphFormatError as exc:
        print(f"modpath {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
