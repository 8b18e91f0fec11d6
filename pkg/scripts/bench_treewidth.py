"""Scaling of the treewidth DP against the exhaustive oracle.

Random partial k-trees (treewidth <= k), with every edge subdivided into q
edges so all cycle lengths are 0 mod q. Asking for a cycle of length 1 mod q is
then a no-instance, which forces the oracle to enumerate every cycle while the
DP stays polynomial. For each base size the table reports median DP time, DP
state count and oracle time. The oracle column stops once its median exceeds
``--oracle-cap`` seconds.

    python3 scripts/bench_treewidth.py --sizes 8,12,16,20,24,28 --q 3
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time
from dataclasses import dataclass

from modpath.generators import subdivision
from modpath.graph import Graph, Query, ResidueConstraint
from modpath.oracle import Budget, oracle_decide
from modpath.treewidth import decompose_nice
from modpath.treewidth.dp import accepting_states, run_dp


@dataclass
class BenchConfig:
    sizes: tuple[int, ...] = (8, 12, 16, 20, 24, 28)
    width: int = 3
    q: int = 3
    samples: int = 5
    seed: int = 0
    oracle_cap: float = 5.0


def partial_ktree(rng: random.Random, n: int, k: int, keep: float = 0.7) -> Graph:
    """Random k-tree on ``n`` vertices with each non-spanning-tree edge kept
    with probability ``keep``; treewidth at most ``k`` and connected."""
    # k-cliques a new vertex may attach to
    cliques = [tuple(x for x in range(k + 1) if x != drop) for drop in range(k + 1)]
    edges = {(u, v) for u in range(k + 1) for v in range(u + 1, k + 1)}
    tree = {(i, i + 1) for i in range(k)}
    for v in range(k + 1, n):
        base = rng.choice(cliques)
        for u in base:
            edges.add((u, v))
        tree.add((base[0], v))
        for drop in base:
            cliques.append(tuple(sorted(set(base) - {drop} | {v})))
    kept = [e for e in sorted(edges) if e in tree or rng.random() < keep]
    return Graph(n, kept)


def bench(cfg: BenchConfig) -> list[tuple]:
    rows = []
    oracle_on = True
    query = Query.cycle(ResidueConstraint(cfg.q, {1}))
    for n in cfg.sizes:
        dp_t, states, or_t = [], [], []
        for i in range(cfg.samples):
            base = partial_ktree(random.Random(f"{cfg.seed}:{n}:{i}"), n, cfg.width)
            g = subdivision(base, cfg.q)
            nd = decompose_nice(g, cfg.width)
            t0 = time.perf_counter()
            run = run_dp(g, nd, "cycle", cfg.q)
            dp_t.append(time.perf_counter() - t0)
            states.append(run.state_count)
            assert not accepting_states(run).get(1)
            if oracle_on:
                t0 = time.perf_counter()
                assert oracle_decide(g, query, Budget(10**8)).is_no
                or_t.append(time.perf_counter() - t0)
        oracle = f"{statistics.median(or_t):.4f}" if or_t else "-"
        rows.append((n, len(dp_t), f"{statistics.median(dp_t):.4f}", int(statistics.median(states)), oracle))
        if or_t and statistics.median(or_t) > cfg.oracle_cap:
            oracle_on = False
    return rows


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="8,12,16,20,24,28")
    ap.add_argument("--width", type=int, default=3)
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--samples", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--oracle-cap", type=float, default=5.0)
    args = ap.parse_args(argv)
    cfg = BenchConfig(
        sizes=tuple(int(x) for x in args.sizes.split(",")),
        width=args.width,
        q=args.q,
        samples=args.samples,
        seed=args.seed,
        oracle_cap=args.oracle_cap,
    )
    print("\t".join(["n", "graphs", "dp_median_s", "dp_states", "oracle_median_s"]))
    for row in bench(cfg):
        print("\t".join(map(str, row)), flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
