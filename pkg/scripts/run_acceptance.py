"""Run acceptance criteria 1-9 outside pytest and print one line per criterion.

    python3 scripts/run_acceptance.py            # everything, a few minutes
    python3 scripts/run_acceptance.py --only 2,8
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
import tempfile
import time
from pathlib import Path

from modpath.cli import main as cli_main
from modpath.crosscheck import ACCEPTANCE_RUNS, run_suite
from modpath.generators import gnm_random
from modpath.graph import emit_graph


def determinism() -> tuple[bool, str]:
    """Criterion 9: repeated CLI runs give byte-identical reports."""
    here = Path(__file__).parent
    with tempfile.TemporaryDirectory() as tmp:
        g = Path(tmp) / "g.txt"
        g.write_text(emit_graph(gnm_random(9, 16, seed=4)))
        runs = [
            ["solve", "--graph", str(g), "--p", "1", "--q", "3"],
            ["spectrum", "--graph", str(g), "--q", "5"],
            ["experiment", str(here / "experiments" / "gnm_even_mod4.json")],
        ]
        same = 0
        for argv in runs:
            outs = []
            for _ in range(2):
                buf = io.StringIO()
                with contextlib.redirect_stdout(buf):
                    code = cli_main(argv)
                outs.append((code, buf.getvalue().encode()))
            same += outs[0] == outs[1]
    return same == len(runs), f"runs={len(runs)} byte-identical={same}"


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--only", help="comma-separated criterion numbers")
    args = ap.parse_args(argv)
    wanted = {int(x) for x in args.only.split(",")} if args.only else set(range(1, 10))

    failed = 0
    start = time.perf_counter()
    for run in ACCEPTANCE_RUNS:
        if run.criterion not in wanted:
            continue
        res = run_suite(run.suite, run.config)
        ok = res.ok and (run.limit_s is None or res.elapsed <= run.limit_s)
        failed += not ok
        print(f"criterion {run.criterion}: {'PASS' if ok else 'FAIL'}  {res.line()} elapsed={res.elapsed:.1f}s", flush=True)
        for d in res.discrepancies[:3]:
            sys.stdout.write(d.dump())
    if 9 in wanted:
        ok, summary = determinism()
        failed += not ok
        print(f"criterion 9: {'PASS' if ok else 'FAIL'}  {summary}")
    print(f"# total {time.perf_counter() - start:.1f}s, {failed} failing")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
