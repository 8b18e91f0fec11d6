"""Run every experiment spec in scripts/experiments/ and save the TSV reports.

    python3 scripts/run_experiments.py --out results/
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from pathlib import Path

from modpath.cli import main as cli_main

HERE = Path(__file__).parent


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("specs", nargs="*", type=Path, help="defaults to scripts/experiments/*.json")
    ap.add_argument("--out", type=Path, default=None, help="directory for <spec>.tsv reports")
    ap.add_argument("--seed", type=int, default=None, help="override every spec's master seed")
    args = ap.parse_args(argv)

    specs = args.specs or sorted((HERE / "experiments").glob("*.json"))
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for spec in specs:
        cli_args = ["experiment", str(spec)] + ([] if args.seed is None else ["--seed", str(args.seed)])
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli_main(cli_args)
        worst = max(worst, code)
        print(f"== {spec.name} exit={code}")
        print(buf.getvalue(), end="")
        if args.out:
            (args.out / f"{spec.stem}.tsv").write_text(buf.getvalue())
    return worst


if __name__ == "__main__":
    sys.exit(main())
