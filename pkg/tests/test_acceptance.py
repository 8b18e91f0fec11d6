"""Acceptance criteria 1-9 at full scale.

Each test records a one-line verdict that the terminal summary prints as
``criterion N: PASS|FAIL``. Runtime is a few minutes on one core.
"""

import json

import pytest

from conftest import ACCEPTANCE, write_graph
from modpath.cli import main
from modpath.crosscheck import ACCEPTANCE_RUNS, run_suite
from modpath.generators import complete, complete_bipartite, gnm_random

pytestmark = pytest.mark.acceptance


RUNS = {run.criterion: run for run in ACCEPTANCE_RUNS}


@pytest.mark.parametrize(
    "criterion",
    sorted(RUNS),
    ids=[f"criterion_{k}_{RUNS[k].suite}" for k in sorted(RUNS)],
)
def test_oracle_anchored_criterion(criterion):
    run = RUNS[criterion]
    res = run_suite(run.suite, run.config)
    in_time = run.limit_s is None or res.elapsed <= run.limit_s
    limit = f" limit={run.limit_s:g}s" if run.limit_s else ""
    ACCEPTANCE[criterion] = (res.ok and in_time, f"{res.line()} elapsed={res.elapsed:.1f}s{limit}")
    for d in res.discrepancies[:3]:
        print(d.dump())
    assert res.ok, res.line()
    assert in_time, f"{res.elapsed:.1f}s over the {run.limit_s}s limit"


def test_criterion_9_determinism(tmp_path, capsys):
    g = write_graph(tmp_path, gnm_random(9, 16, seed=4), "g.txt")
    k = write_graph(tmp_path, complete_bipartite(3, 4), "k.txt")
    write_graph(tmp_path, complete(5), "k5.txt")
    spec = tmp_path / "spec.json"
    spec.write_text(
        json.dumps(
            {"generator": "gnm_random({n}, {m})", "grid": {"n": [8, 9], "m": [12, 18]}, "samples": 8, "seed": 11, "q": 3, "probe": "zero"}
        )
    )
    runs = [
        ["solve", "--graph", g, "--p", "1", "--q", "3"],
        ["solve", "--graph", g, "--kind", "path", "--s", "0", "--t", "5", "--p", "2", "--q", "4", "--seed", "7"],
        ["solve", "--graph", k, "--solver", "parity-cycle", "--p", "1", "--q", "2"],
        ["solve", "--graph", str(tmp_path / "k5.txt"), "--solver", "treewidth", "--p", "0", "--q", "3", "--width-cap", "2"],
        ["spectrum", "--graph", g, "--q", "5"],
        ["spectrum", "--graph", g, "--kind", "path", "--s", "1", "--t", "2", "--q", "3", "--backend", "treewidth"],
        ["experiment", str(spec)],
        ["experiment", str(spec), "--seed", "12"],
    ]
    mismatched = []
    for argv in runs:
        outputs = []
        for _ in range(2):
            code = main(argv)
            outputs.append((code, capsys.readouterr().out.encode()))
        if outputs[0] != outputs[1] or not outputs[0][1]:
            mismatched.append(argv[0])
    ACCEPTANCE[9] = (not mismatched, f"runs={len(runs)} byte-identical={len(runs) - len(mismatched)}")
    assert not mismatched
