"""Simple paths and cycles whose length is constrained modulo an integer.

Exhaustive oracles, polynomial solvers for the tractable cases, a
bounded-treewidth dynamic program, and executable reductions.
"""

from .graph import (
    Graph,
    GraphFormatError,
    Kind,
    Outcome,
    Query,
    ResidueConstraint,
    Verdict,
    Witness,
    emit_graph,
    emit_witness,
    parse_graph,
    parse_witness,
    validate_witness,
)
from .oracle import oracle_decide, oracle_k_disjoint, oracle_spectrum
from .poly import (
    all_same_parity,
    dag_decide,
    directed_odd_cycle,
    parity_cycle_decide,
    parity_path_decide,
    walk_decide,
)
from .treewidth import decompose_nice, modcycle_zero_decide, tw_decide, tw_spectrum

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphFormatError",
    "Kind",
    "Outcome",
    "Query",
    "ResidueConstraint",
    "Verdict",
    "Witness",
    "all_same_parity",
    "dag_decide",
    "decompose_nice",
    "directed_odd_cycle",
    "emit_graph",
    "emit_witness",
    "modcycle_zero_decide",
    "oracle_decide",
    "oracle_k_disjoint",
    "oracle_spectrum",
    "parity_cycle_decide",
    "parity_path_decide",
    "parse_graph",
    "parse_witness",
    "tw_decide",
    "tw_spectrum",
    "validate_witness",
    "walk_decide",
]
