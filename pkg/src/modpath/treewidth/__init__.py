"""Tree decompositions and the bounded-treewidth dynamic program."""

from .decomposition import (
    DecompositionFailure,
    InvalidDecomposition,
    TreeDecomposition,
    compute_decomposition,
    emit_decomposition,
    parse_decomposition,
    validate_decomposition,
)
from .dp import (
    StateBudgetExceeded,
    decompose_nice,
    edge_owners,
    modcycle_zero_decide,
    run_dp,
    tw_decide,
    tw_spectrum,
)
from .nice import NiceDecomposition, NiceNode, NodeKind, make_nice

__all__ = [
    "DecompositionFailure",
    "InvalidDecomposition",
    "NiceDecomposition",
    "NiceNode",
    "NodeKind",
    "StateBudgetExceeded",
    "TreeDecomposition",
    "compute_decomposition",
    "decompose_nice",
    "edge_owners",
    "emit_decomposition",
    "make_nice",
    "modcycle_zero_decide",
    "parse_decomposition",
    "run_dp",
    "tw_decide",
    "tw_spectrum",
    "validate_decomposition",
]
