"""Exact solving and reduction laboratory for signed Roman domination."""

from .graph import (
    Graph,
    GraphFormatError,
    generate,
    is_bipartite,
    is_regular,
    is_split,
    parse_graph,
    write_graph,
)
from .nd import (
    NdPartition,
    achievable_weights,
    check_guess_feasible,
    enumerate_guesses,
    nd_partition,
    realize_labeling,
    solve_guess_ilp,
    solve_nd,
)
from .reductions import (
    MrssInstance,
    RbdsInstance,
    ReductionOutput,
    forward_label_gadget,
    forward_label_mrss,
    forward_label_rbds,
    forward_label_split,
    oracle_ds,
    oracle_mrss,
    oracle_rbds,
    reduce_ds_cubic_to_split,
    reduce_ds_gadget,
    reduce_mrss_to_fvs,
    reduce_rbds_to_vc,
    witness_holds,
)
from .solvers import CapExceeded, SolveResult, decide, solve_bb, solve_brute
from .srdf import (
    Labeling,
    Verdict,
    is_valid_srdf,
    labelsum,
    lower_bound_degree,
    weight,
)

__all__ = [
    "CapExceeded",
    "Graph",
    "GraphFormatError",
    "Labeling",
    "MrssInstance",
    "NdPartition",
    "RbdsInstance",
    "ReductionOutput",
    "SolveResult",
    "Verdict",
    "achievable_weights",
    "check_guess_feasible",
    "decide",
    "enumerate_guesses",
    "forward_label_gadget",
    "forward_label_mrss",
    "forward_label_rbds",
    "forward_label_split",
    "generate",
    "is_bipartite",
    "is_regular",
    "is_split",
    "is_valid_srdf",
    "labelsum",
    "lower_bound_degree",
    "nd_partition",
    "oracle_ds",
    "oracle_mrss",
    "oracle_rbds",
    "parse_graph",
    "realize_labeling",
    "reduce_ds_cubic_to_split",
    "reduce_ds_gadget",
    "reduce_mrss_to_fvs",
    "reduce_rbds_to_vc",
    "solve_bb",
    "solve_brute",
    "solve_guess_ilp",
    "solve_nd",
    "weight",
    "witness_holds",
    "write_graph",
]
