"""slowcolor: exact solver and theorem lab for the slow coloring game."""

from .graph import (
    Graph,
    GraphError,
    bits,
    components,
    find_cycle,
    from_edges,
    independence_number,
    is_independent,
    load_graph,
    mask_of,
    maximal_independent_subsets,
    symmetric_difference,
)
from .solver import (
    KERNEL_NAME,
    SolveOptions,
    SolveResult,
    SolverCapExceeded,
    SolveTimeout,
    closed_form_path,
    closed_form_star,
    solve,
    solve_additive,
)

__all__ = [
    "Graph", "GraphError", "bits", "components", "find_cycle", "from_edges",
    "independence_number", "is_independent", "load_graph", "mask_of",
    "maximal_independent_subsets", "symmetric_difference",
    "SolveOptions", "SolveResult", "SolverCapExceeded", "SolveTimeout",
    "closed_form_path", "closed_form_star", "solve", "solve_additive",
    "KERNEL_NAME",
]
