"""Exact sizes of Markov equivalence classes represented by essential graphs.

The formula engine reduces each chordal chain component to its core graph,
derives that core's size polynomial once, and evaluates it exactly; the
benchmark engine recurses over rooted subclasses. Both agree on every input,
the benchmark is just slower.
"""

from .counting import size_benchmark, size_uccg_benchmark
from .essential import (
    ChainGraph,
    RootedDecomposition,
    chain_com,
    chain_components,
    count_v_structures,
    is_acyclic,
    is_chain_graph,
)
from .formula import (
    CoefficientSystem,
    InternalInvariantError,
    SizePolynomial,
    closed_form,
    evaluate,
    format_polynomial,
    g_polynomial,
    recurrence_check,
    shift,
    size_f,
    size_formula_based,
    size_gf,
    solve_beta,
)
from .graphs import (
    GENERAL,
    ISOLATED_EDGES,
    NULL,
    TREE,
    TREE_PLUS,
    CoreDecomposition,
    CoreValidationReport,
    InvalidGraphError,
    UndirectedGraph,
    add_dominating_vertices,
    canonical_key,
    classify,
    complement,
    connected_components,
    core_decomposition,
    dominating_vertices,
    induced_subgraph,
    is_chordal,
    is_connected,
    validate_core_graph,
)
from .testkit import (
    ORACLE_MAX_VERTICES,
    Fixture,
    acyclic_orientation_masks,
    core_fixtures,
    formula_fixtures,
    oracle_count,
    oracle_extension_count,
    random_chordal,
)

__version__ = "0.1.0"

__all__ = [
    "GENERAL",
    "ISOLATED_EDGES",
    "NULL",
    "ORACLE_MAX_VERTICES",
    "TREE",
    "TREE_PLUS",
    "ChainGraph",
    "CoefficientSystem",
    "CoreDecomposition",
    "CoreValidationReport",
    "Fixture",
    "InternalInvariantError",
    "InvalidGraphError",
    "RootedDecomposition",
    "SizePolynomial",
    "UndirectedGraph",
    "acyclic_orientation_masks",
    "add_dominating_vertices",
    "canonical_key",
    "chain_com",
    "chain_components",
    "classify",
    "closed_form",
    "complement",
    "connected_components",
    "core_decomposition",
    "core_fixtures",
    "count_v_structures",
    "dominating_vertices",
    "evaluate",
    "format_polynomial",
    "formula_fixtures",
    "g_polynomial",
    "induced_subgraph",
    "is_acyclic",
    "is_chain_graph",
    "is_chordal",
    "is_connected",
    "oracle_count",
    "oracle_extension_count",
    "random_chordal",
    "recurrence_check",
    "shift",
    "size_benchmark",
    "size_f",
    "size_formula_based",
    "size_gf",
    "size_uccg_benchmark",
    "solve_beta",
    "validate_core_graph",
]
