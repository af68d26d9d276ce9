"""Minimum triangle transversals and maximum triangle packings of
bilaterally-complete tripartite graphs (C++ core via pybind11)."""

from ._core import (
    BudgetExceeded,
    Certificate,
    InvariantViolation,
    NetworkGraph,
    NotBilaterallyComplete,
    Orientation,
    ParseError,
    Part,
    PreconditionError,
    Side,
    TripackError,
    TripartiteGraph,
    ValidationError,
    ValidationReport,
    apply_orientation,
    brute_max_packing,
    brute_min_transversal,
    build_network,
    detect_orientation,
    edge_colour,
    enumerate_triangles,
    generate,
    is_packing,
    is_transversal,
    load_graph,
    mao_cheng_min,
    max_disjoint_paths,
    min_separator,
    parse_graph,
    serialize_graph,
    solve,
    uniform_transversal_min,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
