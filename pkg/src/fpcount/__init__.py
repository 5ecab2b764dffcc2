"""Exact fixed-point counting for boolean dynamical systems."""

from .engines import (
    Caps,
    DispatchReport,
    and_or_width,
    count_and_or,
    count_brute,
    count_linear,
    count_twdp,
    dispatch,
    fixed_points,
    linear_rank,
    predict_branches,
)
from .errors import (
    ArityCapExceeded,
    BruteCapExceeded,
    BudgetExceeded,
    CapExceeded,
    DecompositionTooWide,
    EngineNotApplicable,
    FormulaSyntaxError,
    FPCountError,
    NonLinearFunction,
    NotAndOrSystem,
    ScopeNotCovered,
    ValidationError,
)
from .functions import (
    And,
    Circuit,
    Const,
    Formula,
    Gate,
    Maj3,
    Not,
    Or,
    S00,
    S10,
    TruthTable,
    Var,
    Xor,
    dualize,
    evaluate,
    format_formula,
    formula_size,
    formula_to_circuit,
    parse_formula,
    syntactic_basis,
    to_table,
)
from .graphs import (
    TreeDecomposition,
    closure_graph,
    graph_report,
    is_planar,
    is_valid_decomposition,
    scc_condensation,
    tree_decomposition,
)
from .io import dumps_system, loads_system, read_system, write_system
from .post import PostReport, classify
from .system import (
    Network,
    System,
    UpdateSchedule,
    global_map,
    global_transition,
    is_fixed_point,
    is_local_fixed_point,
    neighbors,
)

__all__ = [
    "And",
    "and_or_width",
    "ArityCapExceeded",
    "BruteCapExceeded",
    "BudgetExceeded",
    "CapExceeded",
    "Caps",
    "Circuit",
    "classify",
    "closure_graph",
    "Const",
    "count_and_or",
    "count_brute",
    "count_linear",
    "count_twdp",
    "DecompositionTooWide",
    "dispatch",
    "DispatchReport",
    "dualize",
    "dumps_system",
    "EngineNotApplicable",
    "evaluate",
    "fixed_points",
    "format_formula",
    "Formula",
    "formula_size",
    "formula_to_circuit",
    "FormulaSyntaxError",
    "FPCountError",
    "Gate",
    "global_map",
    "global_transition",
    "graph_report",
    "is_fixed_point",
    "is_local_fixed_point",
    "is_planar",
    "is_valid_decomposition",
    "linear_rank",
    "loads_system",
    "Maj3",
    "neighbors",
    "Network",
    "NonLinearFunction",
    "Not",
    "NotAndOrSystem",
    "Or",
    "parse_formula",
    "PostReport",
    "predict_branches",
    "read_system",
    "S00",
    "S10",
    "scc_condensation",
    "ScopeNotCovered",
    "syntactic_basis",
    "System",
    "to_table",
    "tree_decomposition",
    "TreeDecomposition",
    "TruthTable",
    "UpdateSchedule",
    "ValidationError",
    "Var",
    "write_system",
    "Xor",
]

__version__ = "0.1.0"
