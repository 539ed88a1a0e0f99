"""configforge: dependency-aware static configuration.

Parse a deps file describing boolean options, infer the consequences of
user choices, and generate config.h / config.mk build artifacts.
"""

from .errors import (
    ConfigForgeError,
    ConflictingConfigurationError,
    DepsSyntaxError,
    DuplicateInterfaceError,
    EmptyImplListError,
    IncompleteConfigurationError,
    IncompleteValuationError,
    MultiInterfaceMembershipError,
    ResourceLimitExceededError,
    SelfReferenceError,
    UnknownOptionError,
)
from .formula import (
    And,
    Assignment,
    Const,
    EMPTY_ASSIGNMENT,
    FALSE,
    Formula,
    Lit,
    Or,
    TRUE,
    apply_assignment,
    conj,
    disj,
    encode_dep,
    encode_iface,
    encode_model,
    evaluate,
    format_formula,
    formula_options,
)
from .generators import generate_config_h, generate_config_mk, macro_name
from .graph import STATUS_COLORS, graph_payload, to_dot, to_graph_json
from .heuristic import CnfForm, infer_heuristic, simplify, substitute, to_cnf
from .inference import COMPLETE, ENGINES, HEURISTIC, InferenceResult, Verdict
from .parser import (
    Dep,
    DepsModel,
    Iface,
    Prop,
    Statement,
    format_model,
    format_statement,
    parse_deps,
    parse_property_line,
    sanitized_name,
)
from .session import NodeStatus, Session
from .solver import (
    CompleteSolver,
    Valuation,
    enumerate_configurations,
    forced_sets,
    is_satisfiable,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "Assignment",
    "CnfForm",
    "COMPLETE",
    "CompleteSolver",
    "ConfigForgeError",
    "ConflictingConfigurationError",
    "Const",
    "Dep",
    "DepsModel",
    "DepsSyntaxError",
    "DuplicateInterfaceError",
    "EMPTY_ASSIGNMENT",
    "ENGINES",
    "EmptyImplListError",
    "FALSE",
    "Formula",
    "HEURISTIC",
    "Iface",
    "IncompleteConfigurationError",
    "IncompleteValuationError",
    "InferenceResult",
    "Lit",
    "MultiInterfaceMembershipError",
    "NodeStatus",
    "Or",
    "Prop",
    "ResourceLimitExceededError",
    "STATUS_COLORS",
    "SelfReferenceError",
    "Session",
    "Statement",
    "TRUE",
    "UnknownOptionError",
    "Valuation",
    "Verdict",
    "apply_assignment",
    "conj",
    "disj",
    "encode_dep",
    "encode_iface",
    "encode_model",
    "enumerate_configurations",
    "evaluate",
    "forced_sets",
    "format_formula",
    "format_model",
    "format_statement",
    "formula_options",
    "generate_config_h",
    "generate_config_mk",
    "graph_payload",
    "infer_heuristic",
    "is_satisfiable",
    "macro_name",
    "parse_deps",
    "parse_property_line",
    "sanitized_name",
    "simplify",
    "substitute",
    "to_cnf",
    "to_dot",
    "to_graph_json",
    "__version__",
]
