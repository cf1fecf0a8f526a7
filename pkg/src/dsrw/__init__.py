"""Data-structure rewriting with local and global pointer redirection.

Graphs are ordered and partially labeled; rewrite steps are double
pushouts in the category of such graphs.
"""

from .disconnect import (
    DisconnectionResult,
    NodeDisconnectionResult,
    disconnect_edges,
    disconnect_hom,
    disconnect_node,
)
from .dot import export_dot
from .errors import *  # noqa: F403
from .graph import Edge, Graph, Signature, build_graph, edges, is_disconnected_edge
from .morphism import (
    Homomorphism,
    check_homomorphism,
    compose,
    find_isomorphism,
    identity,
    is_omega_injective,
    iter_homomorphisms,
)
from .pushout import (
    PushoutResult,
    QuotientWitness,
    Span,
    StrongLabelDiagnostic,
    is_strongly_labeled,
    pushout,
    quotient,
    verify_pushout,
)
from .rewrite import (
    GR_RULE,
    LrrRule,
    Match,
    RewriteSystem,
    StepResult,
    apply_once,
    find_lrr_matches,
    gr_step,
    lrr_step,
    make_lrr_rule,
    normalize,
    normalize_trace,
    trim,
)
from .syntax import parse_graph, parse_graph_document, parse_rules, serialize_graph, serialize_rules

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "BadRedirectTarget",
    "DisconnectionResult",
    "DomainMismatch",
    "DsrwError",
    "DuplicateNode",
    "DuplicateRule",
    "Edge",
    "FreshIdCollision",
    "FuelExhausted",
    "GR_RULE",
    "Graph",
    "GraphError",
    "Homomorphism",
    "HomomorphismError",
    "InconsistentArity",
    "InvalidHom",
    "InvalidSquare",
    "LabelNotPreserved",
    "LrrRule",
    "Match",
    "MatchInvalid",
    "NoMatch",
    "NoSuchEdge",
    "NoSuchNode",
    "NodeDisconnectionResult",
    "NotStronglyLabeled",
    "NotTotal",
    "ParseError",
    "PushoutResult",
    "QuotientWitness",
    "RewriteSystem",
    "RhoNotHom",
    "RuleError",
    "Signature",
    "Span",
    "StepResult",
    "StrongLabelDiagnostic",
    "SuccessorNotPreserved",
    "UnknownNode",
    "UnknownRule",
    "UnlabeledImageOfLabeled",
    "UnlabeledMappedToLabeled",
    "UnlabeledMergedByRho",
    "apply_once",
    "build_graph",
    "check_homomorphism",
    "compose",
    "disconnect_edges",
    "disconnect_hom",
    "disconnect_node",
    "edges",
    "export_dot",
    "find_isomorphism",
    "find_lrr_matches",
    "gr_step",
    "identity",
    "is_disconnected_edge",
    "is_omega_injective",
    "is_strongly_labeled",
    "iter_homomorphisms",
    "lrr_step",
    "make_lrr_rule",
    "normalize",
    "normalize_trace",
    "parse_graph",
    "parse_graph_document",
    "parse_rules",
    "pushout",
    "quotient",
    "serialize_graph",
    "serialize_rules",
    "trim",
    "verify_pushout",
]
