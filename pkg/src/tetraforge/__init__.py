"""Tetravalent graph families, derived graphs, and edge-symmetry analysis."""

from ._kernel import BACKEND as KERNEL_BACKEND
from .errors import (
    BudgetExceededError,
    DegenerateGraphError,
    GraphFormatError,
    ParameterError,
    TetraforgeError,
    UNKNOWN,
)
from .graphs import (
    Graph,
    Orientation,
    build_graph,
    decode_g6,
    encode_g6,
    read_g6_file,
    write_g6_file,
)
from .perms import Perm, PermGroup
from .symmetry import (
    CanonicalForm,
    analyze,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    extend_to_automorphism,
    is_unworthy,
    isomorphism,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CanonicalForm",
    "DegenerateGraphError",
    "Graph",
    "GraphFormatError",
    "KERNEL_BACKEND",
    "Orientation",
    "ParameterError",
    "Perm",
    "PermGroup",
    "TetraforgeError",
    "UNKNOWN",
    "analyze",
    "are_isomorphic",
    "automorphism_group",
    "build_graph",
    "canonical_form",
    "decode_g6",
    "encode_g6",
    "extend_to_automorphism",
    "is_unworthy",
    "isomorphism",
    "read_g6_file",
    "write_g6_file",
    "__version__",
]
