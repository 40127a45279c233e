"""Combinatorial engine for higher cluster categories of type A.

Objects are admissible ``(d+1)``-tuples of vertices on a circle with
``n + 2d + 1`` points; cluster tilting objects are largest collections of
pairwise non-intertwining tuples.
"""

from .errors import (
    AngulataError,
    BasisMismatch,
    BudgetExceeded,
    ExchangeGraphDisconnected,
    InvariantViolation,
    NotMutable,
    RigidityViolation,
    UnsupportedDimension,
    ValidationError,
)
from .index import (
    Branch,
    IndexVector,
    apply_index_substitution,
    apply_index_substitution_general,
    compute_index,
    compute_index_sum,
    index_exchange_objects,
    mutate_index,
    mutation_path,
)
from .model import (
    ZERO,
    ModelParams,
    ZeroObject,
    arc,
    enumerate_objects,
    hom_to_suspension_dim,
    index_tuple,
    intertwines,
    is_admissible,
    lamination,
    round_down,
    round_up,
    suspend,
)
from .shear import local_shear, mesh_arcs, shear_lamination, shear_vector
from .tilting import (
    ClusterTilting,
    ExchangeAngles,
    ExchangeFrame,
    ExchangeGraph,
    complete_to_tilting,
    enumerate_tiltings,
    exchange_angles,
    exchange_graph,
    find_replacement,
    is_cluster_tilting,
    mutable_positions,
    mutate,
    tilting_size,
)
from .tropical import SkewMatrix, YSeed, mutate_matrix, mutate_y_tropical, trop_add, trop_mul

__version__ = "0.1.0"

__all__ = [
    "AngulataError",
    "BasisMismatch",
    "Branch",
    "BudgetExceeded",
    "ClusterTilting",
    "ExchangeAngles",
    "ExchangeFrame",
    "ExchangeGraph",
    "ExchangeGraphDisconnected",
    "IndexVector",
    "InvariantViolation",
    "ModelParams",
    "NotMutable",
    "RigidityViolation",
    "SkewMatrix",
    "UnsupportedDimension",
    "ValidationError",
    "YSeed",
    "ZERO",
    "ZeroObject",
    "apply_index_substitution",
    "apply_index_substitution_general",
    "arc",
    "complete_to_tilting",
    "compute_index",
    "compute_index_sum",
    "enumerate_objects",
    "enumerate_tiltings",
    "exchange_angles",
    "exchange_graph",
    "find_replacement",
    "hom_to_suspension_dim",
    "index_exchange_objects",
    "index_tuple",
    "intertwines",
    "is_admissible",
    "is_cluster_tilting",
    "lamination",
    "local_shear",
    "mesh_arcs",
    "mutable_positions",
    "mutate",
    "mutate_index",
    "mutate_matrix",
    "mutate_y_tropical",
    "mutation_path",
    "round_down",
    "round_up",
    "shear_lamination",
    "shear_vector",
    "suspend",
    "tilting_size",
    "trop_add",
    "trop_mul",
]
