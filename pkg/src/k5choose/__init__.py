"""List colouring of K5-minor-free graphs from lists of five colours."""

from .boundary import Instance, InvalidInstance, boundary_after_delete, check_instance
from .choose import InternalContradiction, Trace, color, five_choose, verify_coloring
from .graph import (
    Graph,
    Separation,
    articulation_vertices,
    components,
    contract_edge,
    find_small_cut_separating,
    is_two_connected,
)
from .minors import BranchModel, OracleScaleExceeded, find_k5_model, has_k5_minor, is_boundary, plus
from .oracle import brute_force_list_color
from .rooted import (
    RootedK3Witness,
    extract_rooted_k3,
    find_contractible_edge,
    has_rooted_k3,
    is_good,
    validate_witness,
)

__all__ = [
    "BranchModel",
    "Graph",
    "Instance",
    "InternalContradiction",
    "InvalidInstance",
    "OracleScaleExceeded",
    "RootedK3Witness",
    "Separation",
    "Trace",
    "articulation_vertices",
    "boundary_after_delete",
    "brute_force_list_color",
    "check_instance",
    "color",
    "components",
    "contract_edge",
    "extract_rooted_k3",
    "find_contractible_edge",
    "find_k5_model",
    "find_small_cut_separating",
    "five_choose",
    "has_k5_minor",
    "has_rooted_k3",
    "is_boundary",
    "is_good",
    "is_two_connected",
    "plus",
    "validate_witness",
    "verify_coloring",
]
