"""polyred: affine reduction certificates between 0/1-polytope families.

Builds the vertex sets of the quadric/cut/stable-set/packing/partition/
double-covering/assignment/ordering polytope families, instantiates the
known affine reductions between them as explicit certificates (target
instance, face specification, affine map), and verifies every certificate
by exact rational computation.
"""

from ._kernel import kernel_name
from .errors import InternalCheckError, ResourceGuardError, ValidationError
from .graphs import (Graph, IncidenceMatrix, complete_graph, conflict_graph,
                     cycle_graph, edge_incidence, edgeless_graph, path_graph)
from .linalg import AffineMap, affine_rank, find_affine_map
from .lp import LinConstraint, lp_feasible
from .zoo import (VertexSet, enumerate_assignment, enumerate_bqp, enumerate_cut,
                  enumerate_dcp, enumerate_family, enumerate_lop,
                  enumerate_pack_part, enumerate_qap, enumerate_qlop,
                  enumerate_qsap, enumerate_row_assignment, enumerate_ssp,
                  enumerate_vcp, face_restricted_enumerate, naive_enumerate,
                  quadratic_lift)

__version__ = "0.1.0"

__all__ = [
    "AffineMap", "Graph", "IncidenceMatrix", "InternalCheckError",
    "LinConstraint", "ResourceGuardError", "ValidationError", "VertexSet",
    "affine_rank", "complete_graph", "conflict_graph", "cycle_graph",
    "edge_incidence", "edgeless_graph", "enumerate_assignment",
    "enumerate_bqp", "enumerate_cut", "enumerate_dcp", "enumerate_family",
    "enumerate_lop", "enumerate_pack_part", "enumerate_qap", "enumerate_qlop",
    "enumerate_qsap", "enumerate_row_assignment", "enumerate_ssp",
    "enumerate_vcp", "face_restricted_enumerate", "find_affine_map",
    "kernel_name", "lp_feasible", "naive_enumerate", "path_graph",
    "quadratic_lift",
]
