"""Well-spread perfect matchings in bridgeless cubic multigraphs."""

from .assembly import backward_phase, glue, wspm
from .cactus import Cactus, build_cactus, cactus_reduce, validate_representation
from .errors import WSPMError
from .graph import CubicGraph, build_graph, require_cubic, split_on_edge_pair
from .reduction import ReductionPlan, ReductionRecord, forward_phase, two_cut_reduce
from .solver import wspm_any, wspm_with_edge, wspm_without_edge
from .verify import VerifyReport, count_wspms, verify_wspm

__all__ = [
    "Cactus", "CubicGraph", "ReductionPlan", "ReductionRecord", "VerifyReport", "WSPMError",
    "backward_phase", "build_cactus", "build_graph", "cactus_reduce", "count_wspms",
    "forward_phase", "glue", "require_cubic", "split_on_edge_pair", "two_cut_reduce",
    "validate_representation", "verify_wspm", "wspm", "wspm_any", "wspm_with_edge",
    "wspm_without_edge",
]
