"""Plane-graph counting toolkit: faces, triangle density bounds and 3-coloring checks."""

from .bounds import (
    BoundChain,
    ContradictionReport,
    Theorem4Verdict,
    bound_chain,
    contradiction_report,
    edge_upper_bound,
    face_count_bound,
    ky_lower_bound,
    theorem4_verdict,
)
from .coloring import (
    Coloring,
    PeelTrace,
    exact_k_color,
    greedy_color_from_peel,
    is_4_critical,
    peel_order,
    verify_coloring,
)
from .corpus import (
    CorpusFilter,
    enumerate_embeddings,
    enumerate_small_graphs,
    parse_graph6,
    parse_planar_code,
    write_graph6,
    write_planar_code,
)
from .graph import Graph
from .plane import (
    FaceSet,
    GraphCounts,
    PlaneGraph,
    RotationSystem,
    build_plane_graph,
    counts,
    euler_genus,
    trace_faces,
)
from .structure import (
    StructureReport,
    adjacent_triangles_exist,
    count_triangles,
    forbidden_cycle_scan,
    has_cycle_of_length,
)

__version__ = "0.1.0"
