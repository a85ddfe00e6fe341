"""Exact degree-based topological indices from degree-pair counting
polynomials, centered on the hyperbolic Sombor index.

The index of a graph is computed by up to three independent exact routes
(definitional edge sum, termwise operator pipeline, per-family closed form)
that are required to agree as algebraic numbers, not merely as floats.
"""

from .errors import (
    DegenerateDegreeError,
    DivergentIntegralError,
    DomainError,
    EdgeListError,
    EdgeListFormatError,
    EdgeListParseError,
    InfeasibleConstructionError,
    InvalidRadicandError,
    InvalidRangeError,
    MPolyTopoError,
)
from .families import (
    ALL_FAMILIES,
    Family,
    FamilySpec,
    catalog_mpoly,
    closed_hso,
    construct,
    expected_counts,
    get_info,
    make_spec,
    structural_ok,
)
from .graphs import (
    DisconnectedGraphWarning,
    EdgePartition,
    SimpleGraph,
    edge_partition,
    generic_index,
    hso_direct,
    hso_pair,
    m_polynomial,
    random_connected_graph,
    read_edge_list,
)
from .indices import HsoReport, compute_report, fixed_decimal, format_fixed, hso_via_pipeline
from .polyring import (
    BiPoly,
    RadScalar,
    d_half_x,
    eval_grid,
    eval_x1,
    j_diag,
    p_x,
    p_y,
    rad_mul_sqrt,
    rad_to_float,
    s_x,
    squarefree_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_FAMILIES",
    "BiPoly",
    "DegenerateDegreeError",
    "DisconnectedGraphWarning",
    "DivergentIntegralError",
    "DomainError",
    "EdgeListError",
    "EdgeListFormatError",
    "EdgeListParseError",
    "EdgePartition",
    "Family",
    "FamilySpec",
    "HsoReport",
    "InfeasibleConstructionError",
    "InvalidRadicandError",
    "InvalidRangeError",
    "MPolyTopoError",
    "RadScalar",
    "SimpleGraph",
    "catalog_mpoly",
    "closed_hso",
    "compute_report",
    "construct",
    "d_half_x",
    "edge_partition",
    "eval_grid",
    "eval_x1",
    "expected_counts",
    "fixed_decimal",
    "format_fixed",
    "generic_index",
    "get_info",
    "hso_direct",
    "hso_pair",
    "hso_via_pipeline",
    "j_diag",
    "m_polynomial",
    "make_spec",
    "p_x",
    "p_y",
    "rad_mul_sqrt",
    "rad_to_float",
    "random_connected_graph",
    "read_edge_list",
    "s_x",
    "squarefree_decompose",
    "structural_ok",
]
