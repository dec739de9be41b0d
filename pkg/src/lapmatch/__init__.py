"""Matching and Laplacian matching polynomials of small graphs.

Exact computation by independent routes, certified real-root isolation, and
exhaustive scans for integral root variation under edge addition.
"""

__version__ = "0.1.0"

from .errors import (
    DomainError,
    Graph6ParseError,
    InternalInconsistencyError,
    LapmatchError,
    NotDivisibleError,
    RouteDisagreementError,
    SizeCapError,
)
from .graphs import Graph, StructuralMetrics, parse_graph6, structural_metrics, write_graph6
from .laplacian import LaplacianMatchingPoly, cross_validated, lm_direct, lm_roots, lm_subdivision, lm_tu
from .matching import MatchingProfile, matching_counts_oracle, matching_polynomial
from .polynomials import RootInterval, RootSet, isolate_real_roots, refine_root
from .variation import (
    VariationReport,
    applicable_obstructions,
    detect_one_place,
    detect_two_place,
    scan_graph,
    variation_report,
)

__all__ = [
    "__version__",
    "DomainError",
    "Graph",
    "Graph6ParseError",
    "InternalInconsistencyError",
    "LapmatchError",
    "LaplacianMatchingPoly",
    "MatchingProfile",
    "NotDivisibleError",
    "RootInterval",
    "RootSet",
    "RouteDisagreementError",
    "SizeCapError",
    "StructuralMetrics",
    "VariationReport",
    "applicable_obstructions",
    "cross_validated",
    "detect_one_place",
    "detect_two_place",
    "isolate_real_roots",
    "lm_direct",
    "lm_roots",
    "lm_subdivision",
    "lm_tu",
    "matching_counts_oracle",
    "matching_polynomial",
    "parse_graph6",
    "refine_root",
    "scan_graph",
    "structural_metrics",
    "variation_report",
    "write_graph6",
]
