"""Minimum-link coverings of square grids, with exact arithmetic.

The package builds, verifies, and serializes polygonal chains that cover
every node of an n-by-n lattice grid: open paths, revisiting trails, closed
circuits, and closed cycles, each at the smallest possible number of links.
All geometry is exact — coordinates live in the field extending the
rationals by sqrt(2), lengths are sums of rational multiples of square
roots — so every certification is a zero-tolerance comparison.

Raster figure output lives in :mod:`gridlink.figures`, imported lazily so
the core package never drags matplotlib in.
"""

from .catalog import (
    CatalogEntry,
    catalog_entries,
    catalog_get,
    catalog_ids,
    epsilon_path,
    explicit_chain,
    near_cycle_gap_squared,
    near_cycle_path,
)
from .chains import PolygonalChain, VisitReport, link_length, total_length, visit_counts
from .collisions import (
    CollisionProfile,
    DivisibilityWitness,
    collision_profile,
    divisibility_witness,
    predicted_hits,
)
from .cycles import comb_cycle_vertices, covering_cycle, covering_cycle_even
from .documents import (
    FORMAT_VERSION,
    ChainDocument,
    canonical_json,
    document_from_json,
    radical_from_text,
    radical_to_text,
    scalar_from_json,
    scalar_to_json,
    strongest_kind,
)
from .errors import (
    ConstructionFailure,
    DocumentFormatError,
    DomainError,
    GridlinkError,
    ImpossibleRequestError,
    InvalidChainError,
    NotMinimalError,
    OracleViolation,
    UnimplementedPatternError,
    UnsupportedRadicalError,
)
from .exact import (
    ONE,
    SQRT2,
    ZERO,
    RadicalSum,
    Scalar,
    sqrt_rational_exact,
    sqrt_scalar,
    square_free_decompose,
)
from .geometry import (
    Line,
    LineRelation,
    Point,
    Segment,
    grid_nodes,
    in_grid,
    lattice_hits,
    lattice_hits_on_line,
    lattice_points_on_segment,
    line_intersection,
    point_on_segment,
    pt,
    segment_length,
)
from .growth import covering_circuit, distance_optimal_trail
from .search import (
    RestrictedModel,
    SearchOutcome,
    SearchResult,
    find_trail_not_path,
    refute_links,
    run_search,
    search_min_trail,
)
from .spirals import (
    assemble_path,
    bridge_line,
    missed_points,
    mixed_spiral_extend,
    triangular_spiral,
)
from .svg import RenderOptions, render_svg
from .sweep import SweepRow, run_sweep, sweep_to_csv, sweep_to_json, sweep_to_markdown
from .verify import (
    BoundsReport,
    Classification,
    Kind,
    certify,
    check_bounds,
    classify,
    length_lower_bound,
    length_upper_bound,
    min_link_length,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "CatalogEntry",
    "ChainDocument",
    "Classification",
    "CollisionProfile",
    "ConstructionFailure",
    "DivisibilityWitness",
    "DocumentFormatError",
    "DomainError",
    "FORMAT_VERSION",
    "GridlinkError",
    "ImpossibleRequestError",
    "InvalidChainError",
    "Kind",
    "Line",
    "LineRelation",
    "NotMinimalError",
    "ONE",
    "OracleViolation",
    "Point",
    "PolygonalChain",
    "RadicalSum",
    "RenderOptions",
    "RestrictedModel",
    "SQRT2",
    "Scalar",
    "SearchOutcome",
    "SearchResult",
    "Segment",
    "SweepRow",
    "UnimplementedPatternError",
    "UnsupportedRadicalError",
    "VisitReport",
    "ZERO",
    "assemble_path",
    "bridge_line",
    "canonical_json",
    "catalog_entries",
    "catalog_get",
    "catalog_ids",
    "certify",
    "check_bounds",
    "classify",
    "collision_profile",
    "comb_cycle_vertices",
    "covering_circuit",
    "covering_cycle",
    "covering_cycle_even",
    "distance_optimal_trail",
    "divisibility_witness",
    "document_from_json",
    "epsilon_path",
    "explicit_chain",
    "find_trail_not_path",
    "grid_nodes",
    "in_grid",
    "lattice_hits",
    "lattice_hits_on_line",
    "lattice_points_on_segment",
    "length_lower_bound",
    "length_upper_bound",
    "line_intersection",
    "link_length",
    "min_link_length",
    "missed_points",
    "mixed_spiral_extend",
    "near_cycle_gap_squared",
    "near_cycle_path",
    "point_on_segment",
    "predicted_hits",
    "pt",
    "radical_from_text",
    "radical_to_text",
    "refute_links",
    "render_svg",
    "run_search",
    "run_sweep",
    "scalar_from_json",
    "scalar_to_json",
    "search_min_trail",
    "segment_length",
    "sqrt_rational_exact",
    "sqrt_scalar",
    "square_free_decompose",
    "strongest_kind",
    "sweep_to_csv",
    "sweep_to_json",
    "sweep_to_markdown",
    "total_length",
    "triangular_spiral",
    "visit_counts",
]
