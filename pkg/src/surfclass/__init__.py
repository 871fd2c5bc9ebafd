"""Symbolic classification of surfaces.

Two halves share one package.  The real half classifies closed surfaces
presented as polygon edge-words: invariants, a rewriting engine that reaches
the canonical connected-sum form and records a replayable trace, connected
sums, and a brute-force reachability oracle for cross-checking.  The complex
half models rational surfaces through their Picard lattices: blow-up,
blow-down, and the reduction to a minimal model.
"""

from .words import (
    InternalInvariantError,
    Letter,
    PolygonSet,
    SurfaceType,
    SurfclassError,
    ValidationError,
    Word,
    WordSyntaxError,
    canonical_word,
    classify_by_invariants,
    complex_euler,
    complex_is_orientable,
    edge_count,
    euler_characteristic,
    glue_polygons,
    is_orientable,
    mint_fresh,
    parse_polygon_file,
    parse_word,
    render_word,
    validate,
    validate_polygon_set,
    vertex_cycle_count,
)
from .moves import (
    Cancel,
    CutPaste,
    FlipEdge,
    Insert,
    Move,
    MoveError,
    MoveTrace,
    Reflect,
    Rename,
    ReplayError,
    Rotate,
    apply_move,
    cut,
    parse_trace,
    paste,
    replay,
)
from .normalize import (
    NormalizationResult,
    certificate_words,
    equivalent,
    normalize,
)
from .orbit import OrbitResult, enumerate_words, orbit_oracle
from .sums import Decomposition, connected_sum_type, connected_sum_words, decompose
from .lattice import (
    BaseSurface,
    BundleDegree,
    DivisorClass,
    RationalSurface,
    TopologicalModel,
    blow_down,
    blow_up,
    blowup_chart_transition,
    cocycle_at,
    euler_characteristic_cx,
    intersect,
    make_base,
    projectivize,
    signature,
    topological_model,
)
from .minimal import (
    MinimalType,
    ReductionReport,
    classify_minimal,
    find_minus_one_lines,
    minimal_model,
)
from .script import ScriptError, ScriptOutcome, parse_class_expr, run_script

__version__ = "0.1.0"

__all__ = [
    "Cancel",
    "BaseSurface",
    "BundleDegree",
    "CutPaste",
    "Decomposition",
    "DivisorClass",
    "FlipEdge",
    "Insert",
    "InternalInvariantError",
    "Letter",
    "MinimalType",
    "Move",
    "MoveError",
    "MoveTrace",
    "NormalizationResult",
    "OrbitResult",
    "PolygonSet",
    "RationalSurface",
    "ReductionReport",
    "Reflect",
    "Rename",
    "ReplayError",
    "Rotate",
    "ScriptError",
    "ScriptOutcome",
    "SurfaceType",
    "SurfclassError",
    "TopologicalModel",
    "ValidationError",
    "Word",
    "WordSyntaxError",
    "apply_move",
    "blow_down",
    "blow_up",
    "blowup_chart_transition",
    "canonical_word",
    "certificate_words",
    "classify_by_invariants",
    "classify_minimal",
    "cocycle_at",
    "complex_euler",
    "complex_is_orientable",
    "connected_sum_type",
    "connected_sum_words",
    "cut",
    "decompose",
    "edge_count",
    "enumerate_words",
    "equivalent",
    "euler_characteristic",
    "euler_characteristic_cx",
    "find_minus_one_lines",
    "glue_polygons",
    "intersect",
    "is_orientable",
    "make_base",
    "minimal_model",
    "mint_fresh",
    "normalize",
    "orbit_oracle",
    "parse_class_expr",
    "parse_polygon_file",
    "parse_trace",
    "parse_word",
    "paste",
    "projectivize",
    "render_word",
    "replay",
    "run_script",
    "signature",
    "topological_model",
    "validate",
    "validate_polygon_set",
    "vertex_cycle_count",
]
