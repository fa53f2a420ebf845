"""Linear codes over prime fields built from simplicial complexes.

Build a complex from facets, derive its face code or ambient anticode,
compute exact parameters [n, k, d], track how topological operations
transform them, and grade the results against the Griesmer bound.
"""

from .bounds import OptimalityVerdict, classify, griesmer_sum
from .codes import (
    ANTICODE,
    Budgets,
    CodeSummary,
    ComplexCode,
    FACE_CODE,
    GlueWeightDecomposition,
    OperationReport,
    PredictedParams,
    anticode_weight_identity,
    build_anticode,
    build_code,
    glue_weight_decomposition,
    message_index,
    message_vector,
    min_distance_exhaustive,
    min_distance_geometric,
    predict_boundary,
    predict_cone,
    summarize_anticode,
    summarize_face_code,
    weight,
    weight_odd_intersection,
)
from .complexes import (
    Face,
    GluedComplex,
    SimplicialComplex,
    VertexMap,
    boundary,
    complement_sets,
    cone,
    disjoint_union,
    enumerate_faces,
    face_count,
    face_masks,
    faces_containing,
    from_facets,
    glue_faces,
    identify_vertices,
    is_connected,
    link,
    skeleton,
    stellar_subdivide,
)
from .errors import (
    BudgetExceededError,
    DegenerateComplexError,
    InputFormatError,
    InvalidComplexError,
    NonPrimeFieldError,
)
from .families import (
    FamilySpec,
    SweepResult,
    SweepRow,
    SweepRule,
    asymptotic_sweep,
    disjoint_triangles_rule,
    evaluate_family,
    facet_file_rule,
    fixed_triangle_rule,
    make_family_instance,
)
from .gf import MatrixFp, PrimeModulus, count_nonorthogonal, rank

__version__ = "0.1.0"

__all__ = [
    "ANTICODE",
    "Budgets",
    "BudgetExceededError",
    "CodeSummary",
    "ComplexCode",
    "DegenerateComplexError",
    "FACE_CODE",
    "Face",
    "FamilySpec",
    "GlueWeightDecomposition",
    "GluedComplex",
    "InputFormatError",
    "InvalidComplexError",
    "MatrixFp",
    "NonPrimeFieldError",
    "OperationReport",
    "OptimalityVerdict",
    "PredictedParams",
    "PrimeModulus",
    "SimplicialComplex",
    "SweepResult",
    "SweepRow",
    "SweepRule",
    "VertexMap",
    "anticode_weight_identity",
    "asymptotic_sweep",
    "boundary",
    "build_anticode",
    "build_code",
    "classify",
    "complement_sets",
    "cone",
    "count_nonorthogonal",
    "disjoint_triangles_rule",
    "disjoint_union",
    "enumerate_faces",
    "evaluate_family",
    "face_count",
    "face_masks",
    "faces_containing",
    "facet_file_rule",
    "fixed_triangle_rule",
    "from_facets",
    "glue_faces",
    "glue_weight_decomposition",
    "griesmer_sum",
    "identify_vertices",
    "is_connected",
    "link",
    "make_family_instance",
    "message_index",
    "message_vector",
    "min_distance_exhaustive",
    "min_distance_geometric",
    "predict_boundary",
    "predict_cone",
    "rank",
    "skeleton",
    "stellar_subdivide",
    "summarize_anticode",
    "summarize_face_code",
    "weight",
    "weight_odd_intersection",
]
