from .dyck import (
    DyckPath,
    OuterVertex,
    PairBucket,
    PairClassification,
    Step,
    StepRef,
    area,
    area_via_lemma1,
    classify_pair,
    enumerate_paths,
    enumerate_rugged,
    geometric_H,
    h_pairs,
    h_statistic,
    is_rugged,
    iter_paths,
    k_counts,
    outer_points,
    outer_vertices,
    pairs_O,
    star,
    star_index_map,
    unstar,
)
from .poly import (
    LaurentPolynomial,
    Monomial,
    SpecializationError,
    Variable,
    add,
    alpha_coefficient,
    degree_range,
    from_qt,
    inject_q,
    inject_t,
    monomial,
    mul,
    parse_specialization,
    qt_terms,
    specialize,
    swap_qt,
)
from .report import VerificationReport
from .shape import ShapeError, TorusShape, coprime_shapes
from .superpoly import (
    PathStatistics,
    PrimedPolynomial,
    SuperpolyResult,
    convert_convention,
    kalman_check,
    mellit_superpolynomial,
    p_minus,
    p_plus,
    path_statistics,
    qt_catalan,
    revert_convention,
    term_of_path,
    verify_full_twist,
)

__all__ = [
    "DyckPath",
    "OuterVertex",
    "PairBucket",
    "PairClassification",
    "Step",
    "StepRef",
    "area",
    "area_via_lemma1",
    "classify_pair",
    "enumerate_paths",
    "enumerate_rugged",
    "geometric_H",
    "h_pairs",
    "h_statistic",
    "is_rugged",
    "iter_paths",
    "k_counts",
    "outer_points",
    "outer_vertices",
    "pairs_O",
    "star",
    "star_index_map",
    "unstar",
    "LaurentPolynomial",
    "Monomial",
    "SpecializationError",
    "Variable",
    "add",
    "alpha_coefficient",
    "degree_range",
    "from_qt",
    "inject_q",
    "inject_t",
    "monomial",
    "mul",
    "parse_specialization",
    "qt_terms",
    "specialize",
    "swap_qt",
    "VerificationReport",
    "ShapeError",
    "TorusShape",
    "coprime_shapes",
    "PathStatistics",
    "PrimedPolynomial",
    "SuperpolyResult",
    "convert_convention",
    "kalman_check",
    "mellit_superpolynomial",
    "p_minus",
    "p_plus",
    "path_statistics",
    "qt_catalan",
    "revert_convention",
    "term_of_path",
    "verify_full_twist",
]
