"""Homological invariants of edge ideals of finite simple graphs.

Library surface: graphs and graph6 I/O, exact simplicial homology,
Betti tables and derived invariants, feasible-region predicates,
witness constructions, fast survey kernels, and bulk verification.
"""

from .betti import (
    BettiTable,
    HPolynomial,
    InvariantTuple,
    betti_splitting_check,
    betti_table_hochster,
    betti_table_koszul_oracle,
    depth,
    h_polynomial,
    invariant_tuple,
    krull_dim,
    projdim,
    regularity,
)
from .complexes import (
    GF2,
    QQ,
    FieldSpec,
    SimplicialComplex,
    SizeLimitError,
    SquarefreeIdeal,
    f_vector,
    independence_complex,
    rank,
    reduced_euler_characteristic,
    reduced_homology_dims,
    restrict,
    stanley_reisner_complex,
)
from .graphs import (
    Graph,
    GraphStats,
    complete,
    cycle,
    delete_vertices,
    disjoint_union,
    duplicate_vertex,
    empty_graph,
    from_edges,
    graph_stats,
    induced_matching_number,
    is_connected,
    matching_number,
    max_independent,
    maximal_independent_sets,
    min_maximal_independent,
    parse_graph6,
    path,
    s_suspension,
    star,
    to_graph6,
)
from .kernels import graph_profile, survey_scan
from .regions import (
    enumerate_cstar,
    enumerate_cstarstar,
    in_cc,
    in_cstar,
    in_cstarstar,
    projection_cstarstar,
)
from .survey import (
    CorpusError,
    FieldRobustnessReport,
    PropertyReport,
    SurveyResult,
    TheoremVerdict,
    achieved_tuples,
    enumerate_connected,
    field_robustness,
    load_corpus,
    property_suite,
    random_connected_graph,
    scan_survey,
    verify_corollary,
    verify_theorem_main,
)
from .witnesses import (
    OutsideRegionError,
    WitnessValidationError,
    split_witness,
    witness,
    witness_manifest_rows,
)

__version__ = "0.1.0"
