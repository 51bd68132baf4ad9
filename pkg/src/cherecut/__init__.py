"""Exact combinatorics of loadings, theta-dominance, graded semistandard
tableaux and diagonal cuts of multipartitions."""

from .combinatorics import (
    Multipartition,
    Node,
    Params,
    enumerate_multipartitions,
    is_well_separated,
    nodes,
    removable_nodes,
    residue,
    validate_params,
)
from .cut import (
    BijectionReport,
    CutDecomposition,
    CutSet,
    CutSpec,
    InvalidCutError,
    admits_cut,
    cosaturated_closure,
    diagonal_sets,
    lambda_set,
    saturated_closure,
    split,
    split_pair,
    split_tableau,
    subquotient_graded_dim,
    verify_tableau_bijection,
)
from .exactpos import Position, cmp, format_position, parse_position, shift
from .graded import (
    ExtTable,
    GradedPoly,
    ext_table_from_json,
    ext_table_to_json,
    factor_decomposition,
    kunneth_combine,
    poly_mul,
)
from .io_render import (
    Figure,
    Problem,
    ProblemError,
    load_problem,
    load_problem_file,
    render_russian,
    render_theta_diagram,
    serialize,
)
from .loading import (
    ChargedLoading,
    LoadingEntry,
    charged_loading,
    node_position,
    r_dominates,
    residue_sequence,
    theta_dominates,
)
from .tableaux import (
    CrossingReport,
    DiagramGeometryError,
    StrandDiagram,
    Tableau,
    build_diagram,
    count_crossings,
    enumerate_sstd,
    identity_tableau,
    sstd_generating_poly,
    tableau_degree,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
