"""Exact Steiner distance parameters of trees.

Computation of Steiner k-eccentricities, k-diameters, and (k,k')-radii on
trees, closed forms and generators for the extremal families, an
independent Dreyfus-Wagner oracle for general graphs, exhaustive tree
corpora, corpus-wide verification suites, and a conjecture counterexample
hunter.  See the ``steinerkit`` CLI for the command-line surface.
"""

from .errors import (
    BadK,
    BadSpec,
    BadVertex,
    EmptySet,
    MalformedGraph6,
    NotAGraph,
    NotATree,
    PreconditionError,
    SteinerKitError,
    TooLarge,
    UnknownSuite,
    UnsupportedKind,
)
from .tree import (
    CenterProfile,
    SteinerWitness,
    Tree,
    as_vertex_set,
    center_profile,
    distance,
    eccentricity,
    leaf_branch_length,
    steiner_distance,
    validate,
)
from .params import (
    ASet,
    ParamRecord,
    a_set,
    central_pair,
    central_triple,
    ecc_k,
    ecc_kk,
    param_record,
    sd_k,
    sr_k,
    sr_k2_fast,
    sr_k3_fast,
    sr_kk_brute,
)
from .families import (
    BOUND_NAMES,
    FamilySpec,
    KINDS,
    bound_value,
    format_spec,
    generate,
    parse_spec,
    sd_k_formula,
    sr_kk_formula,
)
from .oracle import (
    Graph,
    brute_ecc_kk,
    brute_sd_k,
    brute_sr_kk,
    check_general_bounds,
    dw_steiner,
    random_connected_graph,
)
from .corpus import (
    canonical_code,
    enumerate_trees,
    graph6_decode,
    graph6_encode,
    tree_from_graph6,
)
from .verify import (
    Report,
    SUITE_NAMES,
    TOOLKIT_VERSION,
    Verdict,
    emit_report,
    hunt_conjecture,
    make_verdict,
    report_dict,
    run_suite,
)
from . import kernels

__version__ = TOOLKIT_VERSION

__all__ = [
    "ASet",
    "BOUND_NAMES",
    "BadK",
    "BadSpec",
    "BadVertex",
    "CenterProfile",
    "EmptySet",
    "FamilySpec",
    "Graph",
    "KINDS",
    "MalformedGraph6",
    "NotAGraph",
    "NotATree",
    "ParamRecord",
    "PreconditionError",
    "Report",
    "SUITE_NAMES",
    "SteinerKitError",
    "SteinerWitness",
    "TOOLKIT_VERSION",
    "TooLarge",
    "Tree",
    "UnknownSuite",
    "UnsupportedKind",
    "Verdict",
    "a_set",
    "as_vertex_set",
    "bound_value",
    "brute_ecc_kk",
    "brute_sd_k",
    "brute_sr_kk",
    "canonical_code",
    "center_profile",
    "central_pair",
    "central_triple",
    "check_general_bounds",
    "distance",
    "dw_steiner",
    "ecc_k",
    "ecc_kk",
    "eccentricity",
    "emit_report",
    "enumerate_trees",
    "format_spec",
    "generate",
    "graph6_decode",
    "graph6_encode",
    "hunt_conjecture",
    "kernels",
    "leaf_branch_length",
    "make_verdict",
    "param_record",
    "parse_spec",
    "random_connected_graph",
    "report_dict",
    "run_suite",
    "sd_k",
    "sd_k_formula",
    "sr_k",
    "sr_k2_fast",
    "sr_k3_fast",
    "sr_kk_brute",
    "sr_kk_formula",
    "steiner_distance",
    "tree_from_graph6",
    "validate",
    "__version__",
]
