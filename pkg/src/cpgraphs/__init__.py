"""Contraction-perfect graphs: certificate-producing recognition, the utter
graph construction, and exact maximum-weight co-2-plex optimization."""

from .certificates import (
    EXPANDED_ANTIHOLE,
    HOLE,
    ODD_ANTIHOLE,
    Certificate,
    certificate_from_json,
    certificate_to_json,
    validate_certificate,
)
from .detectors import (
    chromatic_number,
    clique_number,
    find_expanded_antihole,
    find_expanded_antihole_involving,
    find_hole_at_least,
    find_odd_antihole,
    find_odd_hole,
    is_perfect,
    perfection_certificate,
)
from .enumeration import all_graphs, are_isomorphic, connected_graphs
from .families import (
    FamilySpec,
    antihole,
    antipath,
    clique,
    expanded_antihole,
    generate,
    hole,
    is_chordal,
    is_k_hole_free,
    is_split,
    is_trivially_perfect,
    path,
    random_chordal,
    random_graph,
    random_split,
    random_trivially_perfect,
)
from .graph import (
    DEFAULT_VERTEX_CAP,
    Edge,
    EdgeSet,
    Graph,
    GraphError,
    VertexCapExceeded,
    add_twin,
    complement,
    connected_components,
    contract_edge,
    contract_set,
    induced_subgraph,
    is_stable_set,
    set_vertex_cap,
    vertex_cap,
)
from .intervals import (
    IntervalSet,
    check_parity_lemma,
    interval_graph,
    is_odd_intersection,
    merge_intersecting,
    nested_interval_set,
    random_odd_intersection_set,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .recognition import (
    InvariantViolation,
    NotPerfectError,
    Verdict,
    diagnose_edge,
    is_contraction_perfect,
    is_contraction_perfect_forbidden,
    is_contraction_perfect_single_edge,
    is_minimally_non_cp,
    recognize_both,
)
from .utter import (
    Co2Plex,
    UtterGraph,
    WeightedGraph,
    all_co2plexes,
    all_stable_sets,
    brute_force_co2plex,
    co2plex_to_stable,
    is_co2plex,
    lift_weights,
    max_weight_co2plex,
    max_weight_stable_set,
    stable_to_co2plex,
    utter,
)

__version__ = "0.1.0"
