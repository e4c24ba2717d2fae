"""Exact verification toolkit for path hypergraphs of finite graphs.

Builds the t-path hypergraph of a graph and decides, with exact rational
arithmetic throughout, the chain of covering properties: Konig, packing,
idealness of the covering polyhedron, total unimodularity of the
incidence matrix, and the Mengerian property itself.
"""

from .clutters import (
    Clutter,
    MengerianProbe,
    Minor,
    contract,
    delete,
    duplicate,
    has_konig,
    has_packing,
    incidence_matrix,
    max_integer_packing,
    mengerian_bounded,
    minimal_covers,
    minimalize,
    minor,
    minors,
    nu,
    tau,
    unit_clutter,
    weighted_cover_min,
)
from .graphs import (
    Graph,
    build_path_hypergraph,
    canonical_form,
    graph,
    is_connected,
    make_family,
    parse_edge_list,
    parse_graph6,
    to_dot,
    to_graph6,
)
from .ideals import (
    MonomialIdeal,
    NtfResult,
    PowerEquality,
    edge_ideal,
    intersect,
    is_normally_torsion_free,
    member_of_power,
    power,
    powers_equal,
    prime_power,
    symbolic_power,
)
from .linalg import (
    IdealityResult,
    Matrix,
    PolyhedronVertex,
    TUResult,
    TUWitness,
    covering_polyhedron_vertices,
    is_ideal,
    is_totally_unimodular,
    solve,
    verify_vertex,
)
from .classify import (
    Caps,
    CapExceeded,
    ClassVerdict,
    DecisionReport,
    classify_mengerian,
    decide_mengerian_exact,
    is_path_with_double_stars,
    is_star_plus_edge,
)
from .survey import SurveyReport, cross_check, enumerate_connected

__version__ = "0.1.0"
