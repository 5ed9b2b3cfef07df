"""wdlab: sector digraphs, Eulerian parity counts, and additive list coloring.

Build the derived sector digraph W(D) of any orientation D, count its even
and odd spanning Eulerian subdigraphs two independent ways, extract the
matching coefficients of the classical and additive orientation
polynomials, and use them to certify and construct additive list
colorings.
"""

from .coloring import (
    SweepReport,
    check_simplicial_sink_hypothesis,
    check_tripartite_hypothesis,
    conjecture_sweep,
    find_additive_coloring,
    induced_sums,
    is_additive_coloring,
)
from .errors import BoundExceededError, ParseError
from .eulerian import (
    EulerianCount,
    count_ee_eo_bruteforce,
    count_ee_eo_classic,
    count_ee_eo_wd,
    count_orientations_same_outdeg,
    count_orientations_same_outdeg_direct,
    enumerate_eulerian_spanning,
)
from .graphs import (
    Graph,
    Orientation,
    VertexPartition,
    enumerate_orientations,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_sun,
    is_bipartite,
    orientation_from_index,
    parse,
    simplicial_vertices,
    symmetric_difference_neighborhoods,
    to_text,
)
from .polynomials import (
    CappedPolynomial,
    LinearFactor,
    additive_coefficient,
    additive_factors,
    classical_coefficient,
    classical_factors,
    evaluate_additive,
    expand_capped,
    expand_full,
)
from .wd import (
    GammaPath,
    Sector,
    SectorX,
    SectorY,
    Star,
    WDigraph,
    all_gamma_paths,
    build_sector,
    build_wd,
    decompose_into_gamma_paths,
    gamma_path,
    gamma_paths_for_arc,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "CappedPolynomial",
    "EulerianCount",
    "GammaPath",
    "Graph",
    "LinearFactor",
    "Orientation",
    "ParseError",
    "Sector",
    "SectorX",
    "SectorY",
    "Star",
    "SweepReport",
    "VertexPartition",
    "WDigraph",
    "additive_coefficient",
    "additive_factors",
    "all_gamma_paths",
    "build_sector",
    "build_wd",
    "check_simplicial_sink_hypothesis",
    "check_tripartite_hypothesis",
    "classical_coefficient",
    "classical_factors",
    "conjecture_sweep",
    "count_ee_eo_bruteforce",
    "count_ee_eo_classic",
    "count_ee_eo_wd",
    "count_orientations_same_outdeg",
    "count_orientations_same_outdeg_direct",
    "decompose_into_gamma_paths",
    "enumerate_eulerian_spanning",
    "enumerate_orientations",
    "evaluate_additive",
    "expand_capped",
    "expand_full",
    "find_additive_coloring",
    "gamma_path",
    "gamma_paths_for_arc",
    "gen_complete",
    "gen_complete_bipartite",
    "gen_cycle",
    "gen_sun",
    "induced_sums",
    "is_additive_coloring",
    "is_bipartite",
    "orientation_from_index",
    "parse",
    "simplicial_vertices",
    "symmetric_difference_neighborhoods",
    "to_text",
]
