"""Exact combinatorial invariants of binomial edge ideals.

For a simple graph G on [n], the binomial edge ideal lives in a polynomial
ring with 2n variables and its quotient is governed by vertex cuts: separators
S, the components of G minus S, and the count difference c(S) - |S|.  This
package computes the derived invariants exactly (minimal primes, Krull
dimension, equidimensionality, Hilbert-Samuel and Hilbert-Kunz multiplicities,
toughness, vertex connectivity) and applies them as Cohen-Macaulayness
screeners over single graphs or whole corpora.
"""

from bei._kernel import BACKEND
from bei.connectivity import (
    ToughnessValue,
    is_l_vertex_connected,
    is_t_tough,
    toughness,
    vertex_connectivity,
    vertex_connectivity_bruteforce,
)
from bei.graphs import (
    Graph,
    GraphParseError,
    components,
    encode_graph6,
    is_chordal,
    is_complete,
    is_connected,
    maximal_cliques,
    parse_edge_list,
    parse_graph6,
    perfect_elimination_order,
)
from bei.invariants import (
    CM_CERTIFIED,
    INCONCLUSIVE,
    NOT_CM_CERTIFIED,
    CertRule,
    CutProfile,
    MinimalPrime,
    MultiplicityReport,
    ScreenVerdict,
    ViolationRule,
    chordal_cm_sufficient,
    cm_screen,
    depth_upper_bound,
    dim_bounds_from_toughness,
    hilbert_kunz,
    hilbert_samuel,
    is_disjoint_union_of_paths,
    is_equidimensional,
    joint_dim_with_empty,
    krull_dimension,
    max_cut_surplus,
    minimal_primes,
    multiplicities,
    one_tough_via_primes,
    pd_lower_bound,
    prime_dimension,
    top_cut_profiles,
    toughness_bounds_from_dimension,
)

__version__ = "0.1.0"
