"""Noncrossing bond posets of graphs drawn on a circle.

Vertices ``1..n`` sit on a circle in order and edges are straight chords.
A bond is noncrossing when no two of its components have crossing chords;
the noncrossing bonds, ordered by inclusion, form the poset studied here.
"""

from .graph import (
    Edge,
    Graph,
    GraphError,
    SetPartition,
    colex_order,
    edges_cross,
    is_chordal,
    is_noncrossing_partition,
    is_perfectly_labeled,
    lex_order,
    parse_edge_list,
    read_edge_list,
    separates,
)
from .corpus import corpus, corpus_names, fixed_graphs, parse_corpus_spec
from .bonds import (
    Bond,
    SizeLimitError,
    bond_closure,
    bond_of_partition,
    enumerate_bonds,
    enumerate_noncrossing_bonds,
    is_noncrossing_bond,
)
from .polynomial import Polynomial, has_internal_zero
from .poset import (
    FinitePoset,
    NotALattice,
    NotGraded,
    bond_lattice,
    characteristic_polynomial,
    grading,
    is_lattice,
    join,
    meet,
    mobius,
    nc_poset,
    to_dot,
)
from .closure import (
    compute_J,
    distance_ordering,
    has_one_hat,
    is_crossing_closed,
    is_obstruction,
    is_strongly_upper_crossed,
    is_tightly_closed,
    strongly_upper_crossed_ordering,
    upper_crossing_closed,
    verify_ucc_ordering,
)
from .labelings import (
    decreasing_chain_count,
    decreasing_chains,
    is_el_labeling,
    is_sn_el_labeling,
    maxmin_labeling,
    min_label_nc_hypothesis,
    minimum_labeling,
)
from .nbc import (
    broken_circuits,
    chromatic_polynomial,
    increasing_spanning_forests,
    nbb_sets,
    nbc_counts,
    nbc_sets,
    ncnbc_counts,
    ncnbc_sets,
    spanning_nbc_sets,
)

__version__ = "0.1.0"
