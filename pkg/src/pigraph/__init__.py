"""Simple-triangle (PI) graph recognition with certificates and oracles.

The pipeline orients the complement transitively, extracts a partial
alternating orientation through a pair graph and a 2CNF, repairs
directed triangles vertex by vertex, and reads the apex ordering off a
topological sort.  Every rejection carries a machine-checkable witness,
and the oracle module re-derives all of it by brute force at small
sizes.
"""
from .graph import (
    ChordlessC4,
    CycleFound,
    Graph,
    PartialOrientation,
    chordless_c4s,
    complement,
    reversal,
    three_paths,
    topological_sort,
)
from .transitive import (
    ForcingConflict,
    NotComparability,
    NotCocomparability,
    UmbrellaViolation,
    cocomparability_orient,
    comparability_orient,
    verify_transitive_extension,
)
from .alternating import (
    AuxiliaryGraph,
    NotAlternatelyOrientable,
    OddCycle,
    TwoCnf,
    Unsatisfiable,
    alternating_orientation_of_cocomp,
    bipartition,
    build_auxiliary_graph,
    build_phi,
    extract_F,
    solve_2sat,
)
from .apex import (
    AUX_NOT_BIPARTITE,
    NOT_COCOMPARABILITY,
    PHI_UNSAT,
    C4AlternationViolation,
    PhiUnsatWitness,
    Rejection,
    recognize,
    step3_fixup,
    verify_apex_ordering,
)
from .oracle import (
    InputTooLarge,
    brute_force_acyclic_alternating,
    brute_force_nonbetweenness,
    brute_force_recognize,
    find_4_anticycles,
    find_alternating_cycles,
    find_delta_obstructions,
    induced_cycles,
    is_apex_ordering_brute,
)
from .generate import (
    NonBetweennessInstance,
    TriangleRepresentation,
    nonbetweenness_to_graph,
    random_nonbetweenness,
    random_representation,
    representation_to_graph,
)
from .prng import XorShift64Star

__all__ = [
    "AUX_NOT_BIPARTITE",
    "AuxiliaryGraph",
    "C4AlternationViolation",
    "ChordlessC4",
    "CycleFound",
    "ForcingConflict",
    "Graph",
    "InputTooLarge",
    "NOT_COCOMPARABILITY",
    "NonBetweennessInstance",
    "NotAlternatelyOrientable",
    "NotComparability",
    "NotCocomparability",
    "OddCycle",
    "PHI_UNSAT",
    "PartialOrientation",
    "PhiUnsatWitness",
    "Rejection",
    "TriangleRepresentation",
    "TwoCnf",
    "UmbrellaViolation",
    "Unsatisfiable",
    "XorShift64Star",
    "alternating_orientation_of_cocomp",
    "bipartition",
    "brute_force_acyclic_alternating",
    "brute_force_nonbetweenness",
    "brute_force_recognize",
    "build_auxiliary_graph",
    "build_phi",
    "chordless_c4s",
    "cocomparability_orient",
    "comparability_orient",
    "complement",
    "extract_F",
    "find_4_anticycles",
    "find_alternating_cycles",
    "find_delta_obstructions",
    "induced_cycles",
    "is_apex_ordering_brute",
    "nonbetweenness_to_graph",
    "random_nonbetweenness",
    "random_representation",
    "recognize",
    "representation_to_graph",
    "reversal",
    "solve_2sat",
    "step3_fixup",
    "three_paths",
    "topological_sort",
    "verify_apex_ordering",
    "verify_transitive_extension",
]
