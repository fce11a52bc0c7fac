"""Verification lab for dominating longest cycles in small graphs."""

from .canon import CanonicalForm, canonical_form, canonical_graph, is_isomorphic
from .cycles import (Cycle, Path, all_longest_cycles, classical_predicates, is_dominating,
                     is_hamiltonian, longest_cycle_length, longest_path_in_remainder)
from .enumerate import EnumSpec, enumerate_graphs
from .graph import (Graph, GraphError, VertexSet, build, complete, copies, disjoint_union, empty,
                    join, vertex_connectivity, witness8)
from .graph6 import Graph6Error, emit, parse, stream
from .segments import (LemmaVerdict, check_lemma1, check_lemma2, check_lemma3, check_lemma4,
                       decompose, intermediate_paths)
from .verify import (VerificationReport, lemma_sweep, q_max, sharpness_gallery, tightness_search,
                     verify_theorem1)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm", "canonical_form", "canonical_graph", "is_isomorphic",
    "Cycle", "Path", "all_longest_cycles", "classical_predicates", "is_dominating",
    "is_hamiltonian", "longest_cycle_length", "longest_path_in_remainder",
    "EnumSpec", "enumerate_graphs",
    "Graph", "GraphError", "VertexSet", "build", "complete", "copies", "disjoint_union", "empty",
    "join", "vertex_connectivity", "witness8",
    "Graph6Error", "emit", "parse", "stream",
    "LemmaVerdict", "check_lemma1", "check_lemma2", "check_lemma3", "check_lemma4",
    "decompose", "intermediate_paths",
    "VerificationReport", "lemma_sweep", "q_max", "sharpness_gallery", "tightness_search",
    "verify_theorem1",
]
