"""Digraph kernel workbench: (k,l)-kernels, k-closures, chord conditions,
the 3-substitution method, and an empirical verification harness."""

from .digraph import (
    UNREACHABLE,
    Digraph,
    Distance,
    as_vertex_set,
    build_digraph,
    directed_cycle,
)
from .cycles import (
    Chord,
    Circuit,
    Cycle,
    CycleHypothesisVariant,
    HypothesisReport,
    are_consecutive,
    are_crossed,
    check_circuit_hypothesis,
    check_cycle_hypothesis,
    chords_of,
    enumerate_circuits,
    enumerate_cycles,
    every_cycle_has_symmetric_arc,
    is_short_chord,
)
from .kernels import (
    KERNEL,
    THREE_KERNEL,
    KernelQuery,
    KernelResult,
    find_kernel_via_closure,
    find_kl_kernel,
    is_3_kernel_perfect,
    is_k_independent,
    is_kernel_perfect,
    is_kl_kernel,
    is_l_absorbent,
    is_quasi_3_kernel_perfect,
    k_closure,
)
from .substitution import (
    MethodOutcome,
    Road,
    SubstitutionTrace,
    assemble_pre_3_kernel,
    build_substitution_sequence,
    check_additive_inverse_property,
    check_pre_kernel_properties,
    check_unique_short_chord,
    find_road,
    intermediate_sets,
    run_substitution_method,
    validate_road,
)
from .generators import (
    ClassSample,
    CircuitHypothesisPlusQuasi,
    DuchetHypothesis,
    SplitMix64,
    Thm2Hypothesis,
    enumerate_labeled_digraphs,
    random_digraph,
    random_strongly_connected,
    sample_hypothesis_class,
)
from .textio import (
    DigraphDocument,
    format_digraph_text,
    parse_digraph_text,
)
from .campaigns import CampaignParams, VerificationReport, run_campaign

__all__ = [name for name in dir() if not name.startswith("_")]
