"""Digraph acyclic homomorphisms, circular chromatic numbers, and
randomized large-girth witness construction."""

from ._kernel import USING_COMPILED
from .digraph import (
    INFINITE,
    Digraph,
    DigraphFormatError,
    automorphisms,
    canonical_cycle,
    find_cycle,
    girth,
    induced,
    is_acyclic,
    is_acyclic_sink_set,
    parse_digraph,
    short_cycles,
    to_dot,
    write_digraph,
)
from .hom import (
    BadArc,
    CyclicFiber,
    Homomorphism,
    HomVerdict,
    check_acyclic_hom,
    core_witness,
    hom_from_json,
    hom_to_json,
    is_colourable,
    is_core,
    is_uniquely_colourable,
    iter_hom_maps,
    solve_hom,
)
from .circular import (
    ChiCapError,
    ChiCResult,
    CircularColouring,
    chi_c,
    clockwise_distance,
    gen_ckd,
    has_tight_cycle,
    kd_colouring_to_circular,
    quotient_hom,
    tight_arcs,
    validate_circular,
)
from .construct import (
    BlowUp,
    ConstructParams,
    RepairError,
    VerificationReport,
    Witness,
    WitnessSearchError,
    blowup,
    ceil_rational_power,
    construct_witness,
    derive_seed,
    double_cycles,
    in_d1,
    in_d3,
    sample,
    sample_subdigraph,
    short_cycle_repair,
    verify_witness,
    witness_from_json,
    witness_to_json,
)
from .bounds import (
    BoundReport,
    CycleCountReport,
    bad_pair_bound,
    double_cycle_bound,
    expected_cycles_bound,
    mc_cycle_count,
    mc_estimate_pl,
    pl_template,
)

__version__ = "0.1.0"
