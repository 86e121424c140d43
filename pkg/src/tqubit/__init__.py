"""Topological qubit toolkit: bracket evaluation, braid matrices, and recovery protocols."""

from .diagrams import (
    LinkDiagram,
    Matching,
    TangleDiagram,
    braid_closure,
    braid_tangle,
    catalan_dim,
    tl_generator,
    tl_identity,
    tl_multiply,
)
from .bracket import (
    bracket_of_tangle_pairing,
    expand_tangle,
    kauffman_bracket,
    state_sum_bracket,
)
from .laurent import LOOP, LaurentPoly
from .qubit import ChernSimonsParams, gram_matrix, hat_to_on, on_to_hat, wire_state
from .rep import (
    braid_generator_matrix,
    braid_r_matrix,
    markov_trace,
    pseudounitary_conjugate,
    tl_e_matrix,
)
from .protocols import (
    apply_recovery,
    encode_four_spin,
    encode_stochastic,
    measure_top_bottom,
    recover_after_00,
    recovery_unitary,
    schmidt_rank,
    success_probability,
)

__version__ = "0.1.0"

__all__ = [
    "LOOP",
    "ChernSimonsParams",
    "LaurentPoly",
    "LinkDiagram",
    "Matching",
    "TangleDiagram",
    "apply_recovery",
    "bracket_of_tangle_pairing",
    "braid_closure",
    "braid_generator_matrix",
    "braid_r_matrix",
    "braid_tangle",
    "catalan_dim",
    "encode_four_spin",
    "encode_stochastic",
    "expand_tangle",
    "gram_matrix",
    "hat_to_on",
    "kauffman_bracket",
    "markov_trace",
    "measure_top_bottom",
    "on_to_hat",
    "pseudounitary_conjugate",
    "recover_after_00",
    "recovery_unitary",
    "schmidt_rank",
    "state_sum_bracket",
    "success_probability",
    "tl_e_matrix",
    "tl_generator",
    "tl_identity",
    "tl_multiply",
    "wire_state",
]
