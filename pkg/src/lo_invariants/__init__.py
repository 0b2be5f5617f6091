"""Unitary (linear-optics) invariants of n-photon, m-mode Fock states."""

from .averaging import average_monomial, average_polynomial, is_invariant_numeric
from .fock import (Convention, FockState, SymmetricTensor, convert, enumerate_occupations,
                   fock_dim, norm_sq, state_to_tensor, tensor_to_state)
from .lo_action import (ModeUnitary, apply_phase, apply_unitary, random_exact_unitary,
                        random_haar_unitary, tensor_apply)
from .molien import (MolienSeries, molien_closed_form, molien_truncated, phase_molien_truncated,
                     phase_monomial_count)
from .phase_basis import ExponentPair, enumerate_balanced, hilbert_basis, verify_relation
from .poly import Monomial, Polynomial, norm_polynomial, parse_monomial, parse_polynomial
from .reach import ReachVerdict, Status, decide_reachability
from .tensor_inv import (ContractionPattern, build_generating_set, canonical_patterns,
                         expand_tensor_invariant, tensor_invariant)
from .two_photon import (char_poly_invariants, reachability_bruteforce_oracle,
                         two_photon_reachable)
from .weingarten import IndexProfile, haar_integral, weingarten

__version__ = "0.1.0"

__all__ = [
    "average_monomial",
    "average_polynomial",
    "is_invariant_numeric",
    "Convention",
    "FockState",
    "SymmetricTensor",
    "convert",
    "enumerate_occupations",
    "fock_dim",
    "norm_sq",
    "state_to_tensor",
    "tensor_to_state",
    "ModeUnitary",
    "apply_phase",
    "apply_unitary",
    "random_exact_unitary",
    "random_haar_unitary",
    "tensor_apply",
    "MolienSeries",
    "molien_closed_form",
    "molien_truncated",
    "phase_molien_truncated",
    "phase_monomial_count",
    "ExponentPair",
    "enumerate_balanced",
    "hilbert_basis",
    "verify_relation",
    "Monomial",
    "Polynomial",
    "norm_polynomial",
    "parse_monomial",
    "parse_polynomial",
    "ReachVerdict",
    "Status",
    "decide_reachability",
    "ContractionPattern",
    "build_generating_set",
    "canonical_patterns",
    "expand_tensor_invariant",
    "tensor_invariant",
    "char_poly_invariants",
    "reachability_bruteforce_oracle",
    "two_photon_reachable",
    "IndexProfile",
    "haar_integral",
    "weingarten",
]
