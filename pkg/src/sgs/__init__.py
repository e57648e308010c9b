"""Spectral symmetry and sign-symmetry of small signed graphs."""

__version__ = "0.1.0"

from .errors import CapExceededError, NotAutomorphismError, NotConnectedError, SignedGraphError
from .graph import (SignedGraph, VertexPermutation, apply_permutation, negate, parse, serialize,
                    switch)
from .cycles import enumerate_two_regular, fundamental_cycles, spanning_tree
from .poly import (IntPolynomial, char_poly, is_spectrally_symmetric, matching_poly, odd_part,
                   sachs_coefficient)
from .spectral import eigenvalues, numeric_symmetry_check
from .symmetry import (SymmetryVerdict, automorphisms, classify, is_sign_symmetric,
                       is_weak_automorphism, spanning_cycle_criterion)
from .census import CensusReport, census, enumerate_signatures

__all__ = [
    "CapExceededError", "NotAutomorphismError", "NotConnectedError", "SignedGraphError",
    "SignedGraph", "VertexPermutation", "apply_permutation", "negate", "parse", "serialize", "switch",
    "enumerate_two_regular", "fundamental_cycles", "spanning_tree",
    "IntPolynomial", "char_poly", "is_spectrally_symmetric", "matching_poly", "odd_part", "sachs_coefficient",
    "eigenvalues", "numeric_symmetry_check",
    "SymmetryVerdict", "automorphisms", "classify", "is_sign_symmetric", "is_weak_automorphism",
    "spanning_cycle_criterion",
    "CensusReport", "census", "enumerate_signatures",
]
