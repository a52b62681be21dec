"""Parity proofs of the Kochen-Specker theorem built from N-qubit Pauli observables.

The pipeline runs from observables proofs (:mod:`ksparity.proof`) through
their eigenprojectors and bases (:mod:`ksparity.projectors`) to
projectors-based parity proofs (:mod:`ksparity.parity`). The Kite family
lives in :mod:`ksparity.kite`, named fixtures in :mod:`ksparity.catalog`,
and a dense-matrix cross-check in :mod:`ksparity.oracle`.
"""

from __future__ import annotations

from .errors import KSError
from .parity import (
    ParityProof,
    classify,
    constructive_enumerate,
    count_parity_proofs,
    enumerate_parity_proofs,
    validate_parity_proof,
)
from .pauli import PauliObservable, SignedPauli, commutes, multiply, parse, product_sign
from .projectors import BasisSystem, basis_system, enumerate_bases, enumerate_projectors
from .proof import (
    ObservablesProof,
    assignment_search,
    check_critical,
    is_parity_proof,
    proof_symbol,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BasisSystem",
    "KSError",
    "ObservablesProof",
    "ParityProof",
    "PauliObservable",
    "SignedPauli",
    "assignment_search",
    "basis_system",
    "check_critical",
    "classify",
    "commutes",
    "constructive_enumerate",
    "count_parity_proofs",
    "enumerate_bases",
    "enumerate_parity_proofs",
    "enumerate_projectors",
    "is_parity_proof",
    "multiply",
    "parse",
    "product_sign",
    "proof_symbol",
    "validate",
    "validate_parity_proof",
]
