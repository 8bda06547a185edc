"""Bijections from acyclic reorientations of an oriented matroid, and from the
regions of a real hyperplane arrangement, onto NBC subsets."""

from .bijection import (
    ContractViolation,
    OmPairState,
    enumerate_acyclic_reorientations,
    psi_backward,
    psi_backward_trace,
    psi_forward,
    psi_inverse_step,
    psi_step,
    psi_trace,
)
from .nbc import broken_circuits, enumerate_nbc, is_nbc
from .om import (
    Matroid,
    MalformedInputError,
    OrientedMatroid,
    SignedSubset,
    ValidationReport,
    contract_om,
    delete_om,
    is_acyclic,
    reorient,
    validate_matroid_axioms,
    validate_om_axioms,
)

__all__ = [
    "ContractViolation",
    "MalformedInputError",
    "Matroid",
    "OmPairState",
    "OrientedMatroid",
    "SignedSubset",
    "ValidationReport",
    "broken_circuits",
    "contract_om",
    "delete_om",
    "enumerate_acyclic_reorientations",
    "enumerate_nbc",
    "is_acyclic",
    "is_nbc",
    "psi_backward",
    "psi_backward_trace",
    "psi_forward",
    "psi_inverse_step",
    "psi_step",
    "psi_trace",
    "reorient",
    "validate_matroid_axioms",
    "validate_om_axioms",
]
