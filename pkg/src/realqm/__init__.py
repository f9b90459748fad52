"""Quantum mechanics over the reals.

Complex states and operators are carried by a doubled real space where
multiplication by i becomes an explicit antisymmetric matrix J.  The
package provides the translation itself, the superselection audit that
separates physical (J-commuting) operators from anti-linear intruders,
real-form dynamics with an independent complex cross-check, interferometer
composites, the entanglement cost of the doubling, and indefinite-metric
toys with ghost emission.
"""

from .dynamics import (
    TrajectoryRecord,
    basis_probabilities,
    larmor_experiment,
    matrix_exp,
    oracle_complex_propagate,
    pauli_hamiltonian,
    propagate_exact,
    propagate_rk4,
    real_generator,
    relative_phase,
)
from .entanglement import (
    ConditionalDecomposition,
    EntanglementClass,
    EntanglementReport,
    classify_entanglement,
    conditional_decomposition,
    coupling_commutation_check,
    coupling_generator,
    coupling_propagator,
    encode_global,
    encode_local,
    entanglement_entropy,
    reduced_density_first,
)
from .indefinite_metric import (
    FockToy,
    IndefiniteSpace,
    boost_normalize,
    build_fock_toy,
    eta_inner,
    fock_basis_state,
    gb_constraint_residual,
    ghost_emit,
    guard_projector,
    indefinite_qubit,
    metric_adjoint,
    overlap_invariance_check,
    pair_constraint_operator,
    pair_constraint_residual,
    two_qubit_pair_space,
    vacuum,
)
from .interferometer import (
    OpticalElement,
    beamsplitter,
    mach_zehnder,
    mach_zehnder_with_phase,
    mirror,
    phase_shifter,
)
from .realmap import (
    J2,
    complexify_op,
    complexify_state,
    j_operator,
    random_unitary,
    realify_op,
    realify_state,
    scalar_action,
)
from .superselection import (
    AuditReport,
    Verdict,
    antilinear_part,
    audit,
    commutant_basis,
    conjugation_op,
    linear_part,
    universal_not,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "ConditionalDecomposition",
    "EntanglementClass",
    "EntanglementReport",
    "FockToy",
    "IndefiniteSpace",
    "J2",
    "OpticalElement",
    "TrajectoryRecord",
    "Verdict",
    "antilinear_part",
    "audit",
    "basis_probabilities",
    "beamsplitter",
    "boost_normalize",
    "build_fock_toy",
    "classify_entanglement",
    "commutant_basis",
    "complexify_op",
    "complexify_state",
    "conditional_decomposition",
    "conjugation_op",
    "coupling_commutation_check",
    "coupling_generator",
    "coupling_propagator",
    "encode_global",
    "encode_local",
    "entanglement_entropy",
    "eta_inner",
    "fock_basis_state",
    "gb_constraint_residual",
    "ghost_emit",
    "guard_projector",
    "indefinite_qubit",
    "j_operator",
    "larmor_experiment",
    "linear_part",
    "mach_zehnder",
    "mach_zehnder_with_phase",
    "matrix_exp",
    "metric_adjoint",
    "mirror",
    "oracle_complex_propagate",
    "overlap_invariance_check",
    "pair_constraint_operator",
    "pair_constraint_residual",
    "pauli_hamiltonian",
    "phase_shifter",
    "propagate_exact",
    "propagate_rk4",
    "random_unitary",
    "real_generator",
    "realify_op",
    "realify_state",
    "reduced_density_first",
    "relative_phase",
    "scalar_action",
    "two_qubit_pair_space",
    "universal_not",
    "vacuum",
]
