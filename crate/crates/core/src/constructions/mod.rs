//! Structures built from or on top of left-symmetric and Lie algebroids.

mod derive;
mod phase;
mod reps;
mod structures;

pub use derive::{
    action_algebroid, apply_o_operator, induced_structure, o_operator_lift, o_operator_lift_report,
    semidirect_lie, semidirect_lsa, OOperator,
};
pub use phase::{
    build_complex_structure, build_phase_space, canonical_omega, canonical_omega_matrix,
    canonical_paracomplex, lsa_from_phase, phase_iso_from_lsa_iso, ComplexStructure, PhaseIso,
    PhaseLsa, PhaseSpace,
};
pub use reps::{
    check_representation_lie, check_representation_lsa, derived_reps, dual_rep,
    kernel_representations, left_right_candidate, mu_commutes, representation_lie_report,
    representation_lsa_report, DerivedReps,
};
pub use structures::{
    check_complex, check_lie_nijenhuis, check_paracomplex, check_quadratic, complex_report,
    lie_nijenhuis_report, paracomplex_report, quadratic_kernel_descend, quadratic_report,
    BilinearForm,
};
