//! The representation complex C^•(A, E) and the deformation complex of
//! multiderivations, with cohomology dimensions in the point case.
//!
//! Degrees count arguments: a cochain of degree n eats n sections, is
//! skew in the first n − 1 and maps the n-th slot in the way its complex
//! prescribes.

mod def;
mod point;
mod rep;

pub use def::{def_d, def_d_apply, def_d_symbol_apply, random_multiderivation, MultiDerivation};
pub use point::{
    point_c0_basis, point_cohomology_dims, point_differential_matrix, DegreeDims, PointCohomology,
};
pub use rep::{
    check_c0, is_rep_coboundary, is_rep_cocycle, random_rep_cochain, rep_d, rep_d0, rep_d_apply,
    RepCochain,
};

/// Writes `xs` without the entries at `skip`, in order.
pub(crate) fn omit<T: Clone>(xs: &[T], skip: &[usize]) -> Vec<T> {
    xs.iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, x)| x.clone())
        .collect()
}

/// Sign (−1)^n as a bool flag (true = negative).
pub(crate) fn odd(n: usize) -> bool {
    n % 2 == 1
}
