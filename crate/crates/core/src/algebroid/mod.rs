//! Left-symmetric and Lie algebroids on trivial bundles over an affine chart.
//!
//! A structure is stored through its values on the constant frame
//! `e_1, …, e_r`: the products (or brackets) of frame sections and the
//! anchor of each frame section. Everything else is recovered from the
//! Leibniz rules.

mod form;
mod lie;
mod lsa;
mod section;

pub(crate) use form::sort_with_sign;
pub use form::{increasing_tuples, lie_form_d, FormCochain};
pub use lie::LieAlgebroid;
pub use lsa::{check_lie_admissible, check_lsa_homomorphism, lsa_homomorphism_report, LSAlgebroid};
pub use section::Section;

use crate::polyring::{Poly, Ring, VectorField};

/// Shared view of anything with a frame and an anchor.
pub trait Anchored {
    fn ring(&self) -> &Ring;
    fn anchors(&self) -> &[VectorField];

    fn rank(&self) -> usize {
        self.anchors().len()
    }

    fn anchor(&self, i: usize) -> &VectorField {
        &self.anchors()[i]
    }

    /// The anchor of an arbitrary section, Σ x_i a(e_i).
    fn anchor_of(&self, x: &Section) -> VectorField {
        let mut out = VectorField::zero(self.ring());
        for (xi, ai) in x.comps().iter().zip(self.anchors()) {
            if !xi.is_zero() && !ai.is_zero() {
                out = out.add(&ai.scale(xi));
            }
        }
        out
    }

    /// a(x)(f).
    fn anchor_apply(&self, x: &Section, f: &Poly) -> Poly {
        self.anchor_of(x).act(f)
    }
}

pub(crate) fn frame_label(indices: &[usize]) -> String {
    let parts: Vec<String> = indices.iter().map(|i| format!("e{}", i + 1)).collect();
    format!("({})", parts.join(","))
}
