//! Named example structures used by the tests, the book and the CLI corpus.

use crate::algebroid::{Anchored, LSAlgebroid, Section};
use crate::constructions::BilinearForm;
use crate::polyring::{parse_poly, Poly, PolyMatrix, Ring, VectorField};

fn poly(ring: &Ring, s: &str) -> Poly {
    parse_poly(s, ring).expect("fixture polynomial")
}

fn section(ring: &Ring, comps: &[&str]) -> Section {
    Section::new(ring, comps.iter().map(|s| poly(ring, s)).collect()).expect("fixture section")
}

fn field(ring: &Ring, comps: &[&str]) -> VectorField {
    VectorField::new(ring, comps.iter().map(|s| poly(ring, s)).collect()).expect("fixture field")
}

/// A structure whose only nonzero frame products are listed.
fn sparse(
    ring: &Ring,
    r: usize,
    entries: &[(usize, usize, &[&str])],
    anchors: Vec<VectorField>,
) -> LSAlgebroid {
    let mut products = vec![vec![Section::zero(ring, r); r]; r];
    for &(i, j, comps) in entries {
        products[i][j] = section(ring, comps);
    }
    LSAlgebroid::new(ring, products, anchors).expect("fixture shape")
}

/// The flat torsion-free connection on ℝ²: A = Tℝ², c = 0, a = id.
pub fn flat_connection() -> LSAlgebroid {
    let ring = Ring::new(&["x", "y"]).expect("names");
    let anchors = vec![
        VectorField::coordinate(&ring, 0),
        VectorField::coordinate(&ring, 1),
    ];
    sparse(&ring, 2, &[], anchors)
}

/// The action of span{e}, e·e = e, on ℝ by x∂x.
pub fn action_instance() -> LSAlgebroid {
    let ring = Ring::new(&["x"]).expect("names");
    sparse(&ring, 1, &[(0, 0, &["1"])], vec![field(&ring, &["x"])])
}

/// Two-dimensional point algebra e1·e2 = e2.
pub fn point_e1e2() -> LSAlgebroid {
    let ring = Ring::point();
    sparse(
        &ring,
        2,
        &[(0, 1, &["0", "1"])],
        vec![VectorField::zero(&ring); 2],
    )
}

/// e1·e1 = e2, e2·e2 = e1: not left-symmetric.
pub fn non_example() -> LSAlgebroid {
    let ring = Ring::point();
    sparse(
        &ring,
        2,
        &[(0, 0, &["0", "1"]), (1, 1, &["1", "0"])],
        vec![VectorField::zero(&ring); 2],
    )
}

/// One-dimensional algebra e·e = e.
pub fn unit_algebra() -> LSAlgebroid {
    let ring = Ring::point();
    sparse(&ring, 1, &[(0, 0, &["1"])], vec![VectorField::zero(&ring)])
}

/// The zero algebra of dimension r.
pub fn zero_algebra(r: usize) -> LSAlgebroid {
    LSAlgebroid::zero(&Ring::point(), r)
}

/// Rank 2 over ℝ with a(e1) = ∂x, a(e2) = 0 and e1·e2 = x e2; span{e2} is
/// an ideal inside the kernel of the anchor.
pub fn kernel_ideal() -> LSAlgebroid {
    let ring = Ring::new(&["x"]).expect("names");
    sparse(
        &ring,
        2,
        &[(0, 1, &["0", "x"])],
        vec![VectorField::coordinate(&ring, 0), VectorField::zero(&ring)],
    )
}

/// The frame {e2} of the kernel for [`kernel_ideal`].
pub fn kernel_ideal_frame() -> Vec<Section> {
    let a = kernel_ideal();
    vec![a.basis(1)]
}

/// Identity form on the flat connection: a Riemannian instance.
pub fn flat_identity_form() -> BilinearForm {
    let a = flat_connection();
    BilinearForm::new(PolyMatrix::identity(a.ring(), 2)).expect("symmetric")
}

/// diag(1, −1) on the two-dimensional zero algebra: quadratic, indefinite.
pub fn zero_indefinite_form() -> BilinearForm {
    let ring = Ring::point();
    BilinearForm::new(PolyMatrix::diagonal(
        &ring,
        &[Poly::one(&ring), Poly::from_int(&ring, -1)],
    ))
    .expect("symmetric")
}

/// Every named instance that is left-symmetric, with its name.
pub fn valid_corpus() -> Vec<(&'static str, LSAlgebroid)> {
    vec![
        ("flat_connection", flat_connection()),
        ("action", action_instance()),
        ("point_e1e2", point_e1e2()),
        ("unit", unit_algebra()),
        ("zero_r1", zero_algebra(1)),
        ("zero_r2", zero_algebra(2)),
        ("kernel_ideal", kernel_ideal()),
    ]
}
