use std::fmt;

use super::{frame_label, Anchored, LieAlgebroid, Section};
use crate::error::{Error, Result};
use crate::polyring::{PolyMatrix, Ring, VectorField};
use crate::report::{CheckRecord, Report};
use crate::representation::Representation;

/// A left-symmetric algebroid on the trivial rank-`r` bundle.
///
/// `products[i][j]` is `e_i · e_j`; `anchors[i]` is `a(e_i)`.
#[derive(Clone, PartialEq, Eq)]
pub struct LSAlgebroid {
    ring: Ring,
    products: Vec<Vec<Section>>,
    anchors: Vec<VectorField>,
}

pub(crate) fn validate_table(
    ring: &Ring,
    table: &[Vec<Section>],
    anchors: &[VectorField],
) -> Result<()> {
    let r = anchors.len();
    if table.len() != r {
        return Err(Error::DimensionMismatch(format!(
            "structure table has {} rows for rank {r}",
            table.len()
        )));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != r {
            return Err(Error::DimensionMismatch(format!(
                "structure row {} has {} entries for rank {r}",
                i + 1,
                row.len()
            )));
        }
        for s in row {
            if s.rank() != r {
                return Err(Error::DimensionMismatch(format!(
                    "structure section of rank {} for rank {r}",
                    s.rank()
                )));
            }
            if s.ring() != ring {
                return Err(Error::DimensionMismatch(
                    "structure section over another ring".into(),
                ));
            }
        }
    }
    if anchors.iter().any(|a| a.ring() != ring) {
        return Err(Error::DimensionMismatch("anchor over another ring".into()));
    }
    Ok(())
}

impl LSAlgebroid {
    pub fn new(
        ring: &Ring,
        products: Vec<Vec<Section>>,
        anchors: Vec<VectorField>,
    ) -> Result<Self> {
        validate_table(ring, &products, &anchors)?;
        Ok(LSAlgebroid {
            ring: ring.clone(),
            products,
            anchors,
        })
    }

    /// Zero product and zero anchor.
    pub fn zero(ring: &Ring, rank: usize) -> Self {
        LSAlgebroid {
            ring: ring.clone(),
            products: vec![vec![Section::zero(ring, rank); rank]; rank],
            anchors: vec![VectorField::zero(ring); rank],
        }
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn product(&self, i: usize, j: usize) -> &Section {
        &self.products[i][j]
    }

    pub fn products(&self) -> &[Vec<Section>] {
        &self.products
    }

    pub fn basis(&self, i: usize) -> Section {
        Section::basis(&self.ring, self.rank(), i)
    }

    /// e_i · y.
    pub fn frame_mult(&self, i: usize, y: &Section) -> Section {
        let mut out = y
            .apply_field(&self.anchors[i])
            .expect("ring checked at construction");
        for (j, g) in y.comps().iter().enumerate() {
            out.add_scaled(g, &self.products[i][j]);
        }
        out
    }

    /// x · e_j.
    pub fn mult_frame(&self, x: &Section, j: usize) -> Section {
        let mut out = Section::zero(&self.ring, self.rank());
        for (i, f) in x.comps().iter().enumerate() {
            out.add_scaled(f, &self.products[i][j]);
        }
        out
    }

    /// X · Y = Σ f_i g_j c_ij + Σ f_i a(e_i)(g_j) e_j.
    ///
    /// Panics if the sections do not belong to this bundle; see
    /// [`LSAlgebroid::section_mult`] for the checked form.
    pub fn mult(&self, x: &Section, y: &Section) -> Section {
        assert_eq!(x.rank(), self.rank(), "left factor has the wrong rank");
        assert_eq!(y.rank(), self.rank(), "right factor has the wrong rank");
        let mut out = Section::zero(&self.ring, self.rank());
        for (i, f) in x.comps().iter().enumerate() {
            if !f.is_zero() {
                out.add_scaled(f, &self.frame_mult(i, y));
            }
        }
        out
    }

    pub fn section_mult(&self, x: &Section, y: &Section) -> Result<Section> {
        for s in [x, y] {
            if s.rank() != self.rank() || s.ring() != &self.ring {
                return Err(Error::DimensionMismatch(format!(
                    "section of rank {} for a bundle of rank {}",
                    s.rank(),
                    self.rank()
                )));
            }
        }
        Ok(self.mult(x, y))
    }

    /// (x,y,z) = (x·y)·z − x·(y·z).
    pub fn associator(&self, x: &Section, y: &Section, z: &Section) -> Section {
        self.mult(&self.mult(x, y), z)
            .sub(&self.mult(x, &self.mult(y, z)))
    }

    fn frame_associator(&self, i: usize, j: usize, k: usize) -> Section {
        let lhs = self.mult_frame(&self.products[i][j], k);
        let rhs = self.frame_mult(i, &self.products[j][k]);
        lhs.sub(&rhs)
    }

    /// c_ij − c_ji.
    pub fn commutator(&self, i: usize, j: usize) -> Section {
        self.products[i][j].sub(&self.products[j][i])
    }

    /// Associator symmetry on frame triples plus the anchor identity
    /// a([e_i,e_j]) = [a(e_i), a(e_j)].
    pub fn check_left_symmetric(&self) -> Report {
        let r = self.rank();
        let mut assoc = CheckRecord::new(
            "left-symmetry",
            "associator symmetric in its first two arguments",
        );
        for i in 0..r {
            for j in (i + 1)..r {
                for k in 0..r {
                    let lhs = self.frame_associator(i, j, k);
                    let rhs = self.frame_associator(j, i, k);
                    assoc.expect_eq(
                        format!("{} = {}", frame_label(&[i, j, k]), frame_label(&[j, i, k])),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
        let mut anchor = CheckRecord::new(
            "anchor-morphism",
            "anchor maps the commutator to the vector field bracket",
        );
        self.anchor_morphism_into(&mut anchor, |i, j| self.commutator(i, j));
        let mut report = Report::single(assoc);
        report.push(anchor);
        report
    }

    pub(crate) fn anchor_morphism_into(
        &self,
        rec: &mut CheckRecord,
        bracket: impl Fn(usize, usize) -> Section,
    ) {
        check_anchor_morphism(self, rec, bracket);
    }

    pub fn is_left_symmetric(&self) -> bool {
        self.check_left_symmetric().passed()
    }

    pub(crate) fn require_left_symmetric(&self) -> Result<()> {
        let report = self.check_left_symmetric();
        if report.passed() {
            Ok(())
        } else {
            Err(Error::NotLeftSymmetric(report.failure_summary()))
        }
    }

    /// The commutator Lie algebroid, without validating the input.
    pub fn commutator_algebroid(&self) -> LieAlgebroid {
        let r = self.rank();
        let brackets = (0..r)
            .map(|i| (0..r).map(|j| self.commutator(i, j)).collect())
            .collect();
        LieAlgebroid::new(&self.ring, brackets, self.anchors.clone()).expect("shape inherited")
    }

    /// The sub-adjacent Lie algebroid G(A).
    pub fn sub_adjacent(&self) -> Result<LieAlgebroid> {
        self.require_left_symmetric()?;
        Ok(self.commutator_algebroid())
    }

    /// Matrix of L_{e_i} on the frame: column j holds e_i · e_j.
    pub fn left_mult_matrix(&self, i: usize) -> PolyMatrix {
        let cols: Vec<Vec<_>> = self.products[i]
            .iter()
            .map(|s| s.comps().to_vec())
            .collect();
        PolyMatrix::from_columns(&self.ring, self.rank(), &cols).expect("square by construction")
    }

    /// Matrix of R_{e_i}: column j holds e_j · e_i.
    pub fn right_mult_matrix(&self, i: usize) -> PolyMatrix {
        let cols: Vec<Vec<_>> = (0..self.rank())
            .map(|j| self.products[j][i].comps().to_vec())
            .collect();
        PolyMatrix::from_columns(&self.ring, self.rank(), &cols).expect("square by construction")
    }

    /// The representation x ↦ L_x of G(A) on A, with μ = 0.
    pub fn build_left_mult_rep(&self) -> Result<Representation> {
        self.require_left_symmetric()?;
        Ok(self.left_mult_rep_unchecked())
    }

    pub(crate) fn left_mult_rep_unchecked(&self) -> Representation {
        let r = self.rank();
        let rho = (0..r).map(|i| self.left_mult_matrix(i)).collect();
        Representation::new(
            &self.ring,
            self.rank(),
            r,
            rho,
            vec![PolyMatrix::zero(&self.ring, r, r); r],
        )
        .expect("shape by construction")
    }

    /// Same structure over a larger ring whose coordinates extend this one.
    pub fn embed(&self, target: &Ring) -> Result<LSAlgebroid> {
        let products = self
            .products
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| s.embed(target))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let anchors = self
            .anchors
            .iter()
            .map(|a| a.embed(target))
            .collect::<Result<Vec<_>>>()?;
        LSAlgebroid::new(target, products, anchors)
    }
}

pub(crate) fn check_anchor_morphism<A: Anchored + ?Sized>(
    algebroid: &A,
    rec: &mut CheckRecord,
    bracket: impl Fn(usize, usize) -> Section,
) {
    let r = algebroid.rank();
    for i in 0..r {
        for j in (i + 1)..r {
            let lhs = algebroid.anchor_of(&bracket(i, j));
            let rhs = algebroid
                .anchor(i)
                .bracket(algebroid.anchor(j))
                .expect("same ring");
            rec.expect_eq(
                format!("a([e{},e{}]) = [a(e{}),a(e{})]", i + 1, j + 1, i + 1, j + 1),
                &lhs,
                &rhs,
            );
        }
    }
}

impl Anchored for LSAlgebroid {
    fn ring(&self) -> &Ring {
        &self.ring
    }

    fn anchors(&self) -> &[VectorField] {
        &self.anchors
    }
}

impl fmt::Debug for LSAlgebroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LSAlgebroid over {:?}, rank {}", self.ring, self.rank())?;
        for (i, row) in self.products.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                if !s.is_zero() {
                    writeln!(f, "  e{}·e{} = {s}", i + 1, j + 1)?;
                }
            }
        }
        for (i, a) in self.anchors.iter().enumerate() {
            if !a.is_zero() {
                writeln!(f, "  a(e{}) = {a}", i + 1)?;
            }
        }
        Ok(())
    }
}

/// Lie-admissibility of a left-symmetric point algebra: the six-term
/// associator sum vanishes on all basis triples.
pub fn check_lie_admissible(a: &LSAlgebroid) -> Result<bool> {
    if a.nvars() != 0 {
        return Err(Error::NotPointCase);
    }
    let r = a.rank();
    let e: Vec<Section> = (0..r).map(|i| a.basis(i)).collect();
    for x in &e {
        for y in &e {
            for z in &e {
                let mut sum = a.associator(x, y, z);
                sum.sub_assign(&a.associator(y, x, z));
                sum.add_assign(&a.associator(y, z, x));
                sum.sub_assign(&a.associator(z, y, x));
                sum.add_assign(&a.associator(z, x, y));
                sum.sub_assign(&a.associator(x, z, y));
                if !sum.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Homomorphism conditions for a bundle map φ: A1 → A2 (an r2×r1 matrix).
pub fn lsa_homomorphism_report(
    a1: &LSAlgebroid,
    a2: &LSAlgebroid,
    phi: &PolyMatrix,
) -> Result<Report> {
    if a1.ring() != a2.ring() || phi.ring() != a1.ring() {
        return Err(Error::DimensionMismatch(
            "algebroids and map must share the base coordinates".into(),
        ));
    }
    if phi.rows() != a2.rank() || phi.cols() != a1.rank() {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, expected {}x{}",
            phi.rows(),
            phi.cols(),
            a2.rank(),
            a1.rank()
        )));
    }
    let r1 = a1.rank();
    let images: Vec<Section> = (0..r1).map(|i| a1.basis(i).transform(phi)).collect();
    let mut mult = CheckRecord::new("homomorphism-product", "φ(x·y) = φ(x)·φ(y)");
    for i in 0..r1 {
        for j in 0..r1 {
            let lhs = a1.product(i, j).transform(phi);
            let rhs = a2.mult(&images[i], &images[j]);
            mult.expect_eq(
                format!("φ(e{}·e{}) = φ(e{})·φ(e{})", i + 1, j + 1, i + 1, j + 1),
                &lhs,
                &rhs,
            );
        }
    }
    let mut anchor = CheckRecord::new("homomorphism-anchor", "a2∘φ = a1");
    for (i, img) in images.iter().enumerate() {
        anchor.expect_eq(
            format!("a2(φ(e{})) = a1(e{})", i + 1, i + 1),
            &a2.anchor_of(img),
            a1.anchor(i),
        );
    }
    let mut report = Report::single(mult);
    report.push(anchor);
    Ok(report)
}

pub fn check_lsa_homomorphism(
    a1: &LSAlgebroid,
    a2: &LSAlgebroid,
    phi: &PolyMatrix,
) -> Result<bool> {
    Ok(lsa_homomorphism_report(a1, a2, phi)?.passed())
}
