use std::fmt;

use super::lsa::{check_anchor_morphism, validate_table};
use super::{Anchored, Section};
use crate::error::Result;
use crate::polyring::{PolyMatrix, Ring, VectorField};
use crate::report::{CheckRecord, Report};

/// A Lie algebroid on the trivial rank-`r` bundle, `brackets[i][j] = [e_i, e_j]`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebroid {
    ring: Ring,
    brackets: Vec<Vec<Section>>,
    anchors: Vec<VectorField>,
}

impl LieAlgebroid {
    pub fn new(
        ring: &Ring,
        brackets: Vec<Vec<Section>>,
        anchors: Vec<VectorField>,
    ) -> Result<Self> {
        validate_table(ring, &brackets, &anchors)?;
        Ok(LieAlgebroid {
            ring: ring.clone(),
            brackets,
            anchors,
        })
    }

    pub fn abelian(ring: &Ring, rank: usize) -> Self {
        LieAlgebroid {
            ring: ring.clone(),
            brackets: vec![vec![Section::zero(ring, rank); rank]; rank],
            anchors: vec![VectorField::zero(ring); rank],
        }
    }

    pub fn frame_bracket(&self, i: usize, j: usize) -> &Section {
        &self.brackets[i][j]
    }

    pub fn brackets(&self) -> &[Vec<Section>] {
        &self.brackets
    }

    pub fn basis(&self, i: usize) -> Section {
        Section::basis(&self.ring, self.rank(), i)
    }

    /// [X, Y] = Σ f_i g_j b_ij + Σ f_i a(e_i)(g_j) e_j − Σ g_j a(e_j)(f_i) e_i.
    pub fn bracket(&self, x: &Section, y: &Section) -> Section {
        assert_eq!(x.rank(), self.rank(), "left argument has the wrong rank");
        assert_eq!(y.rank(), self.rank(), "right argument has the wrong rank");
        let mut out = Section::zero(&self.ring, self.rank());
        for (i, f) in x.comps().iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (j, g) in y.comps().iter().enumerate() {
                if !g.is_zero() {
                    out.add_scaled(&(f * g), &self.brackets[i][j]);
                }
            }
            let ay = y.apply_field(&self.anchors[i]).expect("same ring");
            out.add_scaled(f, &ay);
        }
        for (j, g) in y.comps().iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let ax = x.apply_field(&self.anchors[j]).expect("same ring");
            out.add_scaled(&-g, &ax);
        }
        out
    }

    /// Skewness, the frame Jacobi identity, and the anchor morphism property.
    pub fn check_lie_algebroid(&self) -> Report {
        let r = self.rank();
        let mut skew = CheckRecord::new("skew-symmetry", "[e_i,e_j] = −[e_j,e_i]");
        for i in 0..r {
            for j in i..r {
                let lhs = self.brackets[i][j].clone();
                let rhs = self.brackets[j][i].neg();
                skew.expect_eq(
                    format!("[e{},e{}] = −[e{},e{}]", i + 1, j + 1, j + 1, i + 1),
                    &lhs,
                    &rhs,
                );
            }
        }
        let mut jacobi = CheckRecord::new("jacobi", "cyclic sum of double brackets vanishes");
        let e: Vec<Section> = (0..r).map(|i| self.basis(i)).collect();
        for i in 0..r {
            for j in (i + 1)..r {
                for k in (j + 1)..r {
                    let mut sum = self.bracket(&self.brackets[i][j], &e[k]);
                    sum.add_assign(&self.bracket(&self.brackets[j][k], &e[i]));
                    sum.add_assign(&self.bracket(&self.brackets[k][i], &e[j]));
                    jacobi.expect_eq(
                        format!(
                            "[[e{0},e{1}],e{2}] + [[e{1},e{2}],e{0}] + [[e{2},e{0}],e{1}] = 0",
                            i + 1,
                            j + 1,
                            k + 1
                        ),
                        &sum,
                        &Section::zero(&self.ring, r),
                    );
                }
            }
        }
        let mut anchor = CheckRecord::new(
            "anchor-morphism",
            "anchor maps the bracket to the vector field bracket",
        );
        check_anchor_morphism(self, &mut anchor, |i, j| self.brackets[i][j].clone());
        Report {
            records: vec![skew, jacobi, anchor],
        }
    }

    pub fn is_lie_algebroid(&self) -> bool {
        self.check_lie_algebroid().passed()
    }

    /// Matrix of ad_{e_i} on the frame: column j holds [e_i, e_j].
    pub fn ad_matrix(&self, i: usize) -> PolyMatrix {
        let cols: Vec<Vec<_>> = self.brackets[i]
            .iter()
            .map(|s| s.comps().to_vec())
            .collect();
        PolyMatrix::from_columns(&self.ring, self.rank(), &cols).expect("square by construction")
    }
}

impl Anchored for LieAlgebroid {
    fn ring(&self) -> &Ring {
        &self.ring
    }

    fn anchors(&self) -> &[VectorField] {
        &self.anchors
    }
}

impl fmt::Debug for LieAlgebroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LieAlgebroid over {:?}, rank {}", self.ring, self.rank())?;
        for (i, row) in self.brackets.iter().enumerate() {
            for (j, s) in row.iter().enumerate().skip(i + 1) {
                if !s.is_zero() {
                    writeln!(f, "  [e{},e{}] = {s}", i + 1, j + 1)?;
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
