//! Representations (E; ρ, μ) on trivial bundles.
//!
//! ρ(e_i) is the first-order operator `a(e_i) + R_i`: the anchor acts on
//! coefficients and `R_i = rho_mat[i]` mixes the frame of E. μ(e_i) is the
//! bundle map `M_i = mu_mat[i]`.

use crate::algebroid::{Anchored, Section};
use crate::error::{Error, Result};
use crate::polyring::{PolyMatrix, Ring, VectorField};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    ring: Ring,
    base_rank: usize,
    rank: usize,
    rho: Vec<PolyMatrix>,
    mu: Vec<PolyMatrix>,
}

impl Representation {
    pub fn new(
        ring: &Ring,
        base_rank: usize,
        rank: usize,
        rho: Vec<PolyMatrix>,
        mu: Vec<PolyMatrix>,
    ) -> Result<Self> {
        if rho.len() != base_rank || mu.len() != base_rank {
            return Err(Error::DimensionMismatch(format!(
                "representation needs {base_rank} matrices for ρ and μ, got {} and {}",
                rho.len(),
                mu.len()
            )));
        }
        for m in rho.iter().chain(&mu) {
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::DimensionMismatch(format!(
                    "representation matrix is {}x{}, expected {rank}x{rank}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.ring() != ring {
                return Err(Error::DimensionMismatch(
                    "representation matrix over another ring".into(),
                ));
            }
        }
        Ok(Representation {
            ring: ring.clone(),
            base_rank,
            rank,
            rho,
            mu,
        })
    }

    /// ρ = μ = 0 on a rank-`s` bundle (ρ keeps its anchor part).
    pub fn trivial(ring: &Ring, base_rank: usize, rank: usize) -> Self {
        let z = PolyMatrix::zero(ring, rank, rank);
        Representation {
            ring: ring.clone(),
            base_rank,
            rank,
            rho: vec![z.clone(); base_rank],
            mu: vec![z; base_rank],
        }
    }

    /// A Lie algebroid representation, μ = 0.
    pub fn lie(ring: &Ring, rank: usize, rho: Vec<PolyMatrix>) -> Result<Self> {
        let base_rank = rho.len();
        Self::new(
            ring,
            base_rank,
            rank,
            rho,
            vec![PolyMatrix::zero(ring, rank, rank); base_rank],
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Rank of A.
    pub fn base_rank(&self) -> usize {
        self.base_rank
    }

    /// Rank of E.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rho_mat(&self, i: usize) -> &PolyMatrix {
        &self.rho[i]
    }

    pub fn mu_mat(&self, i: usize) -> &PolyMatrix {
        &self.mu[i]
    }

    pub fn rho_mats(&self) -> &[PolyMatrix] {
        &self.rho
    }

    pub fn mu_mats(&self) -> &[PolyMatrix] {
        &self.mu
    }

    pub fn has_zero_mu(&self) -> bool {
        self.mu.iter().all(PolyMatrix::is_zero)
    }

    fn combine(&self, mats: &[PolyMatrix], x: &Section) -> PolyMatrix {
        let mut out = PolyMatrix::zero(&self.ring, self.rank, self.rank);
        for (xi, m) in x.comps().iter().zip(mats) {
            if !xi.is_zero() {
                out = out.add(&m.scale(xi)).expect("same shape");
            }
        }
        out
    }

    /// Matrix part of ρ(x) = Σ x_i R_i.
    pub fn rho_matrix_of(&self, x: &Section) -> PolyMatrix {
        self.combine(&self.rho, x)
    }

    /// μ(x) = Σ x_i M_i.
    pub fn mu_matrix_of(&self, x: &Section) -> PolyMatrix {
        self.combine(&self.mu, x)
    }

    /// ρ(x)u = a(x)(u) + R(x)u.
    pub fn act_rho<A: Anchored + ?Sized>(
        &self,
        algebroid: &A,
        x: &Section,
        u: &Section,
    ) -> Section {
        let field = algebroid.anchor_of(x);
        self.act_operator(&field, &self.rho_matrix_of(x), u)
    }

    /// ρ(e_i)u.
    pub fn act_rho_frame<A: Anchored + ?Sized>(
        &self,
        algebroid: &A,
        i: usize,
        u: &Section,
    ) -> Section {
        self.act_operator(algebroid.anchor(i), &self.rho[i], u)
    }

    pub(crate) fn act_operator(
        &self,
        field: &VectorField,
        mat: &PolyMatrix,
        u: &Section,
    ) -> Section {
        let mut out = u.apply_field(field).expect("same ring");
        let mu = mat.apply(u.comps()).expect("same shape");
        out.add_assign(&Section::new(&self.ring, mu).expect("same ring"));
        out
    }

    /// μ(x)u.
    pub fn act_mu(&self, x: &Section, u: &Section) -> Section {
        apply_matrix(&self.mu_matrix_of(x), u)
    }

    pub fn act_mu_frame(&self, i: usize, u: &Section) -> Section {
        apply_matrix(&self.mu[i], u)
    }

    /// The dual (E*; ρ*, μ*): matrix parts −Rᵀ and −Mᵀ in the dual frame.
    pub fn dual(&self) -> Representation {
        Representation {
            ring: self.ring.clone(),
            base_rank: self.base_rank,
            rank: self.rank,
            rho: self.rho.iter().map(|m| m.transpose().neg()).collect(),
            mu: self.mu.iter().map(|m| m.transpose().neg()).collect(),
        }
    }

    /// (ρ + s·μ, t·μ) for integer scalars, the family of derived representations.
    pub fn shifted(&self, s: i64, t: i64) -> Representation {
        let sq = crate::polyring::Poly::from_int(&self.ring, s);
        let tq = crate::polyring::Poly::from_int(&self.ring, t);
        Representation {
            ring: self.ring.clone(),
            base_rank: self.base_rank,
            rank: self.rank,
            rho: self
                .rho
                .iter()
                .zip(&self.mu)
                .map(|(r, m)| r.add(&m.scale(&sq)).expect("same shape"))
                .collect(),
            mu: self.mu.iter().map(|m| m.scale(&tq)).collect(),
        }
    }

    pub fn embed(&self, target: &Ring) -> Result<Representation> {
        Ok(Representation {
            ring: target.clone(),
            base_rank: self.base_rank,
            rank: self.rank,
            rho: self
                .rho
                .iter()
                .map(|m| m.embed(target))
                .collect::<Result<_>>()?,
            mu: self
                .mu
                .iter()
                .map(|m| m.embed(target))
                .collect::<Result<_>>()?,
        })
    }
}

pub(crate) fn apply_matrix(m: &PolyMatrix, u: &Section) -> Section {
    u.transform(m)
}
