use crate::algebroid::{increasing_tuples, Anchored, LSAlgebroid, Section};
use crate::error::{Error, Result};
use crate::polyring::{rank, rational_kernel_and_rank, Poly, Rational};
use crate::representation::Representation;

use super::rep::{rep_d_unchecked, require_rep, RepCochain};

/// Dimensions of one degree of the point-case complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeDims {
    pub k: usize,
    pub cochain_dim: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub cohomology_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCohomology {
    /// dim C^0.
    pub c0_dim: usize,
    /// dim ker(d|C^0).
    pub c0_kernel_dim: usize,
    /// Degrees 1..=n_max.
    pub degrees: Vec<DegreeDims>,
}

fn require_point(a: &LSAlgebroid, rep: &Representation) -> Result<()> {
    if a.ring().nvars() != 0 {
        return Err(Error::NotPointCase);
    }
    if rep.base_rank() != a.rank() {
        return Err(Error::DimensionMismatch(
            "representation base rank differs from the algebra".into(),
        ));
    }
    require_rep(a, rep)
}

fn constant(p: &Poly) -> Rational {
    p.constant_value().expect("point ring")
}

fn basis(r: usize, s: usize, k: usize) -> Vec<(Vec<usize>, usize, usize)> {
    let mut out = Vec::new();
    for skew in increasing_tuples(r, k - 1) {
        for j in 0..r {
            for u in 0..s {
                out.push((skew.clone(), j, u));
            }
        }
    }
    out
}

fn coordinates(w: &RepCochain, r: usize, s: usize) -> Vec<Rational> {
    basis(r, s, w.degree())
        .into_iter()
        .map(|(skew, j, u)| constant(w.component(&skew, j).get(u)))
        .collect()
}

fn transpose(cols: Vec<Vec<Rational>>, rows: usize) -> Vec<Vec<Rational>> {
    (0..rows)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

/// Matrix of d: C^k → C^{k+1} for k ≥ 1, and of e ↦ d(e) on all of E for
/// k = 0. Coordinates on C^k are ordered by (I, j, u): I runs over
/// increasing (k−1)-tuples, j over the last argument, u over the fibre.
pub fn point_differential_matrix(
    a: &LSAlgebroid,
    rep: &Representation,
    k: usize,
) -> Result<Vec<Vec<Rational>>> {
    require_point(a, rep)?;
    Ok(differential(a, rep, k))
}

fn differential(a: &LSAlgebroid, rep: &Representation, k: usize) -> Vec<Vec<Rational>> {
    let (r, s) = (a.rank(), rep.rank());
    let ring = a.ring();
    let rows = basis(r, s, k + 1).len();
    let cols: Vec<Vec<Rational>> = if k == 0 {
        (0..s)
            .map(|u| {
                let e = Section::basis(ring, s, u);
                let mut w = RepCochain::zero(ring, r, s, 1);
                for j in 0..r {
                    let v = rep.act_mu_frame(j, &e).sub(&rep.act_rho_frame(a, j, &e));
                    w.set(&[], j, v).expect("shape");
                }
                coordinates(&w, r, s)
            })
            .collect()
    } else {
        basis(r, s, k)
            .into_iter()
            .map(|(skew, j, u)| {
                let mut w = RepCochain::zero(ring, r, s, k);
                w.set(&skew, j, Section::basis(ring, s, u)).expect("shape");
                coordinates(&rep_d_unchecked(a, rep, &w).expect("shape"), r, s)
            })
            .collect()
    };
    transpose(cols, rows)
}

/// A basis of C^0, the kernel of the stacked maps R_i R_j − R(e_i·e_j).
pub fn point_c0_basis(a: &LSAlgebroid, rep: &Representation) -> Result<Vec<Vec<Rational>>> {
    require_point(a, rep)?;
    Ok(c0_basis(a, rep))
}

fn c0_basis(a: &LSAlgebroid, rep: &Representation) -> Vec<Vec<Rational>> {
    let (r, s) = (a.rank(), rep.rank());
    let ring = a.ring();
    let mut stacked = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let cols: Vec<Vec<Rational>> = (0..s)
                .map(|u| {
                    let e = Section::basis(ring, s, u);
                    let v = rep
                        .act_rho_frame(a, i, &rep.act_rho_frame(a, j, &e))
                        .sub(&rep.act_rho(a, a.product(i, j), &e));
                    v.comps().iter().map(constant).collect()
                })
                .collect();
            stacked.extend(transpose(cols, s));
        }
    }
    rational_kernel_and_rank(&stacked, s).1
}

fn mat_mul(m: &[Vec<Rational>], vs: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    // Columns of m·[v_1 … v_p], returned as rows of the product matrix.
    let cols: Vec<Vec<Rational>> = vs
        .iter()
        .map(|v| {
            m.iter()
                .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect();
    transpose(cols, m.len())
}

/// dim C^0, dim ker(d|C^0) and (dim Z^k, dim B^k, dim H^k) for k = 1..=n_max.
pub fn point_cohomology_dims(
    a: &LSAlgebroid,
    rep: &Representation,
    n_max: usize,
) -> Result<PointCohomology> {
    require_point(a, rep)?;
    let (r, s) = (a.rank(), rep.rank());
    let c0 = c0_basis(a, rep);
    let d0 = mat_mul(&differential(a, rep, 0), &c0);
    let rank0 = if c0.is_empty() {
        0
    } else {
        rank(&d0, c0.len())
    };
    let mut out = PointCohomology {
        c0_dim: c0.len(),
        c0_kernel_dim: c0.len() - rank0,
        degrees: Vec::new(),
    };
    let mut prev_rank = rank0;
    for k in 1..=n_max {
        let dim = basis(r, s, k).len();
        let rank_k = if dim == 0 {
            0
        } else {
            rank(&differential(a, rep, k), dim)
        };
        let cocycle = dim - rank_k;
        out.degrees.push(DegreeDims {
            k,
            cochain_dim: dim,
            cocycle_dim: cocycle,
            coboundary_dim: prev_rank,
            cohomology_dim: cocycle - prev_rank,
        });
        prev_rank = rank_k;
    }
    Ok(out)
}
