use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use super::{odd, omit};
use crate::algebroid::{increasing_tuples, sort_with_sign, Anchored, LSAlgebroid, Section};
use crate::constructions::representation_lsa_report;
use crate::error::{Error, Result};
use crate::polyring::{Poly, Ring};
use crate::random::random_section;
use crate::representation::Representation;

/// ω ∈ Γ(Hom(Λ^{n−1}A ⊗ A, E)), stored as ω(e_I; e_j) for increasing I.
#[derive(Clone, PartialEq, Eq)]
pub struct RepCochain {
    ring: Ring,
    base_rank: usize,
    fibre_rank: usize,
    degree: usize,
    comps: BTreeMap<(Vec<usize>, usize), Section>,
}

impl RepCochain {
    pub fn zero(ring: &Ring, base_rank: usize, fibre_rank: usize, degree: usize) -> Self {
        RepCochain {
            ring: ring.clone(),
            base_rank,
            fibre_rank,
            degree,
            comps: BTreeMap::new(),
        }
    }

    /// The degree-1 cochain x ↦ M x for an s×r matrix M.
    pub fn from_matrix(m: &crate::polyring::PolyMatrix) -> Self {
        let mut w = Self::zero(m.ring(), m.cols(), m.rows(), 1);
        for j in 0..m.cols() {
            w.set(
                &[],
                j,
                Section::new(m.ring(), m.column(j)).expect("same ring"),
            )
            .expect("in range");
        }
        w
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn base_rank(&self) -> usize {
        self.base_rank
    }

    pub fn fibre_rank(&self) -> usize {
        self.fibre_rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&(Vec<usize>, usize), &Section)> {
        self.comps.iter()
    }

    /// Sets ω(e_{i1},…,e_{i(n−1)}; e_j), reordering the skew slots.
    pub fn set(&mut self, skew: &[usize], last: usize, value: Section) -> Result<()> {
        if skew.len() + 1 != self.degree {
            return Err(Error::ArityError {
                expected: self.degree,
                got: skew.len() + 1,
            });
        }
        if let Some(&i) = skew.iter().chain([&last]).find(|&&i| i >= self.base_rank) {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.base_rank,
            });
        }
        if value.rank() != self.fibre_rank {
            return Err(Error::DimensionMismatch(format!(
                "value of rank {}, fibre has rank {}",
                value.rank(),
                self.fibre_rank
            )));
        }
        let mut key = skew.to_vec();
        let Some(neg) = sort_with_sign(&mut key) else {
            return if value.is_zero() {
                Ok(())
            } else {
                Err(Error::InvalidDegree("repeated skew index".into()))
            };
        };
        let value = if neg { value.neg() } else { value };
        if value.is_zero() {
            self.comps.remove(&(key, last));
        } else {
            self.comps.insert((key, last), value);
        }
        Ok(())
    }

    pub fn component(&self, skew: &[usize], last: usize) -> Section {
        let mut key = skew.to_vec();
        match sort_with_sign(&mut key) {
            None => Section::zero(&self.ring, self.fibre_rank),
            Some(neg) => match self.comps.get(&(key, last)) {
                Some(v) if neg => v.neg(),
                Some(v) => v.clone(),
                None => Section::zero(&self.ring, self.fibre_rank),
            },
        }
    }

    /// ω(x_1, …, x_n), C∞-multilinear in every slot.
    pub fn eval(&self, args: &[Section]) -> Result<Section> {
        if args.len() != self.degree {
            return Err(Error::ArityError {
                expected: self.degree,
                got: args.len(),
            });
        }
        let mut out = Section::zero(&self.ring, self.fibre_rank);
        let mut idx = Vec::with_capacity(self.degree);
        self.eval_rec(args, &Poly::one(&self.ring), &mut idx, &mut out);
        Ok(out)
    }

    fn eval_rec(&self, args: &[Section], coeff: &Poly, idx: &mut Vec<usize>, out: &mut Section) {
        let pos = idx.len();
        if pos == args.len() {
            let (skew, last) = idx.split_at(pos - 1);
            let c = self.component(skew, last[0]);
            if !c.is_zero() {
                out.add_scaled(coeff, &c);
            }
            return;
        }
        for (i, f) in args[pos].comps().iter().enumerate() {
            if f.is_zero() || (pos + 1 < args.len() && idx.contains(&i)) {
                continue;
            }
            idx.push(i);
            self.eval_rec(args, &(coeff * f), idx, out);
            idx.pop();
        }
    }
}

impl fmt::Debug for RepCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepCochain(degree {}", self.degree)?;
        for ((k, j), v) in &self.comps {
            let mut labels: Vec<String> = k.iter().map(|i| format!("e{}", i + 1)).collect();
            labels.push(format!("e{}", j + 1));
            write!(f, ", ({}) -> {v}", labels.join(","))?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RepCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub(super) fn require_rep(a: &LSAlgebroid, rep: &Representation) -> Result<()> {
    let report = representation_lsa_report(a, rep)?;
    if !report.passed() {
        return Err(Error::NotARepresentation(report.failure_summary()));
    }
    Ok(())
}

fn require_shape(a: &LSAlgebroid, rep: &Representation, w: &RepCochain) -> Result<()> {
    if w.base_rank != a.rank() || w.fibre_rank != rep.rank() || w.ring != *a.ring() {
        return Err(Error::DimensionMismatch(
            "cochain does not match the algebroid and representation".into(),
        ));
    }
    Ok(())
}

/// dω(x_1, …, x_{n+1}) evaluated directly on arbitrary sections.
pub fn rep_d_apply(
    a: &LSAlgebroid,
    rep: &Representation,
    w: &RepCochain,
    xs: &[Section],
) -> Result<Section> {
    let n = w.degree;
    if xs.len() != n + 1 {
        return Err(Error::ArityError {
            expected: n + 1,
            got: xs.len(),
        });
    }
    let mut out = Section::zero(a.ring(), rep.rank());
    let g = a.commutator_algebroid();
    for i in 0..n {
        let mut acc = rep.act_rho(a, &xs[i], &w.eval(&omit(xs, &[i]))?);
        let mut moved = omit(&xs[..n], &[i]);
        moved.push(xs[i].clone());
        acc.add_assign(&rep.act_mu(&xs[n], &w.eval(&moved)?));
        let mut prod = omit(&xs[..n], &[i]);
        prod.push(a.mult(&xs[i], &xs[n]));
        acc.sub_assign(&w.eval(&prod)?);
        if odd(i) {
            out.sub_assign(&acc);
        } else {
            out.add_assign(&acc);
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let mut args = vec![g.bracket(&xs[i], &xs[j])];
            args.extend(omit(xs, &[i, j]));
            let v = w.eval(&args)?;
            if odd(i + j) {
                out.sub_assign(&v);
            } else {
                out.add_assign(&v);
            }
        }
    }
    Ok(out)
}

/// The differential of the representation complex, computed on frames.
pub fn rep_d(a: &LSAlgebroid, rep: &Representation, w: &RepCochain) -> Result<RepCochain> {
    require_shape(a, rep, w)?;
    if w.degree == 0 {
        return Err(Error::InvalidDegree(
            "use rep_d0 for degree-0 cochains".into(),
        ));
    }
    require_rep(a, rep)?;
    rep_d_unchecked(a, rep, w)
}

pub(crate) fn rep_d_unchecked(
    a: &LSAlgebroid,
    rep: &Representation,
    w: &RepCochain,
) -> Result<RepCochain> {
    let r = a.rank();
    let n = w.degree;
    let mut out = RepCochain::zero(a.ring(), r, rep.rank(), n + 1);
    for skew in increasing_tuples(r, n) {
        for last in 0..r {
            let mut xs: Vec<Section> = skew.iter().map(|&i| a.basis(i)).collect();
            xs.push(a.basis(last));
            let v = rep_d_apply(a, rep, w, &xs)?;
            out.set(&skew, last, v)?;
        }
    }
    Ok(out)
}

/// d(e)(x) = μ(x)e − ρ(x)e.
pub fn rep_d0(a: &LSAlgebroid, rep: &Representation, e: &Section) -> Result<RepCochain> {
    if e.rank() != rep.rank() || rep.base_rank() != a.rank() {
        return Err(Error::DimensionMismatch(
            "section does not match the representation".into(),
        ));
    }
    require_rep(a, rep)?;
    let mut out = RepCochain::zero(a.ring(), a.rank(), rep.rank(), 1);
    for j in 0..a.rank() {
        let v = rep.act_mu_frame(j, e).sub(&rep.act_rho_frame(a, j, e));
        out.set(&[], j, v)?;
    }
    Ok(out)
}

/// e ∈ C^0: ρ(e_i)ρ(e_j)e − ρ(e_i·e_j)e = 0 for all frame pairs. The
/// expression is C∞-linear in both slots, so frames suffice.
pub fn check_c0(a: &LSAlgebroid, rep: &Representation, e: &Section) -> bool {
    let r = a.rank();
    (0..r).all(|i| {
        (0..r).all(|j| {
            let lhs = rep.act_rho_frame(a, i, &rep.act_rho_frame(a, j, e));
            let rhs = rep.act_rho(a, a.product(i, j), e);
            lhs == rhs
        })
    })
}

pub fn is_rep_cocycle(a: &LSAlgebroid, rep: &Representation, w: &RepCochain) -> Result<bool> {
    Ok(rep_d(a, rep, w)?.is_zero())
}

/// ω = dη for the supplied potential η.
pub fn is_rep_coboundary(
    a: &LSAlgebroid,
    rep: &Representation,
    w: &RepCochain,
    eta: &RepCochain,
) -> Result<bool> {
    Ok(rep_d(a, rep, eta)? == *w)
}

/// A cochain with seeded random polynomial components.
pub fn random_rep_cochain<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &Ring,
    base_rank: usize,
    fibre_rank: usize,
    degree: usize,
    coeff_degree: u32,
) -> RepCochain {
    let mut w = RepCochain::zero(ring, base_rank, fibre_rank, degree);
    for skew in increasing_tuples(base_rank, degree.saturating_sub(1)) {
        for last in 0..base_rank {
            let v = random_section(rng, ring, fibre_rank, coeff_degree);
            w.set(&skew, last, v).expect("shape");
        }
    }
    w
}
