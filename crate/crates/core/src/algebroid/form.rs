use std::collections::BTreeMap;
use std::fmt;

use super::{Anchored, LieAlgebroid, Section};
use crate::error::{Error, Result};
use crate::polyring::{Poly, Ring};

/// Sorts `indices` in place and returns the permutation sign, or `None`
/// when an index repeats.
pub(crate) fn sort_with_sign(indices: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(negative)
    }
}

/// All strictly increasing `k`-tuples drawn from `0..r`.
pub fn increasing_tuples(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            cur.push(i);
            rec(i + 1, r, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= r {
        rec(0, r, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// A skew-symmetric `k`-form on the frame, ϖ(e_{i1}, …, e_{ik}).
#[derive(Clone, PartialEq, Eq)]
pub struct FormCochain {
    ring: Ring,
    rank: usize,
    degree: usize,
    comps: BTreeMap<Vec<usize>, Poly>,
}

impl FormCochain {
    pub fn zero(ring: &Ring, rank: usize, degree: usize) -> Self {
        FormCochain {
            ring: ring.clone(),
            rank,
            degree,
            comps: BTreeMap::new(),
        }
    }

    /// A 0-form, i.e. a function.
    pub fn function(f: Poly, rank: usize) -> Self {
        let mut w = Self::zero(f.ring(), rank, 0);
        if !f.is_zero() {
            w.comps.insert(Vec::new(), f);
        }
        w
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Sets ϖ(e_I) for an arbitrary ordering of I; skew-symmetry fixes the rest.
    pub fn set(&mut self, indices: &[usize], value: Poly) -> Result<()> {
        if indices.len() != self.degree {
            return Err(Error::ArityError {
                expected: self.degree,
                got: indices.len(),
            });
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.rank) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: self.rank,
            });
        }
        let mut sorted = indices.to_vec();
        match sort_with_sign(&mut sorted) {
            None if value.is_zero() => Ok(()),
            None => Err(Error::InvalidDegree(
                "a skew form vanishes on repeated arguments".into(),
            )),
            Some(neg) => {
                let v = if neg { -value } else { value };
                if v.is_zero() {
                    self.comps.remove(&sorted);
                } else {
                    self.comps.insert(sorted, v);
                }
                Ok(())
            }
        }
    }

    /// ϖ(e_{i1}, …, e_{ik}) for any index order.
    pub fn component(&self, indices: &[usize]) -> Poly {
        let mut sorted = indices.to_vec();
        match sort_with_sign(&mut sorted) {
            None => Poly::zero(&self.ring),
            Some(neg) => match self.comps.get(&sorted) {
                None => Poly::zero(&self.ring),
                Some(v) if neg => -v,
                Some(v) => v.clone(),
            },
        }
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.comps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// ϖ(x_1, …, x_k) on arbitrary sections, by multilinearity.
    pub fn eval(&self, args: &[Section]) -> Result<Poly> {
        if args.len() != self.degree {
            return Err(Error::ArityError {
                expected: self.degree,
                got: args.len(),
            });
        }
        let mut total = Poly::zero(&self.ring);
        let mut idx = vec![0usize; self.degree];
        eval_rec(self, args, 0, &mut idx, &Poly::one(&self.ring), &mut total);
        Ok(total)
    }
}

fn eval_rec(
    w: &FormCochain,
    args: &[Section],
    pos: usize,
    idx: &mut Vec<usize>,
    coeff: &Poly,
    total: &mut Poly,
) {
    if pos == args.len() {
        let c = w.component(idx);
        if !c.is_zero() {
            *total += coeff * &c;
        }
        return;
    }
    for (i, f) in args[pos].comps().iter().enumerate() {
        if f.is_zero() || idx[..pos].contains(&i) {
            continue;
        }
        idx[pos] = i;
        eval_rec(w, args, pos + 1, idx, &(coeff * f), total);
    }
}

impl fmt::Debug for FormCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FormCochain(degree {}", self.degree)?;
        for (k, v) in &self.comps {
            let labels: Vec<String> = k.iter().map(|i| format!("e{}", i + 1)).collect();
            write!(f, ", ({}) -> {v}", labels.join(","))?;
        }
        write!(f, ")")
    }
}

/// The Lie algebroid differential on forms,
/// dϖ(x_0..x_k) = Σ (−1)^p a(x_p) ϖ(..x̂_p..) + Σ_{p<q} (−1)^{p+q} ϖ([x_p,x_q], ..x̂_p..x̂_q..).
pub fn lie_form_d(l: &LieAlgebroid, w: &FormCochain) -> Result<FormCochain> {
    if w.rank != l.rank() || w.ring != *l.ring() {
        return Err(Error::DimensionMismatch(
            "form and algebroid differ in rank or ring".into(),
        ));
    }
    if w.degree > l.rank() {
        return Err(Error::InvalidDegree(format!(
            "degree {} exceeds the rank {}",
            w.degree,
            l.rank()
        )));
    }
    let k = w.degree;
    let mut out = FormCochain::zero(&w.ring, w.rank, k + 1);
    for tuple in increasing_tuples(l.rank(), k + 1) {
        let mut acc = Poly::zero(&w.ring);
        for p in 0..=k {
            let rest: Vec<usize> = tuple
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != p)
                .map(|(_, &v)| v)
                .collect();
            let term = l.anchor(tuple[p]).act(&w.component(&rest));
            if p % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        for p in 0..=k {
            for q in (p + 1)..=k {
                let b = l.frame_bracket(tuple[p], tuple[q]);
                let rest: Vec<usize> = tuple
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != p && i != q)
                    .map(|(_, &v)| v)
                    .collect();
                let mut term = Poly::zero(&w.ring);
                for (m, bm) in b.comps().iter().enumerate() {
                    if bm.is_zero() {
                        continue;
                    }
                    let mut idx = Vec::with_capacity(k);
                    idx.push(m);
                    idx.extend_from_slice(&rest);
                    let c = w.component(&idx);
                    if !c.is_zero() {
                        term += bm * &c;
                    }
                }
                if (p + q) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
        out.set(&tuple, acc)?;
    }
    Ok(out)
}
