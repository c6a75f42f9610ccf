use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use super::{odd, omit};
use crate::algebroid::{increasing_tuples, sort_with_sign, Anchored, LSAlgebroid, Section};
use crate::error::{Error, Result};
use crate::polyring::{Poly, PolyMatrix, Ring, VectorField};
use crate::random::{random_field, random_section};

/// A multiderivation of degree n: C∞-linear and skew in the first n − 1
/// slots, with D(…, f y) = f D(…, y) + σ_D(…)(f) y in the last one.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiDerivation {
    ring: Ring,
    rank: usize,
    degree: usize,
    values: BTreeMap<(Vec<usize>, usize), Section>,
    symbol: BTreeMap<Vec<usize>, VectorField>,
}

impl MultiDerivation {
    pub fn zero(ring: &Ring, rank: usize, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidDegree(
                "multiderivations have degree at least 1".into(),
            ));
        }
        Ok(MultiDerivation {
            ring: ring.clone(),
            rank,
            degree,
            values: BTreeMap::new(),
            symbol: BTreeMap::new(),
        })
    }

    /// A bundle endomorphism as a degree-1 multiderivation with zero symbol.
    pub fn bundle_map(n: &PolyMatrix) -> Result<Self> {
        if !n.is_square() {
            return Err(Error::NotSquare {
                rows: n.rows(),
                cols: n.cols(),
            });
        }
        let mut d = Self::zero(n.ring(), n.cols(), 1)?;
        for j in 0..n.cols() {
            d.set_value(&[], j, Section::new(n.ring(), n.column(j))?)?;
        }
        Ok(d)
    }

    pub fn identity(ring: &Ring, rank: usize) -> Self {
        Self::bundle_map(&PolyMatrix::identity(ring, rank)).expect("square")
    }

    /// A degree-2 multiderivation from its frame values ω(e_i, e_j) and
    /// symbols σ(e_i).
    pub fn degree2(
        ring: &Ring,
        values: Vec<Vec<Section>>,
        symbol: Vec<VectorField>,
    ) -> Result<Self> {
        let r = symbol.len();
        if values.len() != r || values.iter().any(|row| row.len() != r) {
            return Err(Error::DimensionMismatch(format!(
                "expected an {r}×{r} table of values"
            )));
        }
        let mut d = Self::zero(ring, r, 2)?;
        for (i, row) in values.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                d.set_value(&[i], j, v)?;
            }
        }
        for (i, s) in symbol.into_iter().enumerate() {
            d.set_symbol(&[i], s)?;
        }
        Ok(d)
    }

    /// The product of an algebroid with the anchor as its symbol.
    pub fn from_product(a: &LSAlgebroid) -> Self {
        Self::degree2(a.ring(), a.products().to_vec(), a.anchors().to_vec()).expect("shape")
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

    pub fn is_zero(&self) -> bool {
        self.values.is_empty() && self.symbol.is_empty()
    }

    pub fn has_zero_symbol(&self) -> bool {
        self.symbol.is_empty()
    }

    fn check_indices(&self, idx: &[usize]) -> Result<()> {
        match idx.iter().find(|&&i| i >= self.rank) {
            Some(&i) => Err(Error::IndexOutOfRange {
                index: i,
                len: self.rank,
            }),
            None => Ok(()),
        }
    }

    pub fn set_value(&mut self, skew: &[usize], last: usize, value: Section) -> Result<()> {
        if skew.len() + 1 != self.degree {
            return Err(Error::ArityError {
                expected: self.degree,
                got: skew.len() + 1,
            });
        }
        self.check_indices(skew)?;
        self.check_indices(&[last])?;
        if value.rank() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "value of rank {}, expected {}",
                value.rank(),
                self.rank
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
            self.values.remove(&(key, last));
        } else {
            self.values.insert((key, last), value);
        }
        Ok(())
    }

    pub fn set_symbol(&mut self, args: &[usize], field: VectorField) -> Result<()> {
        if args.len() + 1 != self.degree {
            return Err(Error::ArityError {
                expected: self.degree - 1,
                got: args.len(),
            });
        }
        self.check_indices(args)?;
        let mut key = args.to_vec();
        let Some(neg) = sort_with_sign(&mut key) else {
            return if field.is_zero() {
                Ok(())
            } else {
                Err(Error::InvalidDegree("repeated symbol index".into()))
            };
        };
        let field = if neg { field.neg() } else { field };
        if field.is_zero() {
            self.symbol.remove(&key);
        } else {
            self.symbol.insert(key, field);
        }
        Ok(())
    }

    pub fn value(&self, skew: &[usize], last: usize) -> Section {
        let mut key = skew.to_vec();
        match sort_with_sign(&mut key).zip(self.values.get(&(key, last))) {
            Some((true, v)) => v.neg(),
            Some((false, v)) => v.clone(),
            None => Section::zero(&self.ring, self.rank),
        }
    }

    pub fn symbol(&self, args: &[usize]) -> VectorField {
        let mut key = args.to_vec();
        match sort_with_sign(&mut key).zip(self.symbol.get(&key)) {
            Some((true, v)) => v.neg(),
            Some((false, v)) => v.clone(),
            None => VectorField::zero(&self.ring),
        }
    }

    pub fn values(&self) -> impl Iterator<Item = (&(Vec<usize>, usize), &Section)> {
        self.values.iter()
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&Vec<usize>, &VectorField)> {
        self.symbol.iter()
    }

    /// Sum of two multiderivations of the same degree, scaled by `t` on the second.
    pub fn add_scaled(&self, t: &Poly, other: &MultiDerivation) -> Result<MultiDerivation> {
        if self.degree != other.degree || self.rank != other.rank || self.ring != other.ring {
            return Err(Error::DimensionMismatch(
                "multiderivations of different shape".into(),
            ));
        }
        let mut out = self.clone();
        for ((k, j), v) in &other.values {
            let cur = out.value(k, *j);
            out.set_value(k, *j, cur.add(&v.scale(t)))?;
        }
        for (k, s) in &other.symbol {
            let cur = out.symbol(k);
            out.set_symbol(k, cur.add(&s.scale(t)))?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiDerivation) -> Result<MultiDerivation> {
        self.add_scaled(&Poly::from_int(&self.ring, -1), other)
    }

    /// Embeds into a larger coordinate ring.
    pub fn embed(&self, target: &Ring) -> Result<MultiDerivation> {
        let mut out = Self::zero(target, self.rank, self.degree)?;
        for ((k, j), v) in &self.values {
            out.set_value(k, *j, v.embed(target)?)?;
        }
        for (k, s) in &self.symbol {
            out.set_symbol(k, s.embed(target)?)?;
        }
        Ok(out)
    }

    /// σ_D(x_1, …, x_{n−1}), C∞-multilinear.
    pub fn symbol_eval(&self, args: &[Section]) -> Result<VectorField> {
        if args.len() + 1 != self.degree {
            return Err(Error::ArityError {
                expected: self.degree - 1,
                got: args.len(),
            });
        }
        let mut out = VectorField::zero(&self.ring);
        multilinear(
            args,
            &Poly::one(&self.ring),
            &mut Vec::new(),
            true,
            &mut |idx, c| {
                let s = self.symbol(idx);
                if !s.is_zero() {
                    out = out.add(&s.scale(c));
                }
            },
        );
        Ok(out)
    }

    /// D(x_1, …, x_n) with the Leibniz rule in the last slot.
    pub fn eval(&self, args: &[Section]) -> Result<Section> {
        if args.len() != self.degree {
            return Err(Error::ArityError {
                expected: self.degree,
                got: args.len(),
            });
        }
        let (head, last) = args.split_at(self.degree - 1);
        let last = &last[0];
        let mut out = Section::zero(&self.ring, self.rank);
        multilinear(
            head,
            &Poly::one(&self.ring),
            &mut Vec::new(),
            true,
            &mut |idx, c| {
                for (j, y) in last.comps().iter().enumerate() {
                    if y.is_zero() {
                        continue;
                    }
                    let v = self.value(idx, j);
                    if !v.is_zero() {
                        out.add_scaled(&(c * y), &v);
                    }
                }
            },
        );
        let sigma = self.symbol_eval(head)?;
        if !sigma.is_zero() {
            out.add_assign(&last.apply_field(&sigma)?);
        }
        Ok(out)
    }
}

/// Expands Σ coeff · F(e_{i1}, …) over frame indices, skipping repeats
/// when `skew` is set.
fn multilinear(
    args: &[Section],
    coeff: &Poly,
    idx: &mut Vec<usize>,
    skew: bool,
    f: &mut impl FnMut(&[usize], &Poly),
) {
    let pos = idx.len();
    if pos == args.len() {
        f(idx, coeff);
        return;
    }
    for (i, c) in args[pos].comps().iter().enumerate() {
        if c.is_zero() || (skew && idx.contains(&i)) {
            continue;
        }
        idx.push(i);
        multilinear(args, &(coeff * c), idx, skew, f);
        idx.pop();
    }
}

impl fmt::Debug for MultiDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiDerivation(degree {}", self.degree)?;
        for ((k, j), v) in &self.values {
            let mut labels: Vec<String> = k.iter().map(|i| format!("e{}", i + 1)).collect();
            labels.push(format!("e{}", j + 1));
            write!(f, ", D({}) = {v}", labels.join(","))?;
        }
        for (k, s) in &self.symbol {
            let labels: Vec<String> = k.iter().map(|i| format!("e{}", i + 1)).collect();
            write!(f, ", σ({}) = {s}", labels.join(","))?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for MultiDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn require_shape(a: &LSAlgebroid, d: &MultiDerivation) -> Result<()> {
    if d.rank != a.rank() || d.ring != *a.ring() {
        return Err(Error::DimensionMismatch(
            "multiderivation does not match the algebroid".into(),
        ));
    }
    Ok(())
}

/// d_def ω(x_1, …, x_{n+1}) evaluated directly on arbitrary sections.
pub fn def_d_apply(a: &LSAlgebroid, w: &MultiDerivation, xs: &[Section]) -> Result<Section> {
    let n = w.degree;
    if xs.len() != n + 1 {
        return Err(Error::ArityError {
            expected: n + 1,
            got: xs.len(),
        });
    }
    let g = a.commutator_algebroid();
    let mut out = Section::zero(a.ring(), a.rank());
    for i in 0..n {
        let mut acc = a.mult(&xs[i], &w.eval(&omit(xs, &[i]))?);
        let mut moved = omit(&xs[..n], &[i]);
        moved.push(xs[i].clone());
        acc.add_assign(&a.mult(&w.eval(&moved)?, &xs[n]));
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

/// The symbol of d_def ω at (x_1, …, x_n):
/// Σ (−1)^i [a(x_i), σ_ω(…x̂_i…)] + Σ_{i<j} (−1)^{i+j} σ_ω([x_i, x_j], …)
/// + Σ (−1)^i a(ω(…x̂_i…, x_i)).
pub fn def_d_symbol_apply(
    a: &LSAlgebroid,
    w: &MultiDerivation,
    xs: &[Section],
) -> Result<VectorField> {
    let n = w.degree;
    if xs.len() != n {
        return Err(Error::ArityError {
            expected: n,
            got: xs.len(),
        });
    }
    let g = a.commutator_algebroid();
    let mut out = VectorField::zero(a.ring());
    let mut push = |v: VectorField, neg: bool| {
        out = if neg { out.sub(&v) } else { out.add(&v) };
    };
    for i in 0..n {
        let rest = omit(xs, &[i]);
        let sigma = w.symbol_eval(&rest)?;
        push(a.anchor_of(&xs[i]).bracket(&sigma)?, odd(i));
        let mut moved = rest;
        moved.push(xs[i].clone());
        push(a.anchor_of(&w.eval(&moved)?), odd(i));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let mut args = vec![g.bracket(&xs[i], &xs[j])];
            args.extend(omit(xs, &[i, j]));
            push(w.symbol_eval(&args)?, odd(i + j));
        }
    }
    Ok(out)
}

/// d_def on frames: values from the four-sum formula, symbols from the
/// three-sum formula.
pub fn def_d(a: &LSAlgebroid, w: &MultiDerivation) -> Result<MultiDerivation> {
    require_shape(a, w)?;
    let r = a.rank();
    let n = w.degree;
    let mut out = MultiDerivation::zero(a.ring(), r, n + 1)?;
    let frame: Vec<Section> = (0..r).map(|i| a.basis(i)).collect();
    for skew in increasing_tuples(r, n) {
        let mut xs: Vec<Section> = skew.iter().map(|&i| frame[i].clone()).collect();
        out.set_symbol(&skew, def_d_symbol_apply(a, w, &xs)?)?;
        for last in 0..r {
            xs.push(frame[last].clone());
            out.set_value(&skew, last, def_d_apply(a, w, &xs)?)?;
            xs.pop();
        }
    }
    Ok(out)
}

/// A multiderivation with seeded random values and symbols.
pub fn random_multiderivation<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &Ring,
    rank: usize,
    degree: usize,
    coeff_degree: u32,
) -> Result<MultiDerivation> {
    let mut d = MultiDerivation::zero(ring, rank, degree)?;
    for skew in increasing_tuples(rank, degree - 1) {
        for last in 0..rank {
            d.set_value(&skew, last, random_section(rng, ring, rank, coeff_degree))?;
        }
        d.set_symbol(&skew, random_field(rng, ring, coeff_degree))?;
    }
    Ok(d)
}
