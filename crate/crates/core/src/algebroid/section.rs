use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{Poly, PolyMatrix, Rational, Ring, VectorField};

/// A section of a trivial bundle: polynomial coefficients over the constant frame.
#[derive(Clone, PartialEq, Eq)]
pub struct Section {
    ring: Ring,
    comps: Vec<Poly>,
}

impl Section {
    pub fn new(ring: &Ring, comps: Vec<Poly>) -> Result<Self> {
        if comps.iter().any(|c| c.ring() != ring) {
            return Err(Error::DimensionMismatch(
                "section component from another ring".into(),
            ));
        }
        Ok(Section {
            ring: ring.clone(),
            comps,
        })
    }

    pub fn zero(ring: &Ring, rank: usize) -> Self {
        Section {
            ring: ring.clone(),
            comps: vec![Poly::zero(ring); rank],
        }
    }

    /// The frame section e_i (zero-based index).
    pub fn basis(ring: &Ring, rank: usize, i: usize) -> Self {
        let mut s = Self::zero(ring, rank);
        s.comps[i] = Poly::one(ring);
        s
    }

    pub fn from_rationals(ring: &Ring, values: &[Rational]) -> Self {
        Section {
            ring: ring.clone(),
            comps: values
                .iter()
                .map(|v| Poly::constant(ring, v.clone()))
                .collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[Poly] {
        &self.comps
    }

    pub fn into_comps(self) -> Vec<Poly> {
        self.comps
    }

    pub fn get(&self, i: usize) -> &Poly {
        &self.comps[i]
    }

    pub fn set(&mut self, i: usize, p: Poly) {
        self.comps[i] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.comps.iter().all(Poly::is_constant)
    }

    fn assert_compatible(&self, other: &Section) {
        assert_eq!(self.rank(), other.rank(), "sections of different rank");
    }

    pub fn add(&self, other: &Section) -> Section {
        self.assert_compatible(other);
        Section {
            ring: self.ring.clone(),
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Section) -> Section {
        self.assert_compatible(other);
        Section {
            ring: self.ring.clone(),
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Section) {
        self.assert_compatible(other);
        for (a, b) in self.comps.iter_mut().zip(&other.comps) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn sub_assign(&mut self, other: &Section) {
        self.assert_compatible(other);
        for (a, b) in self.comps.iter_mut().zip(&other.comps) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }

    /// Adds `f * other` in place.
    pub fn add_scaled(&mut self, f: &Poly, other: &Section) {
        self.assert_compatible(other);
        if f.is_zero() {
            return;
        }
        for (a, b) in self.comps.iter_mut().zip(&other.comps) {
            if !b.is_zero() {
                *a += f * b;
            }
        }
    }

    pub fn neg(&self) -> Section {
        Section {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, f: &Poly) -> Section {
        Section {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|c| c * f).collect(),
        }
    }

    pub fn scale_q(&self, q: &Rational) -> Section {
        Section {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|c| c.scale(q)).collect(),
        }
    }

    /// Applies a vector field to every coefficient.
    pub fn apply_field(&self, field: &VectorField) -> Result<Section> {
        Ok(Section {
            ring: self.ring.clone(),
            comps: self
                .comps
                .iter()
                .map(|c| field.apply(c))
                .collect::<Result<_>>()?,
        })
    }

    /// The image m·x under a bundle map given by its frame matrix.
    ///
    /// Panics when the column count differs from the rank.
    pub fn transform(&self, m: &PolyMatrix) -> Section {
        let comps = m
            .apply(&self.comps)
            .expect("matrix columns match the section rank");
        Section {
            ring: self.ring.clone(),
            comps,
        }
    }

    /// Concatenation x ⊕ u, as a section of a direct-sum bundle.
    pub fn concat(&self, other: &Section) -> Section {
        let mut comps = self.comps.clone();
        comps.extend(other.comps.iter().cloned());
        Section {
            ring: self.ring.clone(),
            comps,
        }
    }

    /// Components `range` as a section of the corresponding summand.
    pub fn slice(&self, start: usize, end: usize) -> Section {
        Section {
            ring: self.ring.clone(),
            comps: self.comps[start..end].to_vec(),
        }
    }

    pub fn embed(&self, target: &Ring) -> Result<Section> {
        Ok(Section {
            ring: target.clone(),
            comps: self
                .comps
                .iter()
                .map(|c| c.embed(target))
                .collect::<Result<_>>()?,
        })
    }
}

/// Prints as a combination of frame sections, e.g. `x*e1 + (y + 1)*e2`.
impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .comps
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let s = c.to_string();
                if s == "1" {
                    format!("e{}", i + 1)
                } else if s == "-1" {
                    format!("-e{}", i + 1)
                } else if c.num_terms() == 1 {
                    format!("{s}*e{}", i + 1)
                } else {
                    format!("({s})*e{}", i + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl fmt::Debug for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Section({self})")
    }
}
