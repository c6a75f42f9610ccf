use std::fmt;

use super::{Poly, Ring};
use crate::error::{Error, Result};

/// A polynomial vector field Σ X^μ ∂/∂x_μ, acting on polynomials as a derivation.
#[derive(Clone, PartialEq, Eq)]
pub struct VectorField {
    ring: Ring,
    components: Vec<Poly>,
}

impl VectorField {
    pub fn new(ring: &Ring, components: Vec<Poly>) -> Result<Self> {
        if components.len() != ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "vector field has {} components, ring has {} coordinates",
                components.len(),
                ring.nvars()
            )));
        }
        if components.iter().any(|c| c.ring() != ring) {
            return Err(Error::DimensionMismatch(
                "vector field component from another ring".into(),
            ));
        }
        Ok(VectorField {
            ring: ring.clone(),
            components,
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        VectorField {
            ring: ring.clone(),
            components: vec![Poly::zero(ring); ring.nvars()],
        }
    }

    /// The coordinate field ∂/∂x_mu.
    pub fn coordinate(ring: &Ring, mu: usize) -> Self {
        let mut v = Self::zero(ring);
        v.components[mu] = Poly::one(ring);
        v
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    /// X(f) = Σ_μ X^μ ∂f/∂x_μ.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        if f.ring() != &self.ring {
            return Err(Error::DimensionMismatch(format!(
                "vector field over {:?} applied to polynomial over {:?}",
                self.ring,
                f.ring()
            )));
        }
        let mut out = Poly::zero(&self.ring);
        for (mu, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = f.partial(mu)?;
            if !d.is_zero() {
                out += c * &d;
            }
        }
        Ok(out)
    }

    /// Infallible application for callers that already validated the ring.
    pub(crate) fn act(&self, f: &Poly) -> Poly {
        self.apply(f).expect("vector field applied across rings")
    }

    /// Commutator [X, Y] with components X(Y^μ) − Y(X^μ).
    pub fn bracket(&self, other: &VectorField) -> Result<VectorField> {
        if self.ring != other.ring {
            return Err(Error::DimensionMismatch(
                "vector fields over different rings".into(),
            ));
        }
        let components = (0..self.ring.nvars())
            .map(|mu| Ok(self.apply(&other.components[mu])? - other.apply(&self.components[mu])?))
            .collect::<Result<Vec<_>>>()?;
        Ok(VectorField {
            ring: self.ring.clone(),
            components,
        })
    }

    pub fn scale(&self, f: &Poly) -> VectorField {
        VectorField {
            ring: self.ring.clone(),
            components: self.components.iter().map(|c| c * f).collect(),
        }
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField {
            ring: self.ring.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        VectorField {
            ring: self.ring.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> VectorField {
        VectorField {
            ring: self.ring.clone(),
            components: self.components.iter().map(|c| -c).collect(),
        }
    }

    pub fn embed(&self, target: &Ring) -> Result<VectorField> {
        let mut components = self
            .components
            .iter()
            .map(|c| c.embed(target))
            .collect::<Result<Vec<_>>>()?;
        components.resize(target.nvars(), Poly::zero(target));
        Ok(VectorField {
            ring: target.clone(),
            components,
        })
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .zip(self.ring.names())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| {
                if c.num_terms() == 1 {
                    format!("{c}*d/d{name}")
                } else {
                    format!("({c})*d/d{name}")
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

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn ring() -> Ring {
        Ring::new(&["x", "y"]).unwrap()
    }

    fn vf(r: &Ring, comps: &[&str]) -> VectorField {
        VectorField::new(r, comps.iter().map(|s| parse_poly(s, r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn euler_field_on_linear() {
        let r = ring();
        let e = vf(&r, &["x", "0"]);
        assert_eq!(e.apply(&Poly::var(&r, 0)).unwrap(), Poly::var(&r, 0));
    }

    #[test]
    fn sum_of_coordinate_fields() {
        let r = ring();
        let v = vf(&r, &["1", "1"]);
        let f = parse_poly("x*y", &r).unwrap();
        assert_eq!(v.apply(&f).unwrap(), parse_poly("x + y", &r).unwrap());
    }

    #[test]
    fn componentwise_rule() {
        let r = ring();
        let v = vf(&r, &["y", "0"]);
        let f = parse_poly("x^2", &r).unwrap();
        assert_eq!(v.apply(&f).unwrap(), parse_poly("2*x*y", &r).unwrap());
    }

    #[test]
    fn brackets() {
        let r = ring();
        let dx = VectorField::coordinate(&r, 0);
        let dy = VectorField::coordinate(&r, 1);
        assert!(dx.bracket(&dy).unwrap().is_zero());
        let xdx = vf(&r, &["x", "0"]);
        assert_eq!(xdx.bracket(&dx).unwrap(), dx.neg());
        let w = vf(&r, &["x*y^2", "x - y"]);
        assert!(w.bracket(&w).unwrap().is_zero());
    }

    #[test]
    fn dimension_mismatch() {
        let r = ring();
        let s = Ring::new(&["x"]).unwrap();
        let v = VectorField::coordinate(&r, 0);
        assert!(matches!(
            v.apply(&Poly::var(&s, 0)),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(VectorField::new(&r, vec![Poly::zero(&r)]).is_err());
    }
}
