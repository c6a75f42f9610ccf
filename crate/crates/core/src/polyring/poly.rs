use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector of a monomial, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact multivariate polynomial with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(ring: &Ring) -> Self {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, value: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !value.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), value);
        }
        p
    }

    pub fn from_int(ring: &Ring, value: i64) -> Self {
        Self::constant(ring, Rational::from_integer(value.into()))
    }

    /// The coordinate function x_index. Panics if the index is out of range.
    pub fn var(ring: &Ring, index: usize) -> Self {
        assert!(
            index < ring.nvars(),
            "coordinate index {index} out of range"
        );
        let mut exps = vec![0; ring.nvars()];
        exps[index] = 1;
        Self::monomial(ring, Monomial(exps), Rational::one())
    }

    pub fn monomial(ring: &Ring, mono: Monomial, coeff: Rational) -> Self {
        assert_eq!(mono.0.len(), ring.nvars(), "exponent vector length");
        let mut p = Self::zero(ring);
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// The value of a constant polynomial; `None` if any variable occurs.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        if factor.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Poly) {
        assert!(
            self.ring == other.ring,
            "polynomials from different rings: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplication that refuses to exceed `max_degree`.
    pub fn checked_mul(&self, other: &Poly, max_degree: u32) -> Result<Poly> {
        if let (Some(a), Some(b)) = (self.total_degree(), other.total_degree()) {
            if a + b > max_degree {
                return Err(Error::DegreeTooHigh {
                    degree: a + b,
                    max: max_degree,
                });
            }
        }
        Ok(self * other)
    }

    pub fn check_degree(&self, max_degree: u32) -> Result<()> {
        match self.total_degree() {
            Some(d) if d > max_degree => Err(Error::DegreeTooHigh {
                degree: d,
                max: max_degree,
            }),
            _ => Ok(()),
        }
    }

    /// Formal partial derivative with respect to coordinate `mu`.
    pub fn partial(&self, mu: usize) -> Result<Poly> {
        if mu >= self.ring.nvars() {
            return Err(Error::IndexOutOfRange {
                index: mu,
                len: self.ring.nvars(),
            });
        }
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[mu];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[mu] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    /// Re-express this polynomial in a ring whose leading coordinates are ours.
    pub fn embed(&self, target: &Ring) -> Result<Poly> {
        if !self.ring.is_prefix_of(target) {
            return Err(Error::DimensionMismatch(format!(
                "cannot embed {:?} into {:?}",
                self.ring, target
            )));
        }
        let extra = target.nvars() - self.ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.0.clone();
                exps.extend(std::iter::repeat_n(0, extra));
                (Monomial(exps), c.clone())
            })
            .collect();
        Ok(Poly {
            ring: target.clone(),
            terms,
        })
    }

    /// Substitute `value` for the coordinate `var` and drop it; the result
    /// lives in `target`, which must list the remaining coordinates in order.
    pub fn specialize(&self, var: usize, value: &Rational, target: &Ring) -> Result<Poly> {
        if var >= self.ring.nvars() {
            return Err(Error::IndexOutOfRange {
                index: var,
                len: self.ring.nvars(),
            });
        }
        let mut expected: Vec<&String> = self.ring.names().iter().collect();
        expected.remove(var);
        if target.names().iter().collect::<Vec<_>>() != expected {
            return Err(Error::DimensionMismatch(format!(
                "specialization target {:?} does not match {:?} without coordinate {var}",
                target, self.ring
            )));
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = exps.remove(var);
            let factor = num_traits::pow::pow(value.clone(), e as usize);
            out.add_term(Monomial(exps), c * factor);
        }
        Ok(out)
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, ring has {}",
                point.len(),
                self.ring.nvars()
            )));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                t *= num_traits::pow::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Prints in the input grammar, highest graded-lex term first.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            let abs = coeff.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || mono.degree() == 0 {
                factors.push(abs.to_string());
            }
            for (name, &e) in self.ring.names().iter().zip(&mono.0) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = Poly::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &'a Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        self.check_ring(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        *self += &rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        self.check_ring(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl SubAssign<Poly> for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        *self -= &rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_poly, rat};

    fn xy() -> Ring {
        Ring::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn power_rule() {
        let r = xy();
        let p = parse_poly("x^2*y", &r).unwrap();
        assert_eq!(p.partial(0).unwrap(), parse_poly("2*x*y", &r).unwrap());
        assert!(Poly::from_int(&r, 5).partial(1).unwrap().is_zero());
    }

    #[test]
    fn derivative_of_cube() {
        let r = xy();
        let p = parse_poly("(x+y)^3", &r).unwrap();
        // expanded by hand: x^3 + 3x^2y + 3xy^2 + y^3 -> 3x^2 + 6xy + 3y^2
        let expected = parse_poly("3*x^2 + 6*x*y + 3*y^2", &r).unwrap();
        assert_eq!(p.partial(0).unwrap(), expected);
        assert_eq!(p.partial(0).unwrap(), parse_poly("3*(x+y)^2", &r).unwrap());
    }

    #[test]
    fn partial_out_of_range() {
        let r = xy();
        assert_eq!(
            Poly::one(&r).partial(2),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        );
    }

    #[test]
    fn grlex_printing() {
        let r = xy();
        let p = parse_poly("1 - x + 3/2*y*x^2 + y^3", &r).unwrap();
        assert_eq!(p.to_string(), "3/2*x^2*y + y^3 - x + 1");
        let q = parse_poly("-x", &r).unwrap();
        assert_eq!(q.to_string(), "-x");
    }

    #[test]
    fn specialize_and_embed() {
        let r = xy();
        let rt = r.with_parameter("t");
        let p = parse_poly("x + t*y^2", &rt).unwrap();
        let s = p.specialize(2, &rat(2, 1), &r).unwrap();
        assert_eq!(s, parse_poly("x + 2*y^2", &r).unwrap());
        let e = parse_poly("x*y", &r).unwrap().embed(&rt).unwrap();
        assert_eq!(e, parse_poly("x*y", &rt).unwrap());
    }

    #[test]
    fn degree_guard() {
        let r = xy();
        let p = parse_poly("x^10", &r).unwrap();
        assert!(p.checked_mul(&p, 16).is_err());
        assert!(p.checked_mul(&Poly::var(&r, 1), 16).is_ok());
    }
}
