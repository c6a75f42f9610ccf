//! Exact arithmetic kernel: rationals, polynomials, vector fields, matrices,
//! rational linear algebra and the polynomial parser.

mod linalg;
mod matrix;
mod parser;
mod poly;
mod ring;
mod vector_field;

pub use linalg::{rank, rational_kernel_and_rank, rref};
pub use matrix::PolyMatrix;
pub use parser::{parse_poly, parse_poly_with};
pub use poly::{Monomial, Poly};
pub use ring::{Ring, DEFAULT_MAX_DEGREE};
pub use vector_field::VectorField;

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
