//! Exact symbolic computation with left-symmetric algebroids over
//! polynomial coordinate rings.

pub mod algebroid;
pub mod cohomology;
pub mod constructions;
pub mod deformations;
pub mod error;
pub mod instances;
pub mod multivector;
pub mod polyring;
pub mod random;
pub mod report;
pub mod representation;

pub use algebroid::{Anchored, FormCochain, LSAlgebroid, LieAlgebroid, Section};
pub use error::{Error, Result};
pub use polyring::{parse_poly, rat, Poly, PolyMatrix, Rational, Ring, VectorField};
pub use report::{CheckRecord, Report, Status, Witness};
pub use representation::Representation;
