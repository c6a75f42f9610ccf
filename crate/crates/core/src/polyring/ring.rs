use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default cap on the total degree accepted at input boundaries.
pub const DEFAULT_MAX_DEGREE: u32 = 16;

/// The coordinate ring ℚ[x_1, …, x_n] of a single affine chart.
///
/// Rings are cheap to clone; every [`Poly`](super::Poly) carries a handle to
/// the ring it lives in so that it can be printed without extra context.
#[derive(Clone)]
pub struct Ring {
    names: Arc<Vec<String>>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(Error::Schema {
                    path: "coordinates".into(),
                    message: format!("`{name}` is not a valid identifier"),
                });
            }
            if out.iter().any(|n| n == name) {
                return Err(Error::Schema {
                    path: "coordinates".into(),
                    message: format!("duplicate coordinate `{name}`"),
                });
            }
            out.push(name.to_string());
        }
        Ok(Ring {
            names: Arc::new(out),
        })
    }

    /// The ring of a point: no coordinates, so polynomials are rationals.
    pub fn point() -> Self {
        Ring {
            names: Arc::new(Vec::new()),
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A ring with one more coordinate appended, used for a formal parameter.
    ///
    /// If `name` is taken, primes are appended until it is fresh.
    pub fn with_parameter(&self, name: &str) -> Ring {
        let mut fresh = name.to_string();
        while self.index_of(&fresh).is_some() {
            fresh.push('_');
        }
        let mut names = (*self.names).clone();
        names.push(fresh);
        Ring {
            names: Arc::new(names),
        }
    }

    /// True when every coordinate of `self` is a leading coordinate of `other`.
    pub fn is_prefix_of(&self, other: &Ring) -> bool {
        self.nvars() <= other.nvars()
            && self
                .names
                .iter()
                .zip(other.names.iter())
                .all(|(a, b)| a == b)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", self.names)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
