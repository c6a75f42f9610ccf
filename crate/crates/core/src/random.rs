//! Seeded random samples of polynomials, sections and matrices for property
//! checks. All generators draw from a caller-supplied RNG so that runs are
//! reproducible from a seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebroid::Section;
use crate::polyring::{Monomial, Poly, PolyMatrix, Rational, Ring, VectorField};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A polynomial of total degree at most `max_degree` with small integer
/// coefficients and up to `max_terms` terms.
pub fn random_poly<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &Ring,
    max_degree: u32,
    max_terms: usize,
) -> Poly {
    let mut out = Poly::zero(ring);
    let terms = rng.random_range(0..=max_terms);
    for _ in 0..terms {
        let mut exps = vec![0u32; ring.nvars()];
        let mut budget = rng.random_range(0..=max_degree);
        while budget > 0 && !exps.is_empty() {
            let v = rng.random_range(0..exps.len());
            exps[v] += 1;
            budget -= 1;
        }
        let c: i64 = rng.random_range(-3..=3);
        if c != 0 {
            out += Poly::monomial(ring, Monomial(exps), Rational::from_integer(c.into()));
        }
    }
    out
}

pub fn random_section<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &Ring,
    rank: usize,
    max_degree: u32,
) -> Section {
    Section::new(
        ring,
        (0..rank)
            .map(|_| random_poly(rng, ring, max_degree, 2))
            .collect(),
    )
    .expect("same ring")
}

pub fn random_field<R: Rng + ?Sized>(rng: &mut R, ring: &Ring, max_degree: u32) -> VectorField {
    VectorField::new(
        ring,
        (0..ring.nvars())
            .map(|_| random_poly(rng, ring, max_degree, 2))
            .collect(),
    )
    .expect("same ring")
}

pub fn random_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &Ring,
    rows: usize,
    cols: usize,
    max_degree: u32,
) -> PolyMatrix {
    let entries = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| random_poly(rng, ring, max_degree, 2))
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(ring, entries).expect("rectangular")
}
