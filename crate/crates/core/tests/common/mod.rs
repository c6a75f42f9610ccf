//! Dense rational oracles for constant structures, written directly from the
//! defining formulas and independent of the library's symbolic paths.
#![allow(dead_code)]

use lsakit::{Anchored, LSAlgebroid, Rational};
use num_traits::Zero;

pub type Vector = Vec<Rational>;
/// `c[i][j][k]`: k-th component of e_i·e_j.
pub type Table = Vec<Vec<Vector>>;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn table_of(a: &LSAlgebroid) -> Table {
    let r = a.rank();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    a.product(i, j)
                        .comps()
                        .iter()
                        .map(|p| p.constant_value().expect("constant"))
                        .collect()
                })
                .collect()
        })
        .collect()
}

pub fn table(r: usize, entries: &[(usize, usize, &[i64])]) -> Table {
    let mut t = vec![vec![vec![Rational::zero(); r]; r]; r];
    for &(i, j, v) in entries {
        t[i][j] = v.iter().map(|&n| q(n)).collect();
    }
    t
}

pub fn unit(r: usize, i: usize) -> Vector {
    let mut v = vec![Rational::zero(); r];
    v[i] = q(1);
    v
}

pub fn add(x: &Vector, y: &Vector) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &Vector, y: &Vector) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn mul(t: &Table, x: &Vector, y: &Vector) -> Vector {
    let r = x.len();
    let mut out = vec![Rational::zero(); t[0][0].len()];
    for i in 0..r {
        for j in 0..y.len() {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += &x[i] * &y[j] * &t[i][j][k];
            }
        }
    }
    out
}

pub fn bracket(t: &Table, x: &Vector, y: &Vector) -> Vector {
    sub(&mul(t, x, y), &mul(t, y, x))
}

pub fn associator(t: &Table, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    sub(&mul(t, &mul(t, x, y), z), &mul(t, x, &mul(t, y, z)))
}

/// Matrix–vector product for dense rational matrices stored by rows.
pub fn mat_vec(m: &[Vector], v: &Vector) -> Vector {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_mul(a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    let n = b[0].len();
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                .collect()
        })
        .collect()
}
