//! Exact linear algebra over ℚ.

use num_traits::{One, Zero};

use super::Rational;

/// Reduced row echelon form, returning the pivot columns.
pub fn rref(matrix: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == matrix.len() {
            break;
        }
        let Some(p) = (row..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(row, p);
        let inv = matrix[row][col].recip();
        for v in matrix[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = matrix[row].clone();
        for (r, other) in matrix.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (v, pv) in other.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Exact rank and a kernel basis of a rational matrix with `cols` columns.
///
/// Rank plus the number of kernel vectors always equals `cols`.
pub fn rational_kernel_and_rank(
    matrix: &[Vec<Rational>],
    cols: usize,
) -> (usize, Vec<Vec<Rational>>) {
    let mut work: Vec<Vec<Rational>> = matrix.to_vec();
    for row in &work {
        assert_eq!(row.len(), cols, "ragged rational matrix");
    }
    let pivots = rref(&mut work, cols);
    let rank = pivots.len();
    let mut kernel = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -work[r][free].clone();
        }
        kernel.push(v);
    }
    (rank, kernel)
}

pub fn rank(matrix: &[Vec<Rational>], cols: usize) -> usize {
    let mut work = matrix.to_vec();
    rref(&mut work, cols).len()
}
