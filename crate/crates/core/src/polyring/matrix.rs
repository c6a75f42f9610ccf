use std::fmt;

use num_traits::{Signed, Zero};

use super::{Poly, Rational, Ring, VectorField};
use crate::error::{Error, Result};

/// Dense matrix of polynomials, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Poly::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        Self::scalar(ring, n, &Poly::one(ring))
    }

    pub fn scalar(ring: &Ring, n: usize, value: &Poly) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, value.clone());
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        let entries: Vec<Poly> = rows.into_iter().flatten().collect();
        if entries.iter().any(|p| p.ring() != ring) {
            return Err(Error::DimensionMismatch(
                "matrix entry from another ring".into(),
            ));
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    /// Builds a matrix whose j-th column is `columns[j]`.
    pub fn from_columns(ring: &Ring, rows: usize, columns: &[Vec<Poly>]) -> Result<Self> {
        let mut m = Self::zero(ring, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, p) in col.iter().enumerate() {
                m.set(i, j, p.clone());
            }
        }
        Ok(m)
    }

    pub fn diagonal(ring: &Ring, diag: &[Poly]) -> Self {
        let mut m = Self::zero(ring, diag.len(), diag.len());
        for (i, p) in diag.iter().enumerate() {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Poly) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Poly> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(Poly::is_constant)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = Self::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn zip_with(&self, other: &PolyMatrix, f: impl Fn(&Poly, &Poly) -> Poly) -> Result<PolyMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|p| -p)
    }

    pub fn scale(&self, f: &Poly) -> PolyMatrix {
        self.map(|p| p * f)
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Entrywise application of a vector field.
    pub fn apply_field(&self, field: &VectorField) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|p| field.apply(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(&self.ring);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Poly]) -> Result<Vec<Poly>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a matrix with {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Poly::zero(&self.ring);
                for (k, vk) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() && !vk.is_zero() {
                        acc += a * vk;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn trace(&self) -> Poly {
        let mut acc = Poly::zero(&self.ring);
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    /// Block matrix [[a, b], [c, d]].
    pub fn block(
        a: &PolyMatrix,
        b: &PolyMatrix,
        c: &PolyMatrix,
        d: &PolyMatrix,
    ) -> Result<PolyMatrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::DimensionMismatch("inconsistent block sizes".into()));
        }
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        let mut m = Self::zero(&a.ring, rows, cols);
        for (blk, r0, c0) in [
            (a, 0, 0),
            (b, 0, a.cols),
            (c, a.rows, 0),
            (d, a.rows, a.cols),
        ] {
            for i in 0..blk.rows {
                for j in 0..blk.cols {
                    m.set(r0 + i, c0 + j, blk.get(i, j).clone());
                }
            }
        }
        Ok(m)
    }

    /// Characteristic-polynomial data by the Faddeev–LeVerrier recursion.
    ///
    /// Returns `(det, adjugate)`. Only divisions by small integers occur, so
    /// the computation stays inside ℚ[x].
    fn det_and_adjugate(&self) -> Result<(Poly, PolyMatrix)> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok((Poly::one(&self.ring), self.clone()));
        }
        let ident = Self::identity(&self.ring, n);
        let mut m_k = Self::zero(&self.ring, n, n);
        let mut c = Poly::one(&self.ring); // c_{n-k+1}, starting with c_n = 1
        for k in 1..=n {
            m_k = self.mul(&m_k)?.add(&ident.scale(&c))?;
            let am = self.mul(&m_k)?;
            c = am
                .trace()
                .scale(&(-Rational::from_integer((k as i64).into()).recip()));
        }
        let sign_det = if n.is_multiple_of(2) {
            Rational::from_integer(1.into())
        } else {
            Rational::from_integer((-1).into())
        };
        let det = c.scale(&sign_det);
        let adj = if n % 2 == 1 { m_k } else { m_k.neg() };
        Ok((det, adj))
    }

    pub fn determinant(&self) -> Result<Poly> {
        Ok(self.det_and_adjugate()?.0)
    }

    pub fn adjugate(&self) -> Result<PolyMatrix> {
        Ok(self.det_and_adjugate()?.1)
    }

    /// Polynomial inverse adj(M)/det(M), refused unless det(M) is a nonzero constant.
    pub fn inverse_adjugate(&self) -> Result<PolyMatrix> {
        let (det, adj) = self.det_and_adjugate()?;
        match det.constant_value() {
            None => Err(Error::NonConstantDeterminant(det.to_string())),
            Some(d) if d.is_zero() => Err(Error::SingularMatrix),
            Some(d) => Ok(adj.map(|p| p.scale(&d.recip()))),
        }
    }

    /// Leading principal minors; all positive certifies positive-definiteness
    /// of a constant symmetric matrix.
    pub fn leading_minors(&self) -> Result<Vec<Poly>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        (1..=self.rows)
            .map(|k| {
                let rows = (0..k)
                    .map(|i| (0..k).map(|j| self.get(i, j).clone()).collect())
                    .collect();
                PolyMatrix::from_rows(&self.ring, rows)?.determinant()
            })
            .collect()
    }

    /// `Some(true)` if constant and positive definite, `Some(false)` if
    /// constant and not, `None` if any entry is non-constant.
    pub fn is_positive_definite(&self) -> Result<Option<bool>> {
        if !self.is_constant() {
            return Ok(None);
        }
        let minors = self.leading_minors()?;
        Ok(Some(minors.iter().all(|m| {
            m.constant_value().is_some_and(|v| v.is_positive())
        })))
    }

    pub fn to_rational(&self) -> Option<Vec<Vec<Rational>>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).constant_value())
                    .collect()
            })
            .collect()
    }

    pub fn embed(&self, target: &Ring) -> Result<PolyMatrix> {
        Ok(PolyMatrix {
            ring: target.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|p| p.embed(target))
                .collect::<Result<_>>()?,
        })
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_poly, rat};

    fn m(r: &Ring, rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            r,
            rows.iter()
                .map(|row| row.iter().map(|s| parse_poly(s, r).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn inverse_of_identity() {
        let r = Ring::point();
        let i = PolyMatrix::identity(&r, 2);
        assert_eq!(i.inverse_adjugate().unwrap(), i);
    }

    #[test]
    fn inverse_of_diagonal() {
        let r = Ring::point();
        let d = m(&r, &[&["2", "0"], &["0", "3"]]);
        let inv = d.inverse_adjugate().unwrap();
        assert_eq!(inv, m(&r, &[&["1/2", "0"], &["0", "1/3"]]));
    }

    #[test]
    fn unipotent_inverse() {
        let r = Ring::new(&["x"]).unwrap();
        let a = m(&r, &[&["1", "x"], &["0", "1"]]);
        let inv = a.inverse_adjugate().unwrap();
        assert_eq!(inv, m(&r, &[&["1", "-x"], &["0", "1"]]));
        assert_eq!(a.mul(&inv).unwrap(), PolyMatrix::identity(&r, 2));
    }

    #[test]
    fn refusals() {
        let r = Ring::new(&["x"]).unwrap();
        assert!(matches!(
            m(&r, &[&["x", "0"], &["0", "1"]]).inverse_adjugate(),
            Err(Error::NonConstantDeterminant(_))
        ));
        assert_eq!(
            m(&r, &[&["1", "2"], &["2", "4"]]).inverse_adjugate(),
            Err(Error::SingularMatrix)
        );
        assert!(matches!(
            m(&r, &[&["1", "2"]]).inverse_adjugate(),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let a = m(&r, &[&["x", "1", "0"], &["y", "2", "x"], &["1", "y", "3"]]);
        // cofactor expansion along the first row, by hand
        let expected = parse_poly("x*(6 - x*y) - (3*y - x)", &r).unwrap();
        assert_eq!(a.determinant().unwrap(), expected);
        let adj = a.adjugate().unwrap();
        assert_eq!(a.mul(&adj).unwrap(), PolyMatrix::scalar(&r, 3, &expected));
    }

    #[test]
    fn positive_definiteness() {
        let r = Ring::point();
        assert_eq!(
            m(&r, &[&["2", "1"], &["1", "2"]])
                .is_positive_definite()
                .unwrap(),
            Some(true)
        );
        assert_eq!(
            m(&r, &[&["1", "0"], &["0", "-1"]])
                .is_positive_definite()
                .unwrap(),
            Some(false)
        );
        let rx = Ring::new(&["x"]).unwrap();
        assert_eq!(m(&rx, &[&["x"]]).is_positive_definite().unwrap(), None);
        assert_eq!(
            m(&r, &[&["3"]]).leading_minors().unwrap()[0].constant_value(),
            Some(rat(3, 1))
        );
    }
}
