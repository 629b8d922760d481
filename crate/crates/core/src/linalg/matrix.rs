use std::fmt;

use super::{Field, LinalgError, Scalar, Subspace};

/// Dense row-major matrix over a single exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::row_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction {
    pub rref: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from integer rows. All rows must have the same length;
    /// `cols` is needed for the zero-row case.
    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data: entries.iter().map(|&n| field.from_i64(n)).collect(),
        })
    }

    /// Convenience constructor from nested integer rows (panics on ragged input).
    pub fn from_rows(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        let flat: Vec<i64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self::from_i64(field, rows.len(), cols, &flat).expect("shape checked")
    }

    pub fn from_scalars(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if data.iter().any(|s| s.field() != field) {
            return Err(LinalgError::FieldMismatch);
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_row_vectors(field: Field, cols: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            assert_eq!(v.len(), cols, "vector length");
            data.extend(v.iter().cloned());
        }
        Matrix {
            field,
            rows: vectors.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_column_vectors(field: Field, rows: usize, vectors: &[Vec<Scalar>]) -> Self {
        Self::from_row_vectors(field, rows, vectors).transpose()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        debug_assert_eq!(value.field(), self.field);
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    fn check_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        Ok(())
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            data: self.data.iter().map(|a| a * s).collect(),
            ..self.clone()
        }
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Block matrix `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.transpose().vstack(&other.transpose()).map(|m| m.transpose())
    }

    /// Block matrix `[self ; other]`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, other);
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    /// Sub-block with the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Gauss-Jordan elimination to the unique reduced row-echelon form.
    pub fn row_reduce(&self) -> RowReduction {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(lead, j) * &inv;
                m.set(lead, j, v);
            }
            for r in 0..m.rows {
                if r == lead || m.get(r, c).is_zero() {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for j in c..m.cols {
                    let v = m.get(r, j) - &(&factor * m.get(lead, j));
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        RowReduction {
            rank: pivots.len(),
            rref: m,
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Null-space vectors, one per free column `f`, with a 1 in position `f`
    /// and zeros at the other free columns.
    pub fn null_vectors(&self) -> Vec<Vec<Scalar>> {
        let red = self.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !red.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &p) in red.pivots.iter().enumerate() {
                    v[p] = -red.rref.get(i, f);
                }
                v
            })
            .collect()
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.cols, &self.null_vectors())
    }

    pub fn image(&self) -> Subspace {
        let cols: Vec<Vec<Scalar>> = (0..self.cols).map(|c| self.column(c)).collect();
        Subspace::from_vectors(self.field, self.rows, &cols)
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n)).ok()?;
        let red = aug.row_reduce();
        if red.pivots.iter().take(n).copied().ne(0..n) {
            return None;
        }
        let rows: Vec<usize> = (0..n).collect();
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(red.rref.select(&rows, &cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Re-interprets every entry in another field.
    pub fn to_field(&self, field: Field) -> Result<Matrix, LinalgError> {
        let data = self
            .data
            .iter()
            .map(|s| s.to_field(field))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix {
            field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Entries rendered as strings, one inner vector per row.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|s| s.to_string()).collect())
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn identity_is_reduced() {
        let id = Matrix::identity(Q, 2);
        let red = id.row_reduce();
        assert_eq!(red.rref, id);
        assert_eq!(red.rank, 2);
        assert_eq!(red.pivots, vec![0, 1]);
    }

    #[test]
    fn dependent_rows_rank_one() {
        let m = Matrix::from_rows(Q, &[&[1, 2], &[2, 4]]);
        let red = m.row_reduce();
        assert_eq!(red.rank, 1);
        assert_eq!(red.rref, Matrix::from_rows(Q, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn swap_over_gf2() {
        let f = Field::Prime(2);
        let m = Matrix::from_rows(f, &[&[0, 1], &[1, 0]]);
        let red = m.row_reduce();
        assert_eq!(red.rref, Matrix::identity(f, 2));
        assert_eq!(red.rank, 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::zeros(Q, 2, 3).kernel().dim(), 3);
        assert_eq!(Matrix::identity(Q, 3).kernel().dim(), 0);
        let f = Field::Prime(2);
        let k = Matrix::from_rows(f, &[&[1, 1]]).kernel();
        assert_eq!(k, Subspace::from_vectors(f, 2, &[vec![f.one(), f.one()]]));
    }

    #[test]
    fn image_examples() {
        assert_eq!(Matrix::identity(Q, 3).image(), Subspace::full(Q, 3));
        assert_eq!(Matrix::zeros(Q, 3, 2).image(), Subspace::zero(Q, 3));
        let col = Matrix::from_rows(Q, &[&[1], &[1]]);
        assert_eq!(col.image(), Subspace::from_vectors(Q, 2, &[vec![Q.one(), Q.one()]]));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Q, 2));
        assert!(Matrix::from_rows(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn shape_errors() {
        let a = Matrix::zeros(Q, 2, 3);
        assert!(matches!(a.mul(&a), Err(LinalgError::DimensionMismatch { .. })));
        let b = Matrix::zeros(Field::Prime(3), 3, 1);
        assert!(matches!(a.mul(&b), Err(LinalgError::FieldMismatch)));
    }
}
