use super::{Field, LinalgError, Matrix, Scalar};

/// A subspace of `F^n` stored by its reduced row-echelon basis.
///
/// Two subspaces are equal exactly when their stored bases are equal, so the
/// derived `PartialEq`/`Hash` decide equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let id = Matrix::identity(field, ambient);
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|r| id.row(r).to_vec()).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn from_vectors(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let red = Matrix::from_row_vectors(field, ambient, vectors).row_reduce();
        Subspace {
            field,
            ambient,
            basis: (0..red.rank).map(|r| red.rref.row(r).to_vec()).collect(),
            pivots: red.pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Canonical (reduced echelon) basis.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; the standard vectors at these positions
    /// span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Subspace::from_vectors(self.field, self.ambient, &vs))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // x.A = y.B  <=>  (x, y) in the kernel of [A ; -B]^T
        let a = Matrix::from_row_vectors(self.field, self.ambient, &self.basis);
        let b = Matrix::from_row_vectors(self.field, self.ambient, &other.basis);
        let neg_b = b.scale(&self.field.from_i64(-1));
        let stacked = a.vstack(&neg_b)?.transpose();
        let vecs: Vec<Vec<Scalar>> = stacked
            .null_vectors()
            .into_iter()
            .map(|xy| combine(self.field, self.ambient, &self.basis, &xy[..self.basis.len()]))
            .collect();
        Ok(Subspace::from_vectors(self.field, self.ambient, &vecs))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(self == other)
    }

    /// Residue of `v` after eliminating the pivot coordinates; zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                *x = &*x - &(&c * y);
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the canonical basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the basis with the given coefficients.
    pub fn vector(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        combine(self.field, self.ambient, &self.basis, coeffs)
    }

    /// Image under a linear map given as a matrix with `ambient_dim` columns.
    pub fn map(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        if m.cols() != self.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: m.cols(),
            });
        }
        let images: Vec<Vec<Scalar>> = self.basis.iter().map(|b| m.apply(b)).collect();
        Ok(Subspace::from_vectors(self.field, m.rows(), &images))
    }

    /// Preimage under a linear map with `ambient_dim` rows.
    pub fn preimage(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        if m.rows() != self.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: m.rows(),
            });
        }
        // v in preimage iff every annihilating functional kills m v
        let ann = self.annihilator_matrix();
        if ann.rows() == 0 {
            return Ok(Subspace::full(self.field, m.cols()));
        }
        Ok(ann.mul(m)?.kernel())
    }

    /// Matrix whose rows span the functionals vanishing on the subspace.
    fn annihilator_matrix(&self) -> Matrix {
        if self.basis.is_empty() {
            return Matrix::identity(self.field, self.ambient);
        }
        let basis = Matrix::from_row_vectors(self.field, self.ambient, &self.basis);
        Matrix::from_row_vectors(self.field, self.ambient, &basis.null_vectors())
    }
}

fn combine(field: Field, ambient: usize, basis: &[Vec<Scalar>], coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); ambient];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (x, y) in out.iter_mut().zip(b) {
            *x = &*x + &(c * y);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn sum_is_idempotent() {
        let s = Subspace::from_vectors(Q, 3, &[v(&[1, 2, 0])]);
        assert_eq!(s.sum(&s).unwrap(), s);
    }

    #[test]
    fn coordinate_axes_meet_in_zero() {
        let e1 = Subspace::from_vectors(Q, 2, &[v(&[1, 0])]);
        let e2 = Subspace::from_vectors(Q, 2, &[v(&[0, 1])]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
    }

    #[test]
    fn e1_plus_diagonal_is_full() {
        let e1 = Subspace::from_vectors(Q, 2, &[v(&[1, 0])]);
        let d = Subspace::from_vectors(Q, 2, &[v(&[1, 1])]);
        assert!(e1.sum(&d).unwrap().is_full());
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::from_vectors(Q, 3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_vectors(Q, 3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::from_vectors(Q, 3, &[v(&[0, 1, 0])]));
    }

    #[test]
    fn ambient_mismatch_rejected() {
        let a = Subspace::zero(Q, 2);
        let b = Subspace::zero(Q, 3);
        assert!(a.sum(&b).is_err());
        assert!(a.contains(&b).is_err());
    }

    #[test]
    fn preimage_of_zero_is_kernel() {
        let m = Matrix::from_rows(Q, &[&[1, 1, 0]]);
        let pre = Subspace::zero(Q, 1).preimage(&m).unwrap();
        assert_eq!(pre, m.kernel());
        assert!(Subspace::full(Q, 1).preimage(&m).unwrap().is_full());
    }

    #[test]
    fn coordinates_roundtrip() {
        let s = Subspace::from_vectors(Q, 3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let w = v(&[2, 5, 3]);
        let c = s.coordinates(&w).unwrap();
        assert_eq!(s.vector(&c), w);
        assert!(s.coordinates(&v(&[0, 0, 1])).is_none());
    }
}
