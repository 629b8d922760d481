//! Exact dense linear algebra over `Q` and `GF(p)`.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{Matrix, RowReduction};
pub use scalar::{Field, Scalar, MAX_PRIME};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("{0} is not a prime at most {max}", max = MAX_PRIME)]
    InvalidPrime(u32),
    #[error("{value} has no image in {field}")]
    NotRepresentable { value: String, field: Field },
}
