//! Quivers with monomial relations and their combinatorial predicates.
//!
//! Relations compose left to right: `[a, b]` is the path "a then b", so the
//! target of `a` is the source of `b`.

mod criteria;
mod quiver;
mod strings;

pub use criteria::{
    ClassificationReport, Criterion, DistributivityWitness, LrdWitness, StringAlgebraCheck, StringViolation,
};
pub use quiver::{Arrow, BoundQuiverAlgebra, MonomialRelation, Path, Quiver};
pub use strings::{Band, Letter, StringWalk};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("duplicate vertex label {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate arrow name {0:?}")]
    DuplicateArrow(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("relation {0:?} is not a path")]
    RelationNotAPath(Vec<String>),
    #[error("relation consisting of the single arrow {0:?} is not admissible")]
    ArrowInIdeal(String),
    #[error("not admissible: the cycle {} survives all relations", .0.join("·"))]
    NotAdmissible(Vec<String>),
    #[error("not a string algebra: {0}")]
    NotStringAlgebra(String),
    #[error("representation-infinite: band {0}")]
    BandPresent(String),
}

#[cfg(test)]
mod tests;
