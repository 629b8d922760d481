//! Representations of bound quiver algebras and module-level computations.

mod hom;
mod iso;
mod rep;
mod sub;
mod submodules;
mod tau;

use std::sync::Arc;

pub use hom::{hom_space, HomSpace, Morphism};
pub use iso::{
    analyse_end, decompose, find_epimorphism, find_monomorphism, is_brick, is_indecomposable, is_isomorphic,
    search_hom, EndAnalysis, END_LIMIT, SEARCH_LIMIT,
};
pub use rep::{ArrowMatrix, Representation, RepresentationData};
pub use sub::{layer_label, quotient_by, radical_layers, radical_top, reject, trace, RadicalTop, Submodule};
pub use submodules::{all_subspaces, enumerate_submodules, SUBMODULE_LIMIT};
pub use tau::{ar_translate, is_tau_rigid, projective_cover, ProjectiveCover};

use crate::algebra::BoundQuiverAlgebra;
use crate::linalg::{Field, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("representations belong to different algebras")]
    AlgebraMismatch,
    #[error("malformed representation: {0}")]
    Shape(String),
    #[error("relation {0} does not vanish")]
    RelationViolated(String),
    #[error("subspace family is not a submodule")]
    NotASubmodule,
    #[error("operation needs a prime field")]
    NeedsPrimeField,
    #[error("endomorphism algebra of dimension {dim} exceeds the limit {limit}")]
    EndTooLarge { dim: usize, limit: usize },
    #[error("combination search over a {hom_dim}-dimensional hom space needs {points} points")]
    SearchTooLarge { hom_dim: usize, points: u64 },
    #[error("{candidates} candidate subspace tuples exceed the limit {limit}")]
    SubmoduleEnumerationTooLarge { candidates: u64, limit: u64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// One simple and one indecomposable projective per vertex.
pub fn simples_and_projectives(
    algebra: &Arc<BoundQuiverAlgebra>,
    field: Field,
) -> (Vec<Representation>, Vec<Representation>) {
    let n = algebra.vertex_count();
    let simples = (0..n)
        .map(|v| Representation::simple(algebra.clone(), field, v))
        .collect();
    let projectives = (0..n)
        .map(|v| Representation::projective(algebra.clone(), field, v))
        .collect();
    (simples, projectives)
}
