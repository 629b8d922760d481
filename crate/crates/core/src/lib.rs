//! Lattices of pretorsion, pretorsion-free and torsion classes of module
//! categories over bound quiver algebras with monomial relations.

pub mod algebra;
pub mod format;
pub mod indec;
pub mod lattice;
pub mod linalg;
pub mod module;
pub mod pretorsion;
