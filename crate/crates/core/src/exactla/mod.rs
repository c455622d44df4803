//! Exact linear algebra over ℚ and 𝔽_p: scalars, dense matrices, canonical
//! (RREF) subspaces and invariant-subspace lattices.

pub mod lattice;
mod matrix;
mod scalar;
mod subspace;
pub mod vector;

pub use lattice::{enumerate_invariant_subspaces, invariant_closure, EnumCaps};
pub use matrix::{rref, Matrix};
pub use scalar::{Field, Scalar};
pub use subspace::{contains, intersect_spaces, kernel, sum_spaces, Subspace};
pub(crate) use subspace::Echelon;
pub use vector::Vector;
