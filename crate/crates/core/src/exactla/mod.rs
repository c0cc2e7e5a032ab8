//! Exact rational linear algebra: scalars, matrices, subspaces.
//!
//! All eliminations are fraction-free (Bareiss) over the integers after
//! clearing denominators, with a rational back-substitution pass producing the
//! unique reduced row echelon form. Kernel and image bases are derived from the
//! RREF, so identical inputs always produce bit-identical outputs.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{
    basis_vec, vec_add, vec_add_scaled, vec_is_zero, vec_neg, vec_scale, vec_sub, vec_zero,
    Matrix, Rref,
};
pub use scalar::Scalar;
pub use subspace::{quotient_dim, Subspace};
