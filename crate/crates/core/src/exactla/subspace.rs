//! Subspaces of ℚⁿ given by explicit bases.

use serde::{Deserialize, Serialize};

use super::matrix::{vec_is_zero, Matrix};
use super::scalar::Scalar;
use crate::{Error, Result};

/// A linear subspace of ℚ^ambient, stored as a list of independent basis
/// vectors. Constructed through [`Subspace::from_spanning`] (or as the output
/// of kernel/image computations) the basis is in a reduced-echelon-derived
/// canonical form, so equal subspaces have identical bases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Matrix::identity(ambient_dim).image_basis()
    }

    /// Canonicalizes an arbitrary spanning set.
    pub fn from_spanning(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let m = Matrix::from_columns(ambient_dim, vectors)?;
        Ok(m.image_basis())
    }

    /// Trusted constructor: callers guarantee independence.
    pub(crate) fn from_basis_unchecked(ambient_dim: usize, basis: Vec<Vec<Scalar>>) -> Self {
        debug_assert!(basis.iter().all(|v| v.len() == ambient_dim));
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.basis).expect("consistent basis")
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, v.len()));
        }
        if vec_is_zero(v) {
            return Ok(true);
        }
        if self.basis.is_empty() {
            return Ok(false);
        }
        Ok(self.basis_matrix().solve(v)?.is_some())
    }

    pub fn contains_space(&self, other: &Subspace) -> Result<bool> {
        if other.ambient_dim != self.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        for v in &other.basis {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `dim z - dim b` after checking `b ⊆ z` and matching ambients.
pub fn quotient_dim(z: &Subspace, b: &Subspace) -> Result<usize> {
    if z.ambient_dim() != b.ambient_dim() {
        return Err(Error::AmbientMismatch(z.ambient_dim(), b.ambient_dim()));
    }
    if !z.contains_space(b)? {
        return Err(Error::NotContained);
    }
    Ok(z.dim() - b.dim())
}
