//! Crate-wide error type.

use thiserror::Error;

/// Errors shared by all modules.
///
/// Identity checks never error on mathematical failure (they return
/// structured reports), so these variants cover shape mismatches, violated
/// preconditions and malformed input only.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ambient dimensions disagree: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("subspace is not contained in the reference space")]
    NotContained,
    #[error("cochain degree must be odd and >= 1, got {0}")]
    EvenDegree(usize),
    #[error("not a Lie algebra: {0}")]
    NotALieAlgebra(String),
    #[error("not a Lie triple system: {0}")]
    NotAnLts(String),
    #[error("representation axioms fail: {0}")]
    InvalidRepresentation(String),
    #[error("not an O-operator: {0}")]
    NotAnOOperator(String),
    #[error("not a Nijenhuis operator: {0}")]
    NotNijenhuis(String),
    #[error("not a pre-Lie triple system: {0}")]
    NotAPreLts(String),
    #[error("psi is not invertible")]
    PsiNotInvertible,
    #[error("not a morphism of O-operators: {0}")]
    NotAMorphism(String),
    #[error("deformation series do not share a base operator")]
    BaseMismatch,
    #[error("series constant term is not invertible")]
    NotInvertibleSeries,
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("not an O-operator on the Lie pair: {0}")]
    NotALieOOperator(String),
    #[error("conflicting structure constants: {0}")]
    ConflictingBrackets(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
