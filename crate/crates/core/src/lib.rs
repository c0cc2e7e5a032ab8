//! Exact-arithmetic toolkit for finite-dimensional ternary bracket algebras.
//!
//! Everything here works over ℚ with arbitrary-precision rationals: structure
//! constants, representations and operators are dense tensors of [`exactla::Scalar`],
//! and every identity check is an exact equation over basis tuples. The crate is
//! organized around the following layers:
//!
//! - [`exactla`]: rational matrices, reduced echelon forms, kernels, images,
//!   subspaces and quotient dimensions,
//! - [`lts`] / [`reps`]: Lie triple systems, Lie algebras, representations and
//!   semidirect products as structure-constant data,
//! - [`operators`]: Rota-Baxter and O-operator checkers, Nijenhuis operators,
//!   pre-Lie triple systems and operator morphisms,
//! - [`cohomology`]: odd-degree cochain complexes, coboundary matrices, and the
//!   structures an O-operator induces (bracket, representation, extended complex),
//! - [`deformations`]: infinitesimal/formal deformation checks, Nijenhuis
//!   elements and rigidity certificates,
//! - [`lie_bridge`]: Chevalley-Eilenberg complexes for Lie algebra pairs and the
//!   transfer of cocycles and operators to the associated triple system.
//!
//! Heavy tuple scans run through [`exec`], which uses rayon when the `parallel`
//! feature (default) is enabled and plain loops otherwise. Reports are
//! deterministic either way: witnesses are always the lexicographically smallest
//! failing tuple.

// Dense tensor index math reads best as explicit index loops.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exactla;
pub mod exec;
pub mod report;

pub mod lts;
pub mod reps;

pub mod cohomology;
pub mod deformations;
pub mod lie_bridge;
pub mod operators;

pub mod doc;
pub mod fixtures;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
