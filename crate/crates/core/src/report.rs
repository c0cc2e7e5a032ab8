//! Structured pass/fail reports for identity checks.
//!
//! Checkers never panic on mathematical failure; they return a report naming
//! the first failing basis tuple (lexicographically smallest) together with
//! both side values, so invalid inputs are first-class test subjects.

use serde::{Deserialize, Serialize};

use crate::exactla::Scalar;

/// The smallest failing basis tuple of a check, with both side values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Basis indices of the failing tuple, in the order the identity names them.
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

impl Witness {
    pub fn new(indices: Vec<usize>, lhs: Vec<Scalar>, rhs: Vec<Scalar>) -> Self {
        Witness { indices, lhs, rhs }
    }
}

/// Outcome of scanning one identity over all basis tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    /// Which identity was scanned.
    pub name: String,
    pub passed: bool,
    /// Total number of basis tuples in the scanned domain.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass(name: &str, checked: usize) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: true,
            checked,
            witness: None,
        }
    }

    pub fn fail(name: &str, checked: usize, witness: Witness) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: false,
            checked,
            witness: Some(witness),
        }
    }

    pub fn from_witness(name: &str, checked: usize, witness: Option<Witness>) -> Self {
        match witness {
            None => Self::pass(name, checked),
            Some(w) => Self::fail(name, checked, w),
        }
    }
}
