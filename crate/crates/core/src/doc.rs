//! JSON document schemas, conversions to core types, and canonical emission.
//!
//! Rationals travel as reduced `"p/q"` strings (plain `"p"` for integers);
//! bracket tables are sparse with 0-based indices and automatic antisymmetric
//! completion. Maps use sorted keys and structs serialize in declaration
//! order, so emitted documents are byte-stable and re-parse to equal values.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactla::{vec_is_zero, vec_zero, Matrix, Scalar};
use crate::lie_bridge::{LieCochain, LieRepPair, LieRepresentation};
use crate::lts::{Bivector, LieStructure, LtsStructure};
use crate::operators::PreLts;
use crate::reps::{LtsRepPair, LtsRepresentation};
use crate::{Error, Result};

/// Sparse bracket or product entry: `value` maps a basis index (as a string
/// key) to a coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub args: Vec<usize>,
    pub value: BTreeMap<String, Scalar>,
}

fn value_to_vec(dim: usize, value: &BTreeMap<String, Scalar>) -> Result<Vec<Scalar>> {
    let mut out = vec_zero(dim);
    for (k, v) in value {
        let idx: usize = k
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad basis index key `{k}`")))?;
        if idx >= dim {
            return Err(Error::InvalidInput(format!(
                "basis index {idx} out of range for dim {dim}"
            )));
        }
        out[idx] = v.clone();
    }
    Ok(out)
}

fn vec_to_value(v: &[Scalar]) -> BTreeMap<String, Scalar> {
    v.iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| (i.to_string(), s.clone()))
        .collect()
}

/// A ternary bracket table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraDoc {
    pub fn to_lts(&self) -> Result<LtsStructure> {
        let mut assignments = Vec::with_capacity(self.brackets.len());
        for e in &self.brackets {
            let [i, j, k]: [usize; 3] = e
                .args
                .clone()
                .try_into()
                .map_err(|_| Error::InvalidInput("ternary bracket needs 3 args".into()))?;
            assignments.push((i, j, k, value_to_vec(self.dim, &e.value)?));
        }
        LtsStructure::from_assignments(self.dim, &assignments)
    }

    pub fn from_lts(a: &LtsStructure) -> Self {
        let n = a.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let v = a.bracket_constants(i, j, k);
                    if !vec_is_zero(v) {
                        brackets.push(BracketEntry {
                            args: vec![i, j, k],
                            value: vec_to_value(v),
                        });
                    }
                }
            }
        }
        AlgebraDoc { dim: n, brackets }
    }
}

/// A binary bracket table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieAlgebraDoc {
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

impl LieAlgebraDoc {
    pub fn to_lie(&self) -> Result<LieStructure> {
        let mut assignments = Vec::with_capacity(self.brackets.len());
        for e in &self.brackets {
            let [i, j]: [usize; 2] = e
                .args
                .clone()
                .try_into()
                .map_err(|_| Error::InvalidInput("binary bracket needs 2 args".into()))?;
            assignments.push((i, j, value_to_vec(self.dim, &e.value)?));
        }
        LieStructure::from_assignments(self.dim, &assignments)
    }

    pub fn from_lie(g: &LieStructure) -> Self {
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = g.bracket_constants(i, j);
                if !vec_is_zero(v) {
                    brackets.push(BracketEntry {
                        args: vec![i, j],
                        value: vec_to_value(v),
                    });
                }
            }
        }
        LieAlgebraDoc { dim: n, brackets }
    }
}

/// One `θ(e_i, e_j)` block of a representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaEntry {
    pub pair: [usize; 2],
    pub matrix: Vec<Vec<Scalar>>,
}

/// A triple-system representation attached to an algebra document; omitted
/// pairs act as zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDoc {
    pub module_dim: usize,
    #[serde(default)]
    pub theta: Vec<ThetaEntry>,
}

impl RepresentationDoc {
    pub fn to_rep(&self, algebra: LtsStructure) -> Result<LtsRepresentation> {
        let mut entries = Vec::with_capacity(self.theta.len());
        for e in &self.theta {
            entries.push((
                (e.pair[0], e.pair[1]),
                Matrix::from_rows(e.matrix.clone())
                    .and_then(|m| expect_shape(m, self.module_dim, self.module_dim))?,
            ));
        }
        LtsRepresentation::from_entries(algebra, self.module_dim, &entries)
    }

    pub fn from_rep(r: &LtsRepresentation) -> Self {
        let n = r.algebra().dim();
        let mut theta = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let m = r.theta_basis(i, j);
                if !m.is_zero() {
                    theta.push(ThetaEntry {
                        pair: [i, j],
                        matrix: matrix_rows(m),
                    });
                }
            }
        }
        RepresentationDoc {
            module_dim: r.module_dim(),
            theta,
        }
    }
}

/// A Lie representation: one dense `module_dim x module_dim` matrix per basis
/// element of the algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieRepresentationDoc {
    pub module_dim: usize,
    pub rho: Vec<Vec<Vec<Scalar>>>,
}

impl LieRepresentationDoc {
    pub fn to_rep(&self, algebra: LieStructure) -> Result<LieRepresentation> {
        let rho: Result<Vec<Matrix>> = self
            .rho
            .iter()
            .map(|rows| {
                Matrix::from_rows(rows.clone())
                    .and_then(|m| expect_shape(m, self.module_dim, self.module_dim))
            })
            .collect();
        LieRepresentation::new(algebra, self.module_dim, rho?)
    }

    pub fn from_rep(r: &LieRepresentation) -> Self {
        LieRepresentationDoc {
            module_dim: r.module_dim(),
            rho: (0..r.algebra().dim())
                .map(|i| matrix_rows(r.rho_basis(i)))
                .collect(),
        }
    }
}

/// A dense rational matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Scalar>>,
}

impl MatrixDoc {
    pub fn to_matrix(&self) -> Result<Matrix> {
        let m = Matrix::from_rows(self.entries.clone())?;
        expect_shape(m, self.rows, self.cols)
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        MatrixDoc {
            rows: m.rows(),
            cols: m.cols(),
            entries: matrix_rows(m),
        }
    }
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<Scalar>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

fn expect_shape(m: Matrix, rows: usize, cols: usize) -> Result<Matrix> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::InvalidInput(format!(
            "matrix declared {rows}x{cols} but has {}x{} entries",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

/// A bivector as sparse strict-upper-triangle coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivectorDoc {
    pub dim: usize,
    #[serde(default)]
    pub coeffs: Vec<WedgeEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeEntry {
    pub pair: [usize; 2],
    pub value: Scalar,
}

impl BivectorDoc {
    pub fn to_bivector(&self) -> Result<Bivector> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for e in &self.coeffs {
            let (i, j) = (e.pair[0], e.pair[1]);
            if i >= self.dim || j >= self.dim || i == j {
                return Err(Error::InvalidInput(format!(
                    "wedge pair ({i},{j}) invalid for dim {}",
                    self.dim
                )));
            }
            *m.at_mut(i, j) = e.value.clone();
            *m.at_mut(j, i) = -&e.value;
        }
        Bivector::from_matrix(m)
    }

    pub fn from_bivector(x: &Bivector) -> Self {
        BivectorDoc {
            dim: x.dim(),
            coeffs: x
                .upper_terms()
                .into_iter()
                .map(|(i, j, value)| WedgeEntry { pair: [i, j], value })
                .collect(),
        }
    }
}

/// A ternary product table without antisymmetric completion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreLtsDoc {
    pub dim: usize,
    #[serde(default)]
    pub products: Vec<BracketEntry>,
}

impl PreLtsDoc {
    pub fn to_prelts(&self) -> Result<PreLts> {
        let mut assignments = Vec::with_capacity(self.products.len());
        for e in &self.products {
            let [i, j, k]: [usize; 3] = e
                .args
                .clone()
                .try_into()
                .map_err(|_| Error::InvalidInput("ternary product needs 3 args".into()))?;
            assignments.push((i, j, k, value_to_vec(self.dim, &e.value)?));
        }
        PreLts::from_assignments(self.dim, &assignments)
    }
}

/// An alternating cochain: one coefficient chunk (length = target dim) per
/// increasing index tuple, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainDoc {
    pub degree: usize,
    pub components: Vec<Vec<Scalar>>,
}

impl CochainDoc {
    pub fn to_lie_cochain(&self, source_dim: usize, target_dim: usize) -> Result<LieCochain> {
        let comp: Vec<Scalar> = self.components.iter().flatten().cloned().collect();
        for chunk in &self.components {
            if chunk.len() != target_dim {
                return Err(Error::InvalidInput(format!(
                    "cochain chunk of length {}, target dim {target_dim}",
                    chunk.len()
                )));
            }
        }
        LieCochain::from_components(self.degree, source_dim, target_dim, comp)
    }
}

/// A bundle of optional sections; commands pick the ones they need and reject
/// bundles missing required parts.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Document {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lie_algebra: Option<LieAlgebraDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lie_representation: Option<LieRepresentationDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operator: Option<MatrixDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target_operator: Option<MatrixDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nijenhuis: Option<MatrixDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prelts: Option<PreLtsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<MatrixDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<MatrixDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bivector: Option<BivectorDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<MatrixDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_coefficients: Option<Vec<MatrixDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub higher_phi: Option<Vec<MatrixDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub higher_psi: Option<Vec<MatrixDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cochain: Option<CochainDoc>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::InvalidInput(format!(
                "malformed JSON at line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    /// Canonical emission: pretty JSON with sorted keys and a trailing
    /// newline.
    pub fn emit(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable");
        let mut s = serde_json::to_string_pretty(&value).expect("serializable");
        s.push('\n');
        s
    }

    pub fn require_lts(&self) -> Result<LtsStructure> {
        self.algebra
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("document has no `algebra` section".into()))?
            .to_lts()
    }

    /// The pair of the document: explicit representation when present, the
    /// adjoint one otherwise.
    pub fn require_pair(&self) -> Result<LtsRepPair> {
        let algebra = self.require_lts()?;
        match &self.representation {
            Some(r) => Ok(LtsRepPair::new(r.to_rep(algebra)?)),
            None => LtsRepPair::adjoint(algebra),
        }
    }

    pub fn require_lie(&self) -> Result<LieStructure> {
        self.lie_algebra
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("document has no `lie_algebra` section".into()))?
            .to_lie()
    }

    pub fn require_lie_pair(&self) -> Result<LieRepPair> {
        let algebra = self.require_lie()?;
        match &self.lie_representation {
            Some(r) => LieRepPair::new(r.to_rep(algebra)?),
            None => LieRepPair::adjoint(algebra),
        }
    }

    pub fn require_operator(&self) -> Result<Matrix> {
        self.operator
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("document has no `operator` section".into()))?
            .to_matrix()
    }

    pub fn from_lts_pair(pair: &LtsRepPair) -> Self {
        Document {
            algebra: Some(AlgebraDoc::from_lts(pair.algebra())),
            representation: Some(RepresentationDoc::from_rep(pair.rep())),
            ..Document::default()
        }
    }
}
