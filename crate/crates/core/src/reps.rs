//! Representations of Lie triple systems and semidirect products.

use crate::exactla::{vec_zero, Matrix, Scalar};
use crate::exec::{decode_tuple, find_map_first, tuple_count};
use crate::lts::{check_lts_axioms, LtsStructure};
use crate::report::{CheckReport, Witness};
use crate::{Error, Result};

/// A bilinear map `θ: L ⊗ L → End(V)` given by its basis matrices
/// `θ(e_i, e_j)`. The derived action `D(x,y) = θ(y,x) - θ(x,y)` is always
/// computed, never stored or user-supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LtsRepresentation {
    algebra: LtsStructure,
    module_dim: usize,
    theta: Vec<Matrix>,
}

impl LtsRepresentation {
    /// Wraps a full `n x n` grid of `m x m` matrices (row-major over `(i,j)`).
    pub fn new(algebra: LtsStructure, module_dim: usize, theta: Vec<Matrix>) -> Result<Self> {
        let n = algebra.dim();
        if theta.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "{} theta matrices for algebra dim {n}",
                theta.len()
            )));
        }
        for m in &theta {
            if m.rows() != module_dim || m.cols() != module_dim {
                return Err(Error::DimensionMismatch(format!(
                    "theta matrix {}x{} for module dim {module_dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(LtsRepresentation {
            algebra,
            module_dim,
            theta,
        })
    }

    /// Sparse constructor: unlisted pairs act as zero.
    pub fn from_entries(
        algebra: LtsStructure,
        module_dim: usize,
        entries: &[((usize, usize), Matrix)],
    ) -> Result<Self> {
        let n = algebra.dim();
        let mut theta = vec![Matrix::zeros(module_dim, module_dim); n * n];
        for ((i, j), m) in entries {
            if *i >= n || *j >= n {
                return Err(Error::InvalidInput(format!(
                    "theta pair ({i},{j}) out of range for dim {n}"
                )));
            }
            theta[i * n + j] = m.clone();
        }
        Self::new(algebra, module_dim, theta)
    }

    pub fn zero(algebra: LtsStructure, module_dim: usize) -> Self {
        let n = algebra.dim();
        LtsRepresentation {
            module_dim,
            theta: vec![Matrix::zeros(module_dim, module_dim); n * n],
            algebra,
        }
    }

    pub fn algebra(&self) -> &LtsStructure {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn theta_basis(&self, i: usize, j: usize) -> &Matrix {
        &self.theta[i * self.algebra.dim() + j]
    }

    /// `D(e_i, e_j) = θ(e_j, e_i) - θ(e_i, e_j)`.
    pub fn d_basis(&self, i: usize, j: usize) -> Matrix {
        self.theta_basis(j, i)
            .sub(self.theta_basis(i, j))
            .expect("uniform shapes")
    }

    /// Bilinear extension of θ.
    pub fn theta(&self, x: &[Scalar], y: &[Scalar]) -> Result<Matrix> {
        let n = self.algebra.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "theta arguments of lengths {} and {} for dim {n}",
                x.len(),
                y.len()
            )));
        }
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                let m = self.theta_basis(i, j);
                if m.is_zero() {
                    continue;
                }
                out = out.add(&m.scale(&s)).expect("uniform shapes");
            }
        }
        Ok(out)
    }

    /// Bilinear extension of `D(x,y) = θ(y,x) - θ(x,y)`.
    pub fn d(&self, x: &[Scalar], y: &[Scalar]) -> Result<Matrix> {
        Ok(self.theta(y, x)?.sub(&self.theta(x, y)?).expect("uniform shapes"))
    }

    /// `Σ_{i<j} X_ij D(e_i, e_j)` for a bivector in the ordered-pair convention.
    pub fn d_of_bivector(&self, x: &crate::lts::Bivector) -> Result<Matrix> {
        if x.dim() != self.algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "bivector dim {} vs algebra dim {}",
                x.dim(),
                self.algebra.dim()
            )));
        }
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, j, coeff) in x.upper_terms() {
            out = out.add(&self.d_basis(i, j).scale(&coeff)).expect("uniform shapes");
        }
        Ok(out)
    }
}

/// An algebra together with one of its representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LtsRepPair {
    rep: LtsRepresentation,
}

impl LtsRepPair {
    pub fn new(rep: LtsRepresentation) -> Self {
        LtsRepPair { rep }
    }

    /// Adjoint pair `θ(x,y): z ↦ [z,x,y]`; requires the axioms to hold.
    pub fn adjoint(algebra: LtsStructure) -> Result<Self> {
        Ok(LtsRepPair {
            rep: adjoint_rep(&algebra)?,
        })
    }

    pub fn algebra(&self) -> &LtsStructure {
        self.rep.algebra()
    }

    pub fn rep(&self) -> &LtsRepresentation {
        &self.rep
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct RepAxiomReport {
    pub axiom1: CheckReport,
    pub axiom2: CheckReport,
}

impl RepAxiomReport {
    pub fn passed(&self) -> bool {
        self.axiom1.passed && self.axiom2.passed
    }
}

/// Scans both representation identities on all basis 4-tuples `(x,y,z,t)`:
///
/// 1. `θ(z,t)θ(x,y) - θ(y,t)θ(x,z) - θ(x,[y,z,t]) + D(y,z)θ(x,t) = 0`
/// 2. `θ(z,t)D(x,y) - D(x,y)θ(z,t) + θ([x,y,z],t) + θ(z,[x,y,t]) = 0`
pub fn check_rep_axioms(r: &LtsRepresentation) -> RepAxiomReport {
    let n = r.algebra().dim();
    let a = r.algebra();
    let quads = tuple_count(n, 4);
    // The derived actions, computed once per basis pair.
    let d_grid: Vec<Matrix> = (0..n * n).map(|p| r.d_basis(p / n, p % n)).collect();

    let theta_vec_right = |i: usize, w: &[Scalar]| -> Matrix {
        // θ(e_i, w), linear in the second slot.
        let mut out = Matrix::zeros(r.module_dim, r.module_dim);
        for (l, wl) in w.iter().enumerate() {
            if !wl.is_zero() {
                out = out.add(&r.theta_basis(i, l).scale(wl)).expect("uniform shapes");
            }
        }
        out
    };
    let theta_vec_left = |w: &[Scalar], l: usize| -> Matrix {
        let mut out = Matrix::zeros(r.module_dim, r.module_dim);
        for (i, wi) in w.iter().enumerate() {
            if !wi.is_zero() {
                out = out.add(&r.theta_basis(i, l).scale(wi)).expect("uniform shapes");
            }
        }
        out
    };

    let ax1 = find_map_first(quads, |idx| {
        let t = decode_tuple(idx, n, 4);
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let lhs = r
            .theta_basis(z, w)
            .mul(r.theta_basis(x, y))
            .expect("uniform shapes")
            .sub(&r.theta_basis(y, w).mul(r.theta_basis(x, z)).expect("uniform shapes"))
            .expect("uniform shapes")
            .sub(&theta_vec_right(x, a.bracket_constants(y, z, w)))
            .expect("uniform shapes")
            .add(&d_grid[y * n + z].mul(r.theta_basis(x, w)).expect("uniform shapes"))
            .expect("uniform shapes");
        if lhs.is_zero() {
            None
        } else {
            Some(Witness::new(
                vec![x, y, z, w],
                lhs.entries().to_vec(),
                vec_zero(lhs.entries().len()),
            ))
        }
    });

    let ax2 = find_map_first(quads, |idx| {
        let t = decode_tuple(idx, n, 4);
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let d_xy = &d_grid[x * n + y];
        let lhs = r
            .theta_basis(z, w)
            .mul(d_xy)
            .expect("uniform shapes")
            .sub(&d_xy.mul(r.theta_basis(z, w)).expect("uniform shapes"))
            .expect("uniform shapes")
            .add(&theta_vec_left(a.bracket_constants(x, y, z), w))
            .expect("uniform shapes")
            .add(&theta_vec_right(z, a.bracket_constants(x, y, w)))
            .expect("uniform shapes");
        if lhs.is_zero() {
            None
        } else {
            Some(Witness::new(
                vec![x, y, z, w],
                lhs.entries().to_vec(),
                vec_zero(lhs.entries().len()),
            ))
        }
    });

    RepAxiomReport {
        axiom1: CheckReport::from_witness("rep_axiom_1", quads, ax1),
        axiom2: CheckReport::from_witness("rep_axiom_2", quads, ax2),
    }
}

/// The adjoint representation `θ(x,y): z ↦ [z,x,y]` on the algebra itself.
pub fn adjoint_rep(a: &LtsStructure) -> Result<LtsRepresentation> {
    let rep = check_lts_axioms(a);
    if !rep.passed() {
        return Err(Error::NotAnLts(format!(
            "axioms fail: cyclic witness {:?}, derivation witness {:?}",
            rep.cyclic.witness, rep.derivation.witness
        )));
    }
    let n = a.dim();
    let mut theta = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // Column k is [e_k, e_i, e_j].
            let m = Matrix::from_fn(n, n, |r, k| a.bracket_constants(k, i, j)[r].clone());
            theta.push(m);
        }
    }
    LtsRepresentation::new(a.clone(), n, theta)
}

/// `D(x, y)` of a representation as a matrix; bilinear in both slots.
pub fn derived_d(r: &LtsRepresentation, x: &[Scalar], y: &[Scalar]) -> Result<Matrix> {
    r.d(x, y)
}

/// The bracket on `L ⊕ V` encoding the representation, with `L` coordinates
/// first:
///
/// `[x+u, y+v, z+w] = [x,y,z] + θ(y,z)u - θ(x,z)v + D(x,y)w`.
///
/// Purely structural: no axiom checks (see [`semidirect_product`]).
pub fn semidirect_structure(p: &LtsRepPair) -> LtsStructure {
    let a = p.algebra();
    let r = p.rep();
    let n = a.dim();
    let m = r.module_dim();
    let dim = n + m;
    let mut assignments: Vec<(usize, usize, usize, Vec<Scalar>)> = Vec::new();
    let mut push = |i: usize, j: usize, k: usize, head: Option<&[Scalar]>, tail: Option<Vec<Scalar>>| {
        let mut value = vec_zero(dim);
        if let Some(h) = head {
            value[..n].clone_from_slice(h);
        }
        if let Some(t) = tail {
            value[n..].clone_from_slice(&t);
        }
        if !crate::exactla::vec_is_zero(&value) {
            assignments.push((i, j, k, value));
        }
    };
    for i in 0..n {
        for j in 0..n {
            // [e_i, e_j, e_k] = bracket, [e_i, e_j, f_w] = D(e_i,e_j) f_w.
            for k in 0..n {
                push(i, j, k, Some(a.bracket_constants(i, j, k)), None);
            }
            let d = r.d_basis(i, j);
            for w in 0..m {
                push(i, j, n + w, None, Some(d.column(w)));
            }
        }
        // [e_i, f_v, e_k] = -θ(e_i, e_k) f_v  (and its antisymmetric mirror).
        for v in 0..m {
            for k in 0..n {
                let col = r.theta_basis(i, k).column(v);
                push(i, n + v, k, None, Some(crate::exactla::vec_neg(&col)));
            }
        }
    }
    LtsStructure::from_assignments(dim, &assignments).expect("completion is consistent")
}

/// Checked semidirect product: errors with `InvalidRepresentation` when the
/// representation axioms fail.
pub fn semidirect_product(p: &LtsRepPair) -> Result<LtsStructure> {
    let rep = check_rep_axioms(p.rep());
    if !rep.passed() {
        return Err(Error::InvalidRepresentation(format!(
            "axiom witnesses: {:?} / {:?}",
            rep.axiom1.witness, rep.axiom2.witness
        )));
    }
    Ok(semidirect_structure(p))
}
