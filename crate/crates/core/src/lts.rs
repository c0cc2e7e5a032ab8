//! Lie triple systems and Lie algebras as structure-constant tensors.

use crate::exactla::{
    basis_vec, vec_add, vec_add_scaled, vec_is_zero, vec_neg, vec_sub, vec_zero, Matrix, Scalar,
};
use crate::exec::{decode_tuple, find_map_first, tuple_count};
use crate::report::{CheckReport, Witness};
use crate::{Error, Result};

/// A ternary bracket on ℚⁿ: `[e_i, e_j, e_k] = Σ_l c[i][j][k][l] e_l`.
///
/// Antisymmetry in the first two slots is enforced at construction; the cyclic
/// and derivation axioms are checked, not assumed (see [`check_lts_axioms`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LtsStructure {
    dim: usize,
    c: Vec<Scalar>,
}

impl LtsStructure {
    pub fn zero(dim: usize) -> Self {
        LtsStructure {
            dim,
            c: vec_zero(dim.pow(4)),
        }
    }

    /// Builds the tensor from sparse bracket assignments `[e_i,e_j,e_k] = value`,
    /// applying antisymmetric completion. Conflicting assignments (directly or
    /// through completion) are rejected, as are nonzero `[e_i,e_i,e_k]`.
    pub fn from_assignments(dim: usize, assignments: &[(usize, usize, usize, Vec<Scalar>)]) -> Result<Self> {
        let mut c = vec_zero(dim.pow(4));
        let mut set = vec![false; dim.pow(3)];
        let store = |c: &mut Vec<Scalar>,
                         set: &mut Vec<bool>,
                         i: usize,
                         j: usize,
                         k: usize,
                         value: &[Scalar]|
         -> Result<()> {
            let t = (i * dim + j) * dim + k;
            if set[t] {
                if (0..dim).any(|l| c[t * dim + l] != value[l]) {
                    return Err(Error::ConflictingBrackets(format!(
                        "triple ({i},{j},{k}) assigned twice with different values"
                    )));
                }
                return Ok(());
            }
            set[t] = true;
            c[t * dim..(t + 1) * dim].clone_from_slice(value);
            Ok(())
        };
        for (i, j, k, value) in assignments {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidInput(format!(
                    "bracket index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            if value.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket value of length {} for dim {dim}",
                    value.len()
                )));
            }
            if i == j && !vec_is_zero(value) {
                return Err(Error::ConflictingBrackets(format!(
                    "nonzero [e_{i},e_{i},e_{k}] violates slot antisymmetry"
                )));
            }
            store(&mut c, &mut set, i, j, k, value)?;
            if i != j {
                store(&mut c, &mut set, j, i, k, &vec_neg(value))?;
            }
        }
        Ok(LtsStructure { dim, c })
    }

    /// Wraps a full tensor, validating slot antisymmetry.
    pub fn from_tensor(dim: usize, c: Vec<Scalar>) -> Result<Self> {
        if c.len() != dim.pow(4) {
            return Err(Error::DimensionMismatch(format!(
                "tensor of length {} for dim {dim}",
                c.len()
            )));
        }
        let a = LtsStructure { dim, c };
        for i in 0..dim {
            for j in 0..=i {
                for k in 0..dim {
                    let lhs = a.bracket_constants(i, j, k);
                    let rhs = a.bracket_constants(j, i, k);
                    if !vec_is_zero(&vec_add(lhs, rhs)) {
                        return Err(Error::InvalidInput(format!(
                            "tensor not antisymmetric in the first two slots at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.c
    }

    /// `[e_i, e_j, e_k]` as a coefficient slice of length `dim`.
    pub fn bracket_constants(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let t = ((i * self.dim + j) * self.dim + k) * self.dim;
        &self.c[t..t + self.dim]
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.c)
    }

    /// `[e_i, e_j, z]` for a vector `z`.
    pub fn bracket_bbv(&self, i: usize, j: usize, z: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec_zero(self.dim);
        for (k, zk) in z.iter().enumerate() {
            if !zk.is_zero() {
                vec_add_scaled(&mut out, self.bracket_constants(i, j, k), zk);
            }
        }
        out
    }

    /// Trilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        for v in [x, y, z] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket argument of length {} for dim {}",
                    v.len(),
                    self.dim
                )));
            }
        }
        let mut out = vec_zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    vec_add_scaled(&mut out, self.bracket_constants(i, j, k), &(&s * zk));
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal bracket on the direct sum of two systems.
    pub fn direct_sum(&self, other: &LtsStructure) -> LtsStructure {
        let n = self.dim;
        let dim = n + other.dim;
        let mut c = vec_zero(dim.pow(4));
        let mut write = |i: usize, j: usize, k: usize, vals: &[Scalar], off: usize| {
            let t = ((i * dim + j) * dim + k) * dim;
            for (l, v) in vals.iter().enumerate() {
                c[t + off + l] = v.clone();
            }
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    write(i, j, k, self.bracket_constants(i, j, k), 0);
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    write(n + i, n + j, n + k, other.bracket_constants(i, j, k), n);
                }
            }
        }
        LtsStructure { dim, c }
    }
}

/// Report for the two defining identities plus the structural antisymmetry.
#[derive(Debug, Clone, serde::Serialize)]
pub struct LtsAxiomReport {
    pub slot_antisymmetry: CheckReport,
    pub cyclic: CheckReport,
    pub derivation: CheckReport,
}

impl LtsAxiomReport {
    pub fn passed(&self) -> bool {
        self.slot_antisymmetry.passed && self.cyclic.passed && self.derivation.passed
    }
}

/// Scans the cyclic identity on all basis triples and the derivation identity
/// on all basis 5-tuples. Multilinearity makes basis scanning complete.
pub fn check_lts_axioms(a: &LtsStructure) -> LtsAxiomReport {
    let n = a.dim();

    let triples = tuple_count(n, 3);
    let anti = find_map_first(triples, |idx| {
        let t = decode_tuple(idx, n, 3);
        let (i, j, k) = (t[0], t[1], t[2]);
        let lhs = a.bracket_constants(i, j, k);
        let rhs = vec_neg(a.bracket_constants(j, i, k));
        if lhs != &rhs[..] {
            Some(Witness::new(vec![i, j, k], lhs.to_vec(), rhs))
        } else {
            None
        }
    });

    let cyclic = find_map_first(triples, |idx| {
        let t = decode_tuple(idx, n, 3);
        let (i, j, k) = (t[0], t[1], t[2]);
        let mut sum = a.bracket_constants(i, j, k).to_vec();
        sum = vec_add(&sum, a.bracket_constants(j, k, i));
        sum = vec_add(&sum, a.bracket_constants(k, i, j));
        if !vec_is_zero(&sum) {
            Some(Witness::new(vec![i, j, k], sum, vec_zero(n)))
        } else {
            None
        }
    });

    let quints = tuple_count(n, 5);
    let derivation = find_map_first(quints, |idx| {
        let t = decode_tuple(idx, n, 5);
        let (i, j, k, s, e) = (t[0], t[1], t[2], t[3], t[4]);
        let lhs = a.bracket_bbv(i, j, a.bracket_constants(k, s, e));
        let mut rhs = a
            .bracket(a.bracket_constants(i, j, k), &basis_vec(n, s), &basis_vec(n, e))
            .expect("dims agree");
        rhs = vec_add(
            &rhs,
            &a.bracket(&basis_vec(n, k), a.bracket_constants(i, j, s), &basis_vec(n, e))
                .expect("dims agree"),
        );
        rhs = vec_add(
            &rhs,
            &a.bracket(&basis_vec(n, k), &basis_vec(n, s), a.bracket_constants(i, j, e))
                .expect("dims agree"),
        );
        if lhs != rhs {
            Some(Witness::new(vec![i, j, k, s, e], lhs, rhs))
        } else {
            None
        }
    });

    LtsAxiomReport {
        slot_antisymmetry: CheckReport::from_witness("slot_antisymmetry", triples, anti),
        cyclic: CheckReport::from_witness("cyclic", triples, cyclic),
        derivation: CheckReport::from_witness("derivation", quints, derivation),
    }
}

/// A binary bracket on ℚⁿ: `[e_i, e_j] = Σ_k b[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieStructure {
    dim: usize,
    b: Vec<Scalar>,
}

impl LieStructure {
    pub fn zero(dim: usize) -> Self {
        LieStructure {
            dim,
            b: vec_zero(dim.pow(3)),
        }
    }

    /// Sparse constructor with antisymmetric completion, mirroring
    /// [`LtsStructure::from_assignments`].
    pub fn from_assignments(dim: usize, assignments: &[(usize, usize, Vec<Scalar>)]) -> Result<Self> {
        let mut b = vec_zero(dim.pow(3));
        let mut set = vec![false; dim * dim];
        let store = |b: &mut Vec<Scalar>,
                         set: &mut Vec<bool>,
                         i: usize,
                         j: usize,
                         value: &[Scalar]|
         -> Result<()> {
            let t = i * dim + j;
            if set[t] {
                if (0..dim).any(|l| b[t * dim + l] != value[l]) {
                    return Err(Error::ConflictingBrackets(format!(
                        "pair ({i},{j}) assigned twice with different values"
                    )));
                }
                return Ok(());
            }
            set[t] = true;
            b[t * dim..(t + 1) * dim].clone_from_slice(value);
            Ok(())
        };
        for (i, j, value) in assignments {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(Error::InvalidInput(format!(
                    "bracket index ({i},{j}) out of range for dim {dim}"
                )));
            }
            if value.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket value of length {} for dim {dim}",
                    value.len()
                )));
            }
            if i == j && !vec_is_zero(value) {
                return Err(Error::ConflictingBrackets(format!(
                    "nonzero [e_{i},e_{i}] violates antisymmetry"
                )));
            }
            store(&mut b, &mut set, i, j, value)?;
            if i != j {
                store(&mut b, &mut set, j, i, &vec_neg(value))?;
            }
        }
        Ok(LieStructure { dim, b })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `[e_i, e_j]` as a coefficient slice.
    pub fn bracket_constants(&self, i: usize, j: usize) -> &[Scalar] {
        let t = (i * self.dim + j) * self.dim;
        &self.b[t..t + self.dim]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket argument of length {} for dim {}",
                    v.len(),
                    self.dim
                )));
            }
        }
        let mut out = vec_zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                vec_add_scaled(&mut out, self.bracket_constants(i, j), &(xi * yj));
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(x) = [x, ·]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for k in 0..n {
                let col = self.bracket_constants(i, k);
                for r in 0..n {
                    if !col[r].is_zero() {
                        *m.at_mut(r, k) += &(&col[r] * xi);
                    }
                }
            }
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct LieAxiomReport {
    pub antisymmetry: CheckReport,
    pub jacobi: CheckReport,
}

impl LieAxiomReport {
    pub fn passed(&self) -> bool {
        self.antisymmetry.passed && self.jacobi.passed
    }
}

pub fn check_lie_axioms(g: &LieStructure) -> LieAxiomReport {
    let n = g.dim();
    let pairs = tuple_count(n, 2);
    let anti = find_map_first(pairs, |idx| {
        let t = decode_tuple(idx, n, 2);
        let (i, j) = (t[0], t[1]);
        let lhs = g.bracket_constants(i, j);
        let rhs = vec_neg(g.bracket_constants(j, i));
        if lhs != &rhs[..] {
            Some(Witness::new(vec![i, j], lhs.to_vec(), rhs))
        } else {
            None
        }
    });
    let triples = tuple_count(n, 3);
    let jacobi = find_map_first(triples, |idx| {
        let t = decode_tuple(idx, n, 3);
        let (i, j, k) = (t[0], t[1], t[2]);
        let mut sum = g
            .bracket(g.bracket_constants(i, j), &basis_vec(n, k))
            .expect("dims agree");
        sum = vec_add(
            &sum,
            &g.bracket(g.bracket_constants(j, k), &basis_vec(n, i)).expect("dims agree"),
        );
        sum = vec_add(
            &sum,
            &g.bracket(g.bracket_constants(k, i), &basis_vec(n, j)).expect("dims agree"),
        );
        if !vec_is_zero(&sum) {
            Some(Witness::new(vec![i, j, k], sum, vec_zero(n)))
        } else {
            None
        }
    });
    LieAxiomReport {
        antisymmetry: CheckReport::from_witness("antisymmetry", pairs, anti),
        jacobi: CheckReport::from_witness("jacobi", triples, jacobi),
    }
}

/// The triple bracket `[x,y,z] = [[x,y],z]` of a Lie algebra.
pub fn lie_to_lts(g: &LieStructure) -> Result<LtsStructure> {
    let rep = check_lie_axioms(g);
    if !rep.passed() {
        return Err(Error::NotALieAlgebra(format!(
            "Jacobi/antisymmetry fails at witness {:?}",
            rep.jacobi.witness.or(rep.antisymmetry.witness)
        )));
    }
    let n = g.dim();
    let mut assignments = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let inner = g.bracket_constants(i, j);
            for k in 0..n {
                let mut value = vec_zero(n);
                for (l, w) in inner.iter().enumerate() {
                    if !w.is_zero() {
                        vec_add_scaled(&mut value, g.bracket_constants(l, k), w);
                    }
                }
                if !vec_is_zero(&value) {
                    assignments.push((i, j, k, value));
                }
            }
        }
    }
    LtsStructure::from_assignments(n, &assignments)
}

/// A linear map between two triple systems, checked against
/// `f([x,y,z]) = [f x, f y, f z]'`.
#[derive(Debug, Clone)]
pub struct AlgebraMorphism {
    pub source: LtsStructure,
    pub target: LtsStructure,
    pub matrix: Matrix,
}

pub fn check_lts_morphism(m: &AlgebraMorphism) -> Result<CheckReport> {
    let n = m.source.dim();
    if m.matrix.cols() != n || m.matrix.rows() != m.target.dim() {
        return Err(Error::DimensionMismatch(format!(
            "morphism matrix {}x{} between dims {} -> {}",
            m.matrix.rows(),
            m.matrix.cols(),
            n,
            m.target.dim()
        )));
    }
    let cols: Vec<Vec<Scalar>> = (0..n).map(|i| m.matrix.column(i)).collect();
    let triples = tuple_count(n, 3);
    let witness = find_map_first(triples, |idx| {
        let t = decode_tuple(idx, n, 3);
        let (i, j, k) = (t[0], t[1], t[2]);
        let lhs = m
            .matrix
            .mul_vec(m.source.bracket_constants(i, j, k))
            .expect("dims agree");
        let rhs = m
            .target
            .bracket(&cols[i], &cols[j], &cols[k])
            .expect("dims agree");
        if lhs != rhs {
            Some(Witness::new(vec![i, j, k], lhs, rhs))
        } else {
            None
        }
    });
    Ok(CheckReport::from_witness("lts_morphism", triples, witness))
}

/// An element of `L ∧ L` with the ordered-pair action convention:
/// `e_i ∧ e_j` (for `i < j`) acts as the single pair `(e_i, e_j)`, and the
/// coefficients live in the strict upper triangle of an antisymmetric matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bivector {
    dim: usize,
    coeffs: Matrix,
}

impl Bivector {
    pub fn zero(dim: usize) -> Self {
        Bivector {
            dim,
            coeffs: Matrix::zeros(dim, dim),
        }
    }

    /// `e_i ∧ e_j`; requires `i != j`.
    pub fn from_pair(dim: usize, i: usize, j: usize) -> Result<Self> {
        if i >= dim || j >= dim || i == j {
            return Err(Error::InvalidInput(format!(
                "wedge pair ({i},{j}) invalid for dim {dim}"
            )));
        }
        let mut coeffs = Matrix::zeros(dim, dim);
        *coeffs.at_mut(i, j) = Scalar::one();
        *coeffs.at_mut(j, i) = Scalar::from_int(-1);
        Ok(Bivector { dim, coeffs })
    }

    /// From coordinates over the lexicographic wedge basis `e_i ∧ e_j`, `i < j`.
    pub fn from_wedge_coords(dim: usize, coords: &[Scalar]) -> Result<Self> {
        if coords.len() != wedge_dim(dim) {
            return Err(Error::DimensionMismatch(format!(
                "{} wedge coordinates for dim {dim}",
                coords.len()
            )));
        }
        let mut coeffs = Matrix::zeros(dim, dim);
        for (t, (i, j)) in wedge_pairs(dim).into_iter().enumerate() {
            *coeffs.at_mut(i, j) = coords[t].clone();
            *coeffs.at_mut(j, i) = -&coords[t];
        }
        Ok(Bivector { dim, coeffs })
    }

    /// Wraps an antisymmetric coefficient matrix.
    pub fn from_matrix(coeffs: Matrix) -> Result<Self> {
        if coeffs.rows() != coeffs.cols() {
            return Err(Error::DimensionMismatch("bivector matrix must be square".into()));
        }
        let n = coeffs.rows();
        for i in 0..n {
            for j in 0..=i {
                if (coeffs.at(i, j) + coeffs.at(j, i)) != Scalar::zero() {
                    return Err(Error::InvalidInput(format!(
                        "bivector coefficients not antisymmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Bivector { dim: n, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Scalar {
        self.coeffs.at(i, j)
    }

    pub fn to_wedge_coords(&self) -> Vec<Scalar> {
        wedge_pairs(self.dim)
            .into_iter()
            .map(|(i, j)| self.coeffs.at(i, j).clone())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn scale(&self, s: &Scalar) -> Bivector {
        Bivector {
            dim: self.dim,
            coeffs: self.coeffs.scale(s),
        }
    }

    /// Iterates the strict upper triangle `(i, j, coefficient)`, skipping zeros.
    pub fn upper_terms(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (i, j) in wedge_pairs(self.dim) {
            let c = self.coeffs.at(i, j);
            if !c.is_zero() {
                out.push((i, j, c.clone()));
            }
        }
        out
    }
}

/// Lexicographic strict-upper-triangle index pairs.
pub fn wedge_pairs(dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(wedge_dim(dim));
    for i in 0..dim {
        for j in i + 1..dim {
            out.push((i, j));
        }
    }
    out
}

pub fn wedge_dim(dim: usize) -> usize {
    dim * (dim - 1) / 2
}

/// `𝓛(X) z = Σ_{i<j} X_ij [e_i, e_j, z]`.
pub fn adjoint_action(a: &LtsStructure, x: &Bivector, z: &[Scalar]) -> Result<Vec<Scalar>> {
    if x.dim() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "bivector dim {} vs algebra dim {}",
            x.dim(),
            a.dim()
        )));
    }
    if z.len() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} vs algebra dim {}",
            z.len(),
            a.dim()
        )));
    }
    let mut out = vec_zero(a.dim());
    for (i, j, coeff) in x.upper_terms() {
        let term = a.bracket_bbv(i, j, z);
        vec_add_scaled(&mut out, &term, &coeff);
    }
    Ok(out)
}

/// Matrix of `z ↦ 𝓛(X) z`.
pub fn adjoint_action_matrix(a: &LtsStructure, x: &Bivector) -> Result<Matrix> {
    let n = a.dim();
    let mut m = Matrix::zeros(n, n);
    for k in 0..n {
        let col = adjoint_action(a, x, &basis_vec(n, k))?;
        for r in 0..n {
            if !col[r].is_zero() {
                *m.at_mut(r, k) = col[r].clone();
            }
        }
    }
    Ok(m)
}

/// Difference of both sides of the derivation identity for `𝓛(X)`; used by
/// property tests.
pub fn derivation_defect(
    a: &LtsStructure,
    x: &Bivector,
    z1: &[Scalar],
    z2: &[Scalar],
    z3: &[Scalar],
) -> Result<Vec<Scalar>> {
    let lhs = adjoint_action(a, x, &a.bracket(z1, z2, z3)?)?;
    let mut rhs = a.bracket(&adjoint_action(a, x, z1)?, z2, z3)?;
    rhs = vec_add(&rhs, &a.bracket(z1, &adjoint_action(a, x, z2)?, z3)?);
    rhs = vec_add(&rhs, &a.bracket(z1, z2, &adjoint_action(a, x, z3)?)?);
    Ok(vec_sub(&lhs, &rhs))
}
