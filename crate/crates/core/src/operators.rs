//! Rota-Baxter operators, O-operators and their equivalent characterizations,
//! Nijenhuis operators, pre-Lie triple systems, and operator morphisms.

use crate::exactla::{
    basis_vec, vec_add, vec_sub, vec_zero, Matrix, Scalar, Subspace,
};
use crate::exec::{decode_tuple, find_map_first, tuple_count};
use crate::lts::{check_lts_axioms, check_lts_morphism, AlgebraMorphism, LtsStructure};
use crate::reps::{check_rep_axioms, semidirect_structure, LtsRepPair};
use crate::report::{CheckReport, Witness};
use crate::{Error, Result};

/// A linear map `T: V → L` over a pair, candidate for the O-operator identity
/// `[Tu,Tv,Tw] = T(D(Tu,Tv)w + θ(Tv,Tw)u - θ(Tu,Tw)v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OOperator {
    pair: LtsRepPair,
    matrix: Matrix,
}

impl OOperator {
    pub fn new(pair: LtsRepPair, matrix: Matrix) -> Result<Self> {
        let n = pair.algebra().dim();
        let m = pair.rep().module_dim();
        if matrix.rows() != n || matrix.cols() != m {
            return Err(Error::DimensionMismatch(format!(
                "operator matrix {}x{} for pair dims ({n},{m})",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(OOperator { pair, matrix })
    }

    pub fn pair(&self) -> &LtsRepPair {
        &self.pair
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `T e_u`.
    pub fn column(&self, u: usize) -> Vec<Scalar> {
        self.matrix.column(u)
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.matrix.cols()).map(|u| self.column(u)).collect()
    }

    pub fn apply(&self, u: &[Scalar]) -> Result<Vec<Scalar>> {
        self.matrix.mul_vec(u)
    }
}

fn ensure_valid_rep(pair: &LtsRepPair) -> Result<()> {
    let rep = check_rep_axioms(pair.rep());
    if !rep.passed() {
        return Err(Error::InvalidRepresentation(format!(
            "axiom witnesses: {:?} / {:?}",
            rep.axiom1.witness, rep.axiom2.witness
        )));
    }
    Ok(())
}

/// Weight-zero Rota-Baxter identity
/// `[Rx,Ry,Rz] = R([Rx,Ry,z] + [Rx,y,Rz] + [x,Ry,Rz])` on all basis triples.
pub fn check_rota_baxter(a: &LtsStructure, r: &Matrix) -> Result<CheckReport> {
    let n = a.dim();
    if r.rows() != n || r.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "Rota-Baxter candidate {}x{} on dim {n}",
            r.rows(),
            r.cols()
        )));
    }
    let rcols: Vec<Vec<Scalar>> = (0..n).map(|i| r.column(i)).collect();
    let triples = tuple_count(n, 3);
    let witness = find_map_first(triples, |idx| {
        let t = decode_tuple(idx, n, 3);
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = a
            .bracket(&rcols[x], &rcols[y], &rcols[z])
            .expect("dims agree");
        let mut inner = a
            .bracket(&rcols[x], &rcols[y], &basis_vec(n, z))
            .expect("dims agree");
        inner = vec_add(
            &inner,
            &a.bracket(&rcols[x], &basis_vec(n, y), &rcols[z]).expect("dims agree"),
        );
        inner = vec_add(
            &inner,
            &a.bracket(&basis_vec(n, x), &rcols[y], &rcols[z]).expect("dims agree"),
        );
        let rhs = r.mul_vec(&inner).expect("dims agree");
        if lhs != rhs {
            Some(Witness::new(vec![x, y, z], lhs, rhs))
        } else {
            None
        }
    });
    Ok(CheckReport::from_witness("rota_baxter", triples, witness))
}

/// Pairwise `θ(Te_v, Te_w)` matrices; the building block of every O-operator
/// scan.
fn theta_grid(t: &OOperator) -> Result<Vec<Matrix>> {
    let m = t.pair.rep().module_dim();
    let cols = t.columns();
    let mut grid = Vec::with_capacity(m * m);
    for v in 0..m {
        for w in 0..m {
            grid.push(t.pair.rep().theta(&cols[v], &cols[w])?);
        }
    }
    Ok(grid)
}

/// The defining identity on all basis triples `(u,v,w)` of `V`.
pub fn check_o_operator(t: &OOperator) -> Result<CheckReport> {
    ensure_valid_rep(&t.pair)?;
    let a = t.pair.algebra();
    let m = t.pair.rep().module_dim();
    let cols = t.columns();
    let grid = theta_grid(t)?;
    let triples = tuple_count(m, 3);
    let witness = find_map_first(triples, |idx| {
        let tu = decode_tuple(idx, m, 3);
        let (u, v, w) = (tu[0], tu[1], tu[2]);
        let lhs = a.bracket(&cols[u], &cols[v], &cols[w]).expect("dims agree");
        // D(Tu,Tv) w = θ(Tv,Tu) w - θ(Tu,Tv) w.
        let mut arg = vec_sub(&grid[v * m + u].column(w), &grid[u * m + v].column(w));
        arg = vec_add(&arg, &grid[v * m + w].column(u));
        arg = vec_sub(&arg, &grid[u * m + w].column(v));
        let rhs = t.matrix.mul_vec(&arg).expect("dims agree");
        if lhs != rhs {
            Some(Witness::new(vec![u, v, w], lhs, rhs))
        } else {
            None
        }
    });
    Ok(CheckReport::from_witness("o_operator", triples, witness))
}

/// Closure of the graph `{(Tu, u)}` under the semidirect bracket, decided by
/// subspace membership per basis triple.
pub fn check_graph_subalgebra(t: &OOperator) -> Result<CheckReport> {
    ensure_valid_rep(&t.pair)?;
    let n = t.pair.algebra().dim();
    let m = t.pair.rep().module_dim();
    let s = semidirect_structure(&t.pair);
    let dim = n + m;
    let gens: Vec<Vec<Scalar>> = (0..m)
        .map(|u| {
            let mut g = vec_zero(dim);
            g[..n].clone_from_slice(&t.column(u));
            g[n + u] = Scalar::one();
            g
        })
        .collect();
    let graph = Subspace::from_spanning(dim, &gens).expect("consistent generators");
    let triples = tuple_count(m, 3);
    let witness = find_map_first(triples, |idx| {
        let tu = decode_tuple(idx, m, 3);
        let (u, v, w) = (tu[0], tu[1], tu[2]);
        let b = s.bracket(&gens[u], &gens[v], &gens[w]).expect("dims agree");
        if graph.contains(&b).expect("ambient agrees") {
            None
        } else {
            // The graph point with the same V-part, for contrast.
            let v_part = &b[n..];
            let mut proj = vec_zero(dim);
            proj[..n].clone_from_slice(&t.apply(v_part).expect("dims agree"));
            proj[n..].clone_from_slice(v_part);
            Some(Witness::new(vec![u, v, w], b, proj))
        }
    });
    Ok(CheckReport::from_witness("graph_subalgebra", triples, witness))
}

/// Block matrix `[[0, T], [0, 0]]` on `L ⊕ V`, the Rota-Baxter lift of `T`.
pub fn hat_lift(t: &OOperator) -> Matrix {
    let n = t.pair.algebra().dim();
    let m = t.pair.rep().module_dim();
    Matrix::from_fn(n + m, n + m, |r, c| {
        if r < n && c >= n {
            t.matrix.at(r, c - n).clone()
        } else {
            Scalar::zero()
        }
    })
}

/// The Nijenhuis lift of `T`: same matrix as [`hat_lift`], kept under the
/// name the deformation theory uses for it.
pub fn bar_lift(t: &OOperator) -> Matrix {
    hat_lift(t)
}

/// An endomorphism candidate for the Nijenhuis identity on a triple system.
#[derive(Debug, Clone)]
pub struct NijenhuisCandidate {
    pub algebra: LtsStructure,
    pub matrix: Matrix,
}

/// `[Nx,Ny,Nz] = N([Nx,Ny,z] + [x,Ny,Nz] + [Nx,y,Nz] - N([Nx,y,z] + [x,Ny,z] + [x,y,Nz] - N[x,y,z]))`
/// on all basis triples.
pub fn check_nijenhuis_operator(nc: &NijenhuisCandidate) -> Result<CheckReport> {
    let a = &nc.algebra;
    let n = a.dim();
    if nc.matrix.rows() != n || nc.matrix.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "Nijenhuis candidate {}x{} on dim {n}",
            nc.matrix.rows(),
            nc.matrix.cols()
        )));
    }
    let ncols: Vec<Vec<Scalar>> = (0..n).map(|i| nc.matrix.column(i)).collect();
    let triples = tuple_count(n, 3);
    let witness = find_map_first(triples, |idx| {
        let t = decode_tuple(idx, n, 3);
        let (x, y, z) = (t[0], t[1], t[2]);
        let (lhs, rhs) = nijenhuis_sides(a, &nc.matrix, &ncols, x, y, z);
        if lhs != rhs {
            Some(Witness::new(vec![x, y, z], lhs, rhs))
        } else {
            None
        }
    });
    Ok(CheckReport::from_witness("nijenhuis", triples, witness))
}

fn nijenhuis_sides(
    a: &LtsStructure,
    nmat: &Matrix,
    ncols: &[Vec<Scalar>],
    x: usize,
    y: usize,
    z: usize,
) -> (Vec<Scalar>, Vec<Scalar>) {
    let lhs = a.bracket(&ncols[x], &ncols[y], &ncols[z]).expect("dims agree");
    let rhs = nmat
        .mul_vec(&deformed_argument(a, nmat, ncols, x, y, z))
        .expect("dims agree");
    (lhs, rhs)
}

/// The argument of the outer `N(...)` in the Nijenhuis identity; also the
/// deformed bracket value `[e_x, e_y, e_z]_N`.
fn deformed_argument(
    a: &LtsStructure,
    nmat: &Matrix,
    ncols: &[Vec<Scalar>],
    x: usize,
    y: usize,
    z: usize,
) -> Vec<Scalar> {
    let n = a.dim();
    let ex = basis_vec(n, x);
    let ey = basis_vec(n, y);
    let ez = basis_vec(n, z);
    let mut outer = a.bracket(&ncols[x], &ncols[y], &ez).expect("dims agree");
    outer = vec_add(&outer, &a.bracket(&ex, &ncols[y], &ncols[z]).expect("dims agree"));
    outer = vec_add(&outer, &a.bracket(&ncols[x], &ey, &ncols[z]).expect("dims agree"));
    let mut inner = a.bracket(&ncols[x], &ey, &ez).expect("dims agree");
    inner = vec_add(&inner, &a.bracket(&ex, &ncols[y], &ez).expect("dims agree"));
    inner = vec_add(&inner, &a.bracket(&ex, &ey, &ncols[z]).expect("dims agree"));
    inner = vec_sub(&inner, &nmat.mul_vec(a.bracket_constants(x, y, z)).expect("dims agree"));
    vec_sub(&outer, &nmat.mul_vec(&inner).expect("dims agree"))
}

/// The deformed structure `[·,·,·]_N`; requires the Nijenhuis identity, and
/// re-verifies that the result is a triple system with `N` a morphism onto the
/// original structure.
pub fn nijenhuis_deformed_bracket(nc: &NijenhuisCandidate) -> Result<LtsStructure> {
    let rep = check_nijenhuis_operator(nc)?;
    if !rep.passed {
        return Err(Error::NotNijenhuis(format!("witness: {:?}", rep.witness)));
    }
    let a = &nc.algebra;
    let n = a.dim();
    let ncols: Vec<Vec<Scalar>> = (0..n).map(|i| nc.matrix.column(i)).collect();
    let mut tensor = vec_zero(n.pow(4));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let value = deformed_argument(a, &nc.matrix, &ncols, x, y, z);
                let t = ((x * n + y) * n + z) * n;
                tensor[t..t + n].clone_from_slice(&value);
            }
        }
    }
    let deformed = LtsStructure::from_tensor(n, tensor)?;
    if !check_lts_axioms(&deformed).passed() {
        return Err(Error::NotNijenhuis(
            "deformed bracket fails the triple system axioms".into(),
        ));
    }
    let morph = check_lts_morphism(&AlgebraMorphism {
        source: deformed.clone(),
        target: a.clone(),
        matrix: nc.matrix.clone(),
    })?;
    if !morph.passed {
        return Err(Error::NotNijenhuis(
            "N is not a morphism from the deformed structure".into(),
        ));
    }
    Ok(deformed)
}

/// A ternary product `{·,·,·}` with no symmetry constraints; the pre-Lie triple
/// system axioms relate it to its derived products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLts {
    dim: usize,
    mu: Vec<Scalar>,
}

impl PreLts {
    pub fn zero(dim: usize) -> Self {
        PreLts {
            dim,
            mu: vec_zero(dim.pow(4)),
        }
    }

    pub fn from_tensor(dim: usize, mu: Vec<Scalar>) -> Result<Self> {
        if mu.len() != dim.pow(4) {
            return Err(Error::DimensionMismatch(format!(
                "product tensor of length {} for dim {dim}",
                mu.len()
            )));
        }
        Ok(PreLts { dim, mu })
    }

    /// Sparse constructor; no antisymmetric completion (the product has none).
    pub fn from_assignments(dim: usize, assignments: &[(usize, usize, usize, Vec<Scalar>)]) -> Result<Self> {
        let mut mu = vec_zero(dim.pow(4));
        for (i, j, k, value) in assignments {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::InvalidInput(format!(
                    "product index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            if value.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "product value of length {} for dim {dim}",
                    value.len()
                )));
            }
            let t = ((i * dim + j) * dim + k) * dim;
            mu[t..t + dim].clone_from_slice(value);
        }
        Ok(PreLts { dim, mu })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `{e_i, e_j, e_k}`.
    pub fn mu_constants(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let t = ((i * self.dim + j) * self.dim + k) * self.dim;
        &self.mu[t..t + self.dim]
    }

    /// `{e_i, e_j, e_k}* = {e_k, e_j, e_i} - {e_k, e_i, e_j}`.
    pub fn star_constants(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        vec_sub(self.mu_constants(k, j, i), self.mu_constants(k, i, j))
    }

    /// `[e_i, e_j, e_k]_C = {e_i,e_j,e_k}* + {e_i,e_j,e_k} - {e_j,e_i,e_k}`.
    pub fn comm_constants(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let mut out = self.star_constants(i, j, k);
        out = vec_add(&out, self.mu_constants(i, j, k));
        vec_sub(&out, self.mu_constants(j, i, k))
    }

    /// `Σ_l w_l {e_i, e_j, e_l}`.
    fn mu_third(&self, i: usize, j: usize, w: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec_zero(self.dim);
        for (l, c) in w.iter().enumerate() {
            if !c.is_zero() {
                crate::exactla::vec_add_scaled(&mut out, self.mu_constants(i, j, l), c);
            }
        }
        out
    }

    /// `Σ_l w_l {e_l, e_j, e_k}`.
    fn mu_first(&self, w: &[Scalar], j: usize, k: usize) -> Vec<Scalar> {
        let mut out = vec_zero(self.dim);
        for (l, c) in w.iter().enumerate() {
            if !c.is_zero() {
                crate::exactla::vec_add_scaled(&mut out, self.mu_constants(l, j, k), c);
            }
        }
        out
    }

    /// `Σ_l w_l {e_i, e_l, e_k}`.
    fn mu_second(&self, i: usize, w: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut out = vec_zero(self.dim);
        for (l, c) in w.iter().enumerate() {
            if !c.is_zero() {
                crate::exactla::vec_add_scaled(&mut out, self.mu_constants(i, l, k), c);
            }
        }
        out
    }

    /// `Σ_l w_l {e_i, e_j, e_l}*`.
    fn star_third(&self, i: usize, j: usize, w: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec_zero(self.dim);
        for (l, c) in w.iter().enumerate() {
            if !c.is_zero() {
                crate::exactla::vec_add_scaled(&mut out, &self.star_constants(i, j, l), c);
            }
        }
        out
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct PreLtsAxiomReport {
    pub condition1: CheckReport,
    pub condition2: CheckReport,
}

impl PreLtsAxiomReport {
    pub fn passed(&self) -> bool {
        self.condition1.passed && self.condition2.passed
    }
}

/// Both pre-Lie triple system identities on all basis 5-tuples. The starred
/// and commutator products are expanded strictly by their definitions, with
/// the inner product value substituted as the starred product's last-named
/// argument.
pub fn check_prelts_axioms(p: &PreLts) -> PreLtsAxiomReport {
    let n = p.dim();
    let quints = tuple_count(n, 5);

    let cond1 = find_map_first(quints, |idx| {
        let t = decode_tuple(idx, n, 5);
        let (x1, x2, x3, x4, x5) = (t[0], t[1], t[2], t[3], t[4]);
        // {x5, x1, [x2,x3,x4]_C}
        let lhs = p.mu_third(x5, x1, &p.comm_constants(x2, x3, x4));
        // {{x5,x1,x2},x3,x4} - {{x5,x1,x3},x2,x4} + {x2,x3,{x5,x1,x4}}*
        let mut rhs = p.mu_first(p.mu_constants(x5, x1, x2), x3, x4);
        rhs = vec_sub(&rhs, &p.mu_first(p.mu_constants(x5, x1, x3), x2, x4));
        rhs = vec_add(&rhs, &p.star_third(x2, x3, p.mu_constants(x5, x1, x4)));
        if lhs != rhs {
            Some(Witness::new(vec![x1, x2, x3, x4, x5], lhs, rhs))
        } else {
            None
        }
    });

    let cond2 = find_map_first(quints, |idx| {
        let t = decode_tuple(idx, n, 5);
        let (x1, x2, x3, x4, x5) = (t[0], t[1], t[2], t[3], t[4]);
        // {x1, x2, {x5,x3,x4}}*
        let lhs = p.star_third(x1, x2, p.mu_constants(x5, x3, x4));
        // {{x1,x2,x5}*, x3, x4} + {x5, [x1,x2,x3]_C, x4} + {x5, x3, [x1,x2,x4]_C}
        let mut rhs = p.mu_first(&p.star_constants(x1, x2, x5), x3, x4);
        rhs = vec_add(&rhs, &p.mu_second(x5, &p.comm_constants(x1, x2, x3), x4));
        rhs = vec_add(&rhs, &p.mu_third(x5, x3, &p.comm_constants(x1, x2, x4)));
        if lhs != rhs {
            Some(Witness::new(vec![x1, x2, x3, x4, x5], lhs, rhs))
        } else {
            None
        }
    });

    PreLtsAxiomReport {
        condition1: CheckReport::from_witness("prelts_condition1", quints, cond1),
        condition2: CheckReport::from_witness("prelts_condition2", quints, cond2),
    }
}

/// The induced product `{u,v,w} = θ(Tv, Tw) u`; requires `T` to pass the
/// O-operator check, and re-verifies the pre-Lie triple system axioms.
pub fn induced_prelts(t: &OOperator) -> Result<PreLts> {
    let rep = check_o_operator(t)?;
    if !rep.passed {
        return Err(Error::NotAnOOperator(format!("witness: {:?}", rep.witness)));
    }
    let m = t.pair.rep().module_dim();
    let grid = theta_grid(t)?;
    let mut mu = vec_zero(m.pow(4));
    for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                let val = grid[v * m + w].column(u);
                let slot = ((u * m + v) * m + w) * m;
                mu[slot..slot + m].clone_from_slice(&val);
            }
        }
    }
    let p = PreLts { dim: m, mu };
    let axioms = check_prelts_axioms(&p);
    if !axioms.passed() {
        return Err(Error::NotAPreLts(format!(
            "induced product fails: {:?} / {:?}",
            axioms.condition1.witness, axioms.condition2.witness
        )));
    }
    Ok(p)
}

/// The commutator bracket `[·,·,·]_C` of a pre-Lie triple system; requires the
/// axioms and re-verifies the result.
pub fn prelts_commutator(p: &PreLts) -> Result<LtsStructure> {
    let axioms = check_prelts_axioms(p);
    if !axioms.passed() {
        return Err(Error::NotAPreLts(format!(
            "witnesses: {:?} / {:?}",
            axioms.condition1.witness, axioms.condition2.witness
        )));
    }
    let n = p.dim();
    let mut tensor = vec_zero(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let val = p.comm_constants(i, j, k);
                let t = ((i * n + j) * n + k) * n;
                tensor[t..t + n].clone_from_slice(&val);
            }
        }
    }
    let a = LtsStructure::from_tensor(n, tensor)?;
    if !check_lts_axioms(&a).passed() {
        return Err(Error::NotAPreLts(
            "commutator bracket fails the triple system axioms".into(),
        ));
    }
    Ok(a)
}

/// A candidate morphism of O-operators `(φ, ψ): T → T'`.
#[derive(Debug, Clone)]
pub struct OOperatorMorphism {
    pub source: OOperator,
    pub target: OOperator,
    pub phi: Matrix,
    pub psi: Matrix,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct OMorphismReport {
    /// φ intertwines the two triple brackets.
    pub phi_morphism: CheckReport,
    /// `φ ∘ T = T' ∘ ψ`.
    pub c1: CheckReport,
    /// `ψ θ(x,y) = θ(φx, φy) ψ` on all basis pairs.
    pub c2: CheckReport,
    /// The graph of `φ ⊕ ψ` is a subalgebra of the direct sum of the two
    /// semidirect products. Equivalent to `phi_morphism && c2`.
    pub graph: CheckReport,
}

impl OMorphismReport {
    /// The definition of a morphism of O-operators.
    pub fn passed(&self) -> bool {
        self.phi_morphism.passed && self.c1.passed && self.c2.passed
    }
}

/// Verifies the defining morphism conditions and, alongside them, the graph
/// characterization over the direct sum of semidirect products.
pub fn check_o_morphism(m: &OOperatorMorphism) -> Result<OMorphismReport> {
    let n = m.source.pair.algebra().dim();
    let mm = m.source.pair.rep().module_dim();
    let n2 = m.target.pair.algebra().dim();
    let m2 = m.target.pair.rep().module_dim();
    if m.phi.rows() != n2 || m.phi.cols() != n || m.psi.rows() != m2 || m.psi.cols() != mm {
        return Err(Error::DimensionMismatch(format!(
            "phi {}x{}, psi {}x{} between pairs ({n},{mm}) -> ({n2},{m2})",
            m.phi.rows(),
            m.phi.cols(),
            m.psi.rows(),
            m.psi.cols()
        )));
    }

    let phi_morphism = check_lts_morphism(&AlgebraMorphism {
        source: m.source.pair.algebra().clone(),
        target: m.target.pair.algebra().clone(),
        matrix: m.phi.clone(),
    })?;

    let lhs_c1 = m.phi.mul(m.source.matrix())?;
    let rhs_c1 = m.target.matrix().mul(&m.psi)?;
    let c1 = {
        let witness = (0..mm).find_map(|u| {
            if lhs_c1.column(u) != rhs_c1.column(u) {
                Some(Witness::new(vec![u], lhs_c1.column(u), rhs_c1.column(u)))
            } else {
                None
            }
        });
        CheckReport::from_witness("c1_intertwines_operators", mm, witness)
    };

    let phicols: Vec<Vec<Scalar>> = (0..n).map(|i| m.phi.column(i)).collect();
    let pairs = tuple_count(n, 2);
    let c2_witness = find_map_first(pairs, |idx| {
        let t = decode_tuple(idx, n, 2);
        let (i, j) = (t[0], t[1]);
        let lhs = m
            .psi
            .mul(m.source.pair.rep().theta_basis(i, j))
            .expect("dims agree");
        let rhs = m
            .target
            .pair
            .rep()
            .theta(&phicols[i], &phicols[j])
            .expect("dims agree")
            .mul(&m.psi)
            .expect("dims agree");
        if lhs != rhs {
            Some(Witness::new(
                vec![i, j],
                lhs.entries().to_vec(),
                rhs.entries().to_vec(),
            ))
        } else {
            None
        }
    });
    let c2 = CheckReport::from_witness("c2_intertwines_theta", pairs, c2_witness);

    // Graph characterization over (L⊕V) ⊕ (L'⊕V').
    let s1 = semidirect_structure(&m.source.pair);
    let s2 = semidirect_structure(&m.target.pair);
    let ambient = s1.direct_sum(&s2);
    let d1 = n + mm;
    let dim = d1 + n2 + m2;
    let mut gens: Vec<Vec<Scalar>> = Vec::with_capacity(n + mm);
    for i in 0..n {
        let mut g = vec_zero(dim);
        g[i] = Scalar::one();
        g[d1..d1 + n2].clone_from_slice(&phicols[i]);
        gens.push(g);
    }
    for u in 0..mm {
        let mut g = vec_zero(dim);
        g[n + u] = Scalar::one();
        g[d1 + n2..].clone_from_slice(&m.psi.column(u));
        gens.push(g);
    }
    let graph_space = Subspace::from_spanning(dim, &gens).expect("consistent generators");
    let gtriples = tuple_count(n + mm, 3);
    let graph_witness = find_map_first(gtriples, |idx| {
        let t = decode_tuple(idx, n + mm, 3);
        let b = ambient
            .bracket(&gens[t[0]], &gens[t[1]], &gens[t[2]])
            .expect("dims agree");
        if graph_space.contains(&b).expect("ambient agrees") {
            None
        } else {
            Some(Witness::new(t, b, vec_zero(dim)))
        }
    });
    let graph = CheckReport::from_witness("graph_subalgebra", gtriples, graph_witness);

    Ok(OMorphismReport {
        phi_morphism,
        c1,
        c2,
        graph,
    })
}

/// All four equivalent verdicts for one candidate matrix over a pair:
/// direct identity, graph closure, Rota-Baxter of the hat lift on the
/// semidirect product, and the Nijenhuis property of the bar lift.
pub fn four_way_verdicts(pair: &LtsRepPair, candidate: &Matrix) -> Result<[bool; 4]> {
    let t = OOperator::new(pair.clone(), candidate.clone())?;
    let direct = check_o_operator(&t)?.passed;
    let graph = check_graph_subalgebra(&t)?.passed;
    let s = semidirect_structure(pair);
    let rb = check_rota_baxter(&s, &hat_lift(&t))?.passed;
    let nij = check_nijenhuis_operator(&NijenhuisCandidate {
        algebra: s,
        matrix: bar_lift(&t),
    })?
    .passed;
    Ok([direct, graph, rb, nij])
}
