//! Lie algebra pairs, their Chevalley-Eilenberg complexes, O-operators on
//! them, and the transfer of all of it to the associated triple system.

use crate::cohomology::{check_cocycle, induced_bracket, Cochain, CocycleReport};
use crate::exactla::{
    basis_vec, vec_add, vec_add_scaled, vec_is_zero, vec_sub, vec_zero, Matrix, Scalar,
};
use crate::exec::{decode_tuple, find_map_first, tuple_count};
use crate::lts::{check_lie_axioms, lie_to_lts, LieStructure};
use crate::operators::{check_o_operator, OOperator};
use crate::reps::{check_rep_axioms, semidirect_structure, LtsRepPair, LtsRepresentation};
use crate::report::{CheckReport, Witness};
use crate::{Error, Result};

/// A linear action `ρ: L → End(V)` given by its basis matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieRepresentation {
    algebra: LieStructure,
    module_dim: usize,
    rho: Vec<Matrix>,
}

impl LieRepresentation {
    pub fn new(algebra: LieStructure, module_dim: usize, rho: Vec<Matrix>) -> Result<Self> {
        if rho.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} rho matrices for algebra dim {}",
                rho.len(),
                algebra.dim()
            )));
        }
        for m in &rho {
            if m.rows() != module_dim || m.cols() != module_dim {
                return Err(Error::DimensionMismatch(format!(
                    "rho matrix {}x{} for module dim {module_dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(LieRepresentation {
            algebra,
            module_dim,
            rho,
        })
    }

    /// Adjoint action `ρ(x) = [x, ·]`; requires the Jacobi identity.
    pub fn adjoint(algebra: LieStructure) -> Result<Self> {
        if !check_lie_axioms(&algebra).passed() {
            return Err(Error::NotALieAlgebra("Jacobi fails".into()));
        }
        let n = algebra.dim();
        let rho: Result<Vec<Matrix>> = (0..n).map(|i| algebra.ad(&basis_vec(n, i))).collect();
        LieRepresentation::new(algebra, n, rho?)
    }

    pub fn algebra(&self) -> &LieStructure {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn rho_basis(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    /// Linear extension `ρ(x)`.
    pub fn rho(&self, x: &[Scalar]) -> Result<Matrix> {
        if x.len() != self.algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "rho argument of length {} for dim {}",
                x.len(),
                self.algebra.dim()
            )));
        }
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                out = out.add(&self.rho[i].scale(xi)).expect("uniform shapes");
            }
        }
        Ok(out)
    }
}

/// `ρ([x,y]) = ρ(x)ρ(y) - ρ(y)ρ(x)` on all basis pairs.
pub fn check_lie_rep(r: &LieRepresentation) -> CheckReport {
    let n = r.algebra.dim();
    let pairs = tuple_count(n, 2);
    let witness = find_map_first(pairs, |idx| {
        let t = decode_tuple(idx, n, 2);
        let (i, j) = (t[0], t[1]);
        let lhs = r
            .rho(r.algebra.bracket_constants(i, j))
            .expect("dims agree");
        let rhs = r.rho[i]
            .mul(&r.rho[j])
            .expect("uniform shapes")
            .sub(&r.rho[j].mul(&r.rho[i]).expect("uniform shapes"))
            .expect("uniform shapes");
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
    CheckReport::from_witness("lie_representation", pairs, witness)
}

/// A Lie algebra bundled with a verified representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieRepPair {
    rep: LieRepresentation,
}

impl LieRepPair {
    pub fn new(rep: LieRepresentation) -> Result<Self> {
        if !check_lie_axioms(rep.algebra()).passed() {
            return Err(Error::NotALieAlgebra("Jacobi fails".into()));
        }
        let check = check_lie_rep(&rep);
        if !check.passed {
            return Err(Error::InvalidRepresentation(format!(
                "witness: {:?}",
                check.witness
            )));
        }
        Ok(LieRepPair { rep })
    }

    pub fn adjoint(algebra: LieStructure) -> Result<Self> {
        LieRepPair::new(LieRepresentation::adjoint(algebra)?)
    }

    pub fn algebra(&self) -> &LieStructure {
        self.rep.algebra()
    }

    pub fn rep(&self) -> &LieRepresentation {
        &self.rep
    }
}

/// An alternating `p`-cochain stored on increasing index tuples
/// (lexicographic), each carrying a target vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieCochain {
    degree: usize,
    source_dim: usize,
    target_dim: usize,
    comp: Vec<Scalar>,
}

/// Increasing `p`-tuples over `0..n` in lexicographic order.
pub fn combinations(n: usize, p: usize) -> Vec<Vec<usize>> {
    if p == 0 {
        return vec![vec![]];
    }
    if p > n {
        return vec![];
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..p).collect();
    loop {
        out.push(cur.clone());
        // Advance to the next combination.
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - p {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..p {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn combo_rank(combo: &[usize], n: usize) -> usize {
    // Lexicographic rank of an increasing tuple.
    let p = combo.len();
    let mut rank = 0usize;
    let mut prev: isize = -1;
    for (slot, &c) in combo.iter().enumerate() {
        for skipped in (prev + 1) as usize..c {
            rank += binomial(n - skipped - 1, p - slot - 1);
        }
        prev = c as isize;
    }
    rank
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1usize;
    for i in 0..k {
        num = num * (n - i) / (i + 1);
    }
    num
}

impl LieCochain {
    pub fn zero(degree: usize, source_dim: usize, target_dim: usize) -> Self {
        LieCochain {
            degree,
            source_dim,
            target_dim,
            comp: vec_zero(binomial(source_dim, degree) * target_dim),
        }
    }

    pub fn from_components(
        degree: usize,
        source_dim: usize,
        target_dim: usize,
        comp: Vec<Scalar>,
    ) -> Result<Self> {
        if comp.len() != binomial(source_dim, degree) * target_dim {
            return Err(Error::DimensionMismatch(format!(
                "{} components for degree {degree} over dims ({source_dim},{target_dim})",
                comp.len()
            )));
        }
        Ok(LieCochain {
            degree,
            source_dim,
            target_dim,
            comp,
        })
    }

    /// Degree-1 cochain from the matrix of a linear map.
    pub fn from_linear_map(m: &Matrix) -> Self {
        let (t, s) = (m.rows(), m.cols());
        let mut comp = vec_zero(s * t);
        for a in 0..s {
            comp[a * t..(a + 1) * t].clone_from_slice(&m.column(a));
        }
        LieCochain {
            degree: 1,
            source_dim: s,
            target_dim: t,
            comp,
        }
    }

    pub fn to_linear_map(&self) -> Result<Matrix> {
        if self.degree != 1 {
            return Err(Error::InvalidInput(format!(
                "degree {} cochain is not a linear map",
                self.degree
            )));
        }
        let t = self.target_dim;
        Ok(Matrix::from_fn(t, self.source_dim, |r, c| {
            self.comp[c * t + r].clone()
        }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn components(&self) -> &[Scalar] {
        &self.comp
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.comp)
    }

    fn chunk(&self, rank: usize) -> &[Scalar] {
        &self.comp[rank * self.target_dim..(rank + 1) * self.target_dim]
    }

    /// Value at an arbitrary basis tuple: sorts with sign, zero on repeats.
    pub fn eval_basis(&self, args: &[usize]) -> Vec<Scalar> {
        debug_assert_eq!(args.len(), self.degree);
        if self.degree == 0 {
            return self.comp.clone();
        }
        let mut sorted: Vec<usize> = args.to_vec();
        // Insertion sort, tracking parity.
        let mut sign_neg = false;
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                sign_neg = !sign_neg;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return vec_zero(self.target_dim);
        }
        let rank = combo_rank(&sorted, self.source_dim);
        let v = self.chunk(rank).to_vec();
        if sign_neg {
            crate::exactla::vec_neg(&v)
        } else {
            v
        }
    }

    /// Value with one slot carrying a vector.
    fn eval_with_vector_slot(&self, args: &mut [usize], slot: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec_zero(self.target_dim);
        for (l, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            args[slot] = l;
            let term = self.eval_basis(args);
            vec_add_scaled(&mut out, &term, c);
        }
        out
    }
}

/// The Chevalley-Eilenberg coboundary evaluated at an increasing tuple.
fn ce_eval(pair: &LieRepPair, f: &LieCochain, args: &[usize]) -> Vec<Scalar> {
    let g = pair.algebra();
    let rep = pair.rep();
    let p1 = args.len(); // p + 1
    let t = f.target_dim;
    let mut out = vec_zero(t);
    // Σ_{i<j} (-1)^(i+j) f([x_i,x_j], ..omit i,j..)
    for i in 0..p1 {
        for j in i + 1..p1 {
            let w = g.bracket_constants(args[i], args[j]);
            if vec_is_zero(w) {
                continue;
            }
            let mut rest: Vec<usize> = Vec::with_capacity(p1 - 1);
            rest.push(0); // placeholder for the bracket slot
            for (pos, &a) in args.iter().enumerate() {
                if pos != i && pos != j {
                    rest.push(a);
                }
            }
            let term = f.eval_with_vector_slot(&mut rest, 0, w);
            if vec_is_zero(&term) {
                continue;
            }
            // 1-based signs
            if (i + 1 + j + 1) % 2 == 0 {
                out = vec_add(&out, &term);
            } else {
                out = vec_sub(&out, &term);
            }
        }
    }
    // Σ_i (-1)^(i+1) ρ(x_i) f(..omit i..)
    for i in 0..p1 {
        let rest: Vec<usize> = args
            .iter()
            .enumerate()
            .filter(|(pos, _)| *pos != i)
            .map(|(_, &a)| a)
            .collect();
        let fv = f.eval_basis(&rest);
        if vec_is_zero(&fv) {
            continue;
        }
        let term = rep.rho_basis(args[i]).mul_vec(&fv).expect("dims agree");
        if (i + 1 + 1) % 2 == 0 {
            out = vec_add(&out, &term);
        } else {
            out = vec_sub(&out, &term);
        }
    }
    out
}

/// Applies the CE coboundary, producing the degree-(p+1) cochain.
pub fn ce_apply(pair: &LieRepPair, f: &LieCochain) -> Result<LieCochain> {
    let n = pair.algebra().dim();
    let t = pair.rep().module_dim();
    if f.source_dim != n || f.target_dim != t {
        return Err(Error::DimensionMismatch(format!(
            "cochain dims ({},{}) over pair dims ({n},{t})",
            f.source_dim, f.target_dim
        )));
    }
    let combos = combinations(n, f.degree + 1);
    let mut comp = vec_zero(combos.len() * t);
    for (rank, combo) in combos.iter().enumerate() {
        let val = ce_eval(pair, f, combo);
        comp[rank * t..(rank + 1) * t].clone_from_slice(&val);
    }
    LieCochain::from_components(f.degree + 1, n, t, comp)
}

/// Matrix of `∂_ρ` from degree-`p` to degree-`p+1` compressed coordinates.
pub fn ce_coboundary(pair: &LieRepPair, degree: usize) -> Result<Matrix> {
    let n = pair.algebra().dim();
    let t = pair.rep().module_dim();
    let dom = binomial(n, degree) * t;
    let cod = binomial(n, degree + 1) * t;
    let mut cols = Vec::with_capacity(dom);
    for b in 0..dom {
        let mut comp = vec_zero(dom);
        comp[b] = Scalar::one();
        let f = LieCochain::from_components(degree, n, t, comp)?;
        cols.push(ce_apply(pair, &f)?.comp);
    }
    Matrix::from_columns(cod, &cols)
}

/// `[Tu,Tv] = T(ρ(Tu)v - ρ(Tv)u)` on all basis pairs of `V`.
pub fn check_lie_o_operator(pair: &LieRepPair, t: &Matrix) -> Result<CheckReport> {
    let g = pair.algebra();
    let rep = pair.rep();
    let n = g.dim();
    let m = rep.module_dim();
    if t.rows() != n || t.cols() != m {
        return Err(Error::DimensionMismatch(format!(
            "operator {}x{} for pair dims ({n},{m})",
            t.rows(),
            t.cols()
        )));
    }
    let cols: Vec<Vec<Scalar>> = (0..m).map(|u| t.column(u)).collect();
    let pairs = tuple_count(m, 2);
    let witness = find_map_first(pairs, |idx| {
        let tu = decode_tuple(idx, m, 2);
        let (u, v) = (tu[0], tu[1]);
        let lhs = g.bracket(&cols[u], &cols[v]).expect("dims agree");
        let arg = vec_sub(
            &rep.rho(&cols[u]).expect("dims agree").column(v),
            &rep.rho(&cols[v]).expect("dims agree").column(u),
        );
        let rhs = t.mul_vec(&arg).expect("dims agree");
        if lhs != rhs {
            Some(Witness::new(vec![u, v], lhs, rhs))
        } else {
            None
        }
    });
    Ok(CheckReport::from_witness("lie_o_operator", pairs, witness))
}

/// Everything a Lie O-operator induces: the bracket on `V`, the action of `V`
/// back on `L`, and the coboundary of that complex (by degree).
#[derive(Debug, Clone)]
pub struct LieInduced {
    pub v_algebra: LieStructure,
    pub rho_t: LieRepresentation,
}

/// Builds and verifies the induced structures: `(V,[·,·]_T)` satisfies
/// Jacobi, `ρ_T` is a representation of it, and `d̃_T` squares to zero at
/// degrees (1,2).
pub fn lie_induced_structures(pair: &LieRepPair, t: &Matrix) -> Result<LieInduced> {
    let check = check_lie_o_operator(pair, t)?;
    if !check.passed {
        return Err(Error::NotALieOOperator(format!(
            "witness: {:?}",
            check.witness
        )));
    }
    let g = pair.algebra();
    let rep = pair.rep();
    let n = g.dim();
    let m = rep.module_dim();
    let cols: Vec<Vec<Scalar>> = (0..m).map(|u| t.column(u)).collect();

    let mut assignments = Vec::new();
    for u in 0..m {
        for v in u + 1..m {
            let val = vec_sub(
                &rep.rho(&cols[u])?.column(v),
                &rep.rho(&cols[v])?.column(u),
            );
            if !vec_is_zero(&val) {
                assignments.push((u, v, val));
            }
        }
    }
    let v_algebra = LieStructure::from_assignments(m, &assignments)?;
    if !check_lie_axioms(&v_algebra).passed() {
        return Err(Error::NotALieOOperator(
            "induced bracket on V fails Jacobi".into(),
        ));
    }

    let mut rho_t = Vec::with_capacity(m);
    for u in 0..m {
        let mut mat = Matrix::zeros(n, n);
        for x in 0..n {
            let ex = basis_vec(n, x);
            let mut val = g.bracket(&cols[u], &ex)?;
            val = vec_add(&val, &t.mul_vec(&rep.rho(&ex)?.column(u))?);
            for r in 0..n {
                if !val[r].is_zero() {
                    *mat.at_mut(r, x) = val[r].clone();
                }
            }
        }
        rho_t.push(mat);
    }
    let rho_t = LieRepresentation::new(v_algebra.clone(), n, rho_t)?;
    let rep_check = check_lie_rep(&rho_t);
    if !rep_check.passed {
        return Err(Error::NotALieOOperator(format!(
            "rho_T fails the representation identity: {:?}",
            rep_check.witness
        )));
    }
    let d1 = d_tilde_matrix(pair, t, 1)?;
    let d2 = d_tilde_matrix(pair, t, 2)?;
    if !d2.mul(&d1)?.is_zero() {
        return Err(Error::NotALieOOperator("d̃_T does not square to zero".into()));
    }
    Ok(LieInduced { v_algebra, rho_t })
}

/// Coboundary of the operator complex `C^p(V, L)` in compressed coordinates,
/// written directly from the displayed sum (bracket `[·,·]_T`, action `ρ_T`).
pub fn d_tilde_matrix(pair: &LieRepPair, t: &Matrix, degree: usize) -> Result<Matrix> {
    let g = pair.algebra();
    let rep = pair.rep();
    let n = g.dim();
    let m = rep.module_dim();
    let cols: Vec<Vec<Scalar>> = (0..m).map(|u| t.column(u)).collect();

    let dom = binomial(m, degree) * n;
    let cod_combos = combinations(m, degree + 1);
    let mut out_cols = Vec::with_capacity(dom);
    for b in 0..dom {
        let mut comp = vec_zero(dom);
        comp[b] = Scalar::one();
        let f = LieCochain::from_components(degree, m, n, comp)?;
        let mut out = vec_zero(cod_combos.len() * n);
        for (rank, combo) in cod_combos.iter().enumerate() {
            let p1 = combo.len();
            let mut val = vec_zero(n);
            // Σ_{i<j} (-1)^(i+j) f([u_i,u_j]_T, ..)
            for i in 0..p1 {
                for j in i + 1..p1 {
                    let w = vec_sub(
                        &rep.rho(&cols[combo[i]])?.column(combo[j]),
                        &rep.rho(&cols[combo[j]])?.column(combo[i]),
                    );
                    if vec_is_zero(&w) {
                        continue;
                    }
                    let mut rest: Vec<usize> = Vec::with_capacity(p1 - 1);
                    rest.push(0);
                    for (pos, &a) in combo.iter().enumerate() {
                        if pos != i && pos != j {
                            rest.push(a);
                        }
                    }
                    let term = f.eval_with_vector_slot(&mut rest, 0, &w);
                    if vec_is_zero(&term) {
                        continue;
                    }
                    if (i + j) % 2 == 0 {
                        val = vec_add(&val, &term);
                    } else {
                        val = vec_sub(&val, &term);
                    }
                }
            }
            // Σ_i (-1)^(i+1) ([Tu_i, f(..)] + T ρ(f(..)) u_i)
            for i in 0..p1 {
                let rest: Vec<usize> = combo
                    .iter()
                    .enumerate()
                    .filter(|(pos, _)| *pos != i)
                    .map(|(_, &a)| a)
                    .collect();
                let fv = f.eval_basis(&rest);
                if vec_is_zero(&fv) {
                    continue;
                }
                let mut term = g.bracket(&cols[combo[i]], &fv)?;
                term = vec_add(&term, &t.mul_vec(&rep.rho(&fv)?.column(combo[i]))?);
                if i % 2 == 0 {
                    val = vec_add(&val, &term);
                } else {
                    val = vec_sub(&val, &term);
                }
            }
            out[rank * n..(rank + 1) * n].clone_from_slice(&val);
        }
        out_cols.push(out);
    }
    Matrix::from_columns(cod_combos.len() * n, &out_cols)
}

/// The associated triple-system pair: `[x,y,z] = [[x,y],z]` with
/// `θ_ρ(x,y) = ρ(y)ρ(x)`. Verifies the representation axioms and the
/// compatibility of both semidirect constructions.
pub fn lts_rep_from_lie(pair: &LieRepPair) -> Result<LtsRepPair> {
    let g = pair.algebra();
    let rep = pair.rep();
    let n = g.dim();
    let m = rep.module_dim();
    let algebra = lie_to_lts(g)?;
    let mut theta = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            theta.push(rep.rho_basis(j).mul(rep.rho_basis(i))?);
        }
    }
    let lts_rep = LtsRepresentation::new(algebra, m, theta)?;
    let axioms = check_rep_axioms(&lts_rep);
    if !axioms.passed() {
        return Err(Error::InvalidRepresentation(format!(
            "transferred theta fails the axioms: {:?} / {:?}",
            axioms.axiom1.witness, axioms.axiom2.witness
        )));
    }
    let out = LtsRepPair::new(lts_rep);
    // Two semidirect routes agree: the triple system of the Lie semidirect
    // product equals the semidirect product of the transferred pair.
    let lie_sd = lie_semidirect(pair)?;
    if lie_to_lts(&lie_sd)? != semidirect_structure(&out) {
        return Err(Error::InvalidRepresentation(
            "semidirect constructions disagree after transfer".into(),
        ));
    }
    Ok(out)
}

/// The Lie semidirect product `[x+u, y+v] = [x,y] + ρ(x)v - ρ(y)u` on `L ⊕ V`.
pub fn lie_semidirect(pair: &LieRepPair) -> Result<LieStructure> {
    let g = pair.algebra();
    let rep = pair.rep();
    let n = g.dim();
    let m = rep.module_dim();
    let dim = n + m;
    let mut assignments = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut val = vec_zero(dim);
            val[..n].clone_from_slice(g.bracket_constants(i, j));
            if !vec_is_zero(&val) {
                assignments.push((i, j, val));
            }
        }
        for v in 0..m {
            let mut val = vec_zero(dim);
            val[n..].clone_from_slice(&rep.rho_basis(i).column(v));
            if !vec_is_zero(&val) {
                assignments.push((i, n + v, val));
            }
        }
    }
    LieStructure::from_assignments(dim, &assignments)
}

/// Transfer of a CE 1-cocycle: same underlying map, checked to be a Yamaguti
/// 1-cocycle of the associated pair.
pub fn transfer_1cocycle(pair: &LieRepPair, f: &LieCochain) -> Result<(Cochain, CocycleReport)> {
    if f.degree != 1 {
        return Err(Error::InvalidInput(format!(
            "expected a degree-1 cochain, got degree {}",
            f.degree
        )));
    }
    if !ce_apply(pair, f)?.is_zero() {
        return Err(Error::NotACocycle("∂_ρ f ≠ 0".into()));
    }
    let transferred = Cochain::from_linear_map(&f.to_linear_map()?);
    let lts_pair = lts_rep_from_lie(pair)?;
    let report = check_cocycle(&lts_pair, &transferred)?;
    Ok((transferred, report))
}

/// Transfer of a CE 2-cocycle `φ` to `ω(x,y,z) = φ([x,y],z) - ρ(z)φ(x,y)`,
/// checked to be a Yamaguti 3-cocycle of the associated pair.
pub fn transfer_2cocycle(pair: &LieRepPair, phi: &LieCochain) -> Result<(Cochain, CocycleReport)> {
    if phi.degree != 2 {
        return Err(Error::InvalidInput(format!(
            "expected a degree-2 cochain, got degree {}",
            phi.degree
        )));
    }
    if !ce_apply(pair, phi)?.is_zero() {
        return Err(Error::NotACocycle("∂_ρ φ ≠ 0".into()));
    }
    let omega = omega_from_phi(pair, phi)?;
    let lts_pair = lts_rep_from_lie(pair)?;
    let report = check_cocycle(&lts_pair, &omega)?;
    Ok((omega, report))
}

/// `ω(x,y,z) = φ([x,y],z) - ρ(z)φ(x,y)` as a raw degree-3 tensor.
pub fn omega_from_phi(pair: &LieRepPair, phi: &LieCochain) -> Result<Cochain> {
    let g = pair.algebra();
    let rep = pair.rep();
    let n = g.dim();
    let t = rep.module_dim();
    let mut values = vec_zero(n.pow(3) * t);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut args = [0usize, k];
                let mut val =
                    phi.eval_with_vector_slot(&mut args, 0, g.bracket_constants(i, j));
                let pv = phi.eval_basis(&[i, j]);
                val = vec_sub(&val, &rep.rho_basis(k).mul_vec(&pv)?);
                let off = ((i * n + j) * n + k) * t;
                values[off..off + t].clone_from_slice(&val);
            }
        }
    }
    Cochain::from_values(3, n, t, values)
}

/// The associated-complex identity for arbitrary `α ∈ C¹`:
/// `δ¹(α)(x,y,z) = ∂_ρ(α)([x,y],z) - ρ(z) ∂_ρ(α)(x,y)`, as exact tensors.
pub fn associated_lemma_holds(pair: &LieRepPair, alpha: &LieCochain) -> Result<bool> {
    if alpha.degree != 1 {
        return Err(Error::InvalidInput("alpha must have degree 1".into()));
    }
    let lts_pair = lts_rep_from_lie(pair)?;
    let transferred = Cochain::from_linear_map(&alpha.to_linear_map()?);
    let lhs = crate::cohomology::delta_raw(&lts_pair, &transferred)?;
    let d_alpha = ce_apply(pair, alpha)?;
    let rhs = omega_from_phi(pair, &d_alpha)?;
    Ok(lhs == rhs)
}

/// Transfer of a Lie O-operator to the associated pair, with the two-route
/// coincidence check on the induced bracket.
pub fn transfer_o_operator(pair: &LieRepPair, t: &Matrix) -> Result<OOperator> {
    let check = check_lie_o_operator(pair, t)?;
    if !check.passed {
        return Err(Error::NotALieOOperator(format!(
            "witness: {:?}",
            check.witness
        )));
    }
    let lts_pair = lts_rep_from_lie(pair)?;
    let op = OOperator::new(lts_pair, t.clone())?;
    let rep = check_o_operator(&op)?;
    if !rep.passed {
        return Err(Error::NotALieOOperator(format!(
            "transferred operator fails the triple-system identity at {:?}",
            rep.witness
        )));
    }
    // Route 1: induced triple bracket of the transferred operator.
    let route1 = induced_bracket(&op)?;
    // Route 2: the Lie bracket T induces on V, then its triple system.
    let induced = lie_induced_structures(pair, t)?;
    let route2 = lie_to_lts(&induced.v_algebra)?;
    if route1 != route2 {
        return Err(Error::NotALieOOperator(
            "the two induced triple systems on V disagree".into(),
        ));
    }
    Ok(op)
}

/// Verdicts for transferring operator-complex cocycles.
#[derive(Debug, Clone, serde::Serialize)]
pub struct TransferVerdict {
    pub is_source_cocycle: bool,
    pub transferred_cocycle: bool,
}

/// Degree-1 transfer at the operator level: `f ∈ ker d̃¹_T` must be a
/// 1-cocycle of the operator complex on the associated pair.
pub fn transfer_t_1cocycle(
    pair: &LieRepPair,
    t: &Matrix,
    f: &LieCochain,
) -> Result<(Cochain, TransferVerdict)> {
    if f.degree != 1 {
        return Err(Error::InvalidInput("expected a degree-1 cochain".into()));
    }
    let d1 = d_tilde_matrix(pair, t, 1)?;
    let is_source = vec_is_zero(&d1.mul_vec(f.components())?);
    if !is_source {
        return Err(Error::NotACocycle("d̃¹_T f ≠ 0".into()));
    }
    let op = transfer_o_operator(pair, t)?;
    let pair_t = crate::cohomology::induced_pair(&op)?;
    let transferred = Cochain::from_linear_map(&f.to_linear_map()?);
    let image = crate::cohomology::delta_raw(&pair_t, &transferred)?;
    Ok((
        transferred,
        TransferVerdict {
            is_source_cocycle: true,
            transferred_cocycle: image.is_zero(),
        },
    ))
}

/// Degree-2 transfer at the operator level:
/// `ω(u,v,w) = φ([u,v]_T, w) - ρ_T(w) φ(u,v)` from `φ ∈ ker d̃²_T`.
pub fn transfer_t_2cocycle(
    pair: &LieRepPair,
    t: &Matrix,
    phi: &LieCochain,
) -> Result<(Cochain, TransferVerdict)> {
    if phi.degree != 2 {
        return Err(Error::InvalidInput("expected a degree-2 cochain".into()));
    }
    let d2 = d_tilde_matrix(pair, t, 2)?;
    if !vec_is_zero(&d2.mul_vec(phi.components())?) {
        return Err(Error::NotACocycle("d̃²_T φ ≠ 0".into()));
    }
    let induced = lie_induced_structures(pair, t)?;
    let m = pair.rep().module_dim();
    let n = pair.algebra().dim();
    // ω over V with values in L.
    let mut values = vec_zero(m.pow(3) * n);
    for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                let mut args = [0usize, w];
                let mut val = phi.eval_with_vector_slot(
                    &mut args,
                    0,
                    induced.v_algebra.bracket_constants(u, v),
                );
                let pv = phi.eval_basis(&[u, v]);
                val = vec_sub(&val, &induced.rho_t.rho_basis(w).mul_vec(&pv)?);
                let off = ((u * m + v) * m + w) * n;
                values[off..off + n].clone_from_slice(&val);
            }
        }
    }
    let omega = Cochain::from_values(3, m, n, values)?;
    let op = transfer_o_operator(pair, t)?;
    let pair_t = crate::cohomology::induced_pair(&op)?;
    let space = crate::cohomology::cochain_space(m, n, 3)?;
    let in_space = space.contains(&omega);
    let image_zero = crate::cohomology::delta_raw(&pair_t, &omega)?.is_zero();
    Ok((
        omega,
        TransferVerdict {
            is_source_cocycle: true,
            transferred_cocycle: in_space && image_zero,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::vec_scale;
    use crate::fixtures;

    #[test]
    fn combinations_and_ranks() {
        let c = combinations(4, 2);
        assert_eq!(c.len(), 6);
        assert_eq!(c[0], vec![0, 1]);
        assert_eq!(c[5], vec![2, 3]);
        for (rank, combo) in c.iter().enumerate() {
            assert_eq!(combo_rank(combo, 4), rank);
        }
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3).len(), 0);
    }

    #[test]
    fn alternating_evaluation() {
        // f(e0 ∧ e1) = e0 on a 2-dim target.
        let f = LieCochain::from_components(
            2,
            2,
            2,
            vec![Scalar::one(), Scalar::zero()],
        )
        .unwrap();
        assert_eq!(f.eval_basis(&[0, 1]), basis_vec(2, 0));
        assert_eq!(f.eval_basis(&[1, 0]), vec_scale(&basis_vec(2, 0), &Scalar::from_int(-1)));
        assert!(vec_is_zero(&f.eval_basis(&[1, 1])));
    }

    #[test]
    fn lie_rep_checks() {
        for (_, pair) in fixtures::lie_pairs() {
            assert!(check_lie_rep(pair.rep()).passed);
        }
        // Random-looking matrices on sl2 are not a representation.
        let bad = LieRepresentation::new(
            fixtures::lie_sl2(),
            2,
            vec![
                Matrix::from_ints(&[&[1, 1], &[0, 1]]),
                Matrix::from_ints(&[&[2, 0], &[1, 1]]),
                Matrix::from_ints(&[&[0, 1], &[1, 0]]),
            ],
        )
        .unwrap();
        let rep = check_lie_rep(&bad);
        assert!(!rep.passed && rep.witness.is_some());
    }

    #[test]
    fn ce_squares_to_zero() {
        for (_, pair) in fixtures::lie_pairs() {
            for p in 0..=2 {
                let d_p = ce_coboundary(&pair, p).unwrap();
                let d_p1 = ce_coboundary(&pair, p + 1).unwrap();
                assert!(d_p1.mul(&d_p).unwrap().is_zero(), "∂² ≠ 0 at degree {p}");
            }
        }
    }

    #[test]
    fn ce_of_zero_rep_on_abelian_vanishes() {
        let pair = LieRepPair::new(
            LieRepresentation::new(LieStructure::zero(2), 2, vec![Matrix::zeros(2, 2); 2])
                .unwrap(),
        )
        .unwrap();
        for p in 0..=2 {
            assert!(ce_coboundary(&pair, p).unwrap().is_zero());
        }
    }

    #[test]
    fn ce_degree0_is_rho_action() {
        let pair = fixtures::lie_sl2_natural();
        let d0 = ce_coboundary(&pair, 0).unwrap();
        // ∂(v)(x) = ρ(x) v: column v at block x equals ρ(e_x) e_v.
        let m = pair.rep().module_dim();
        for v in 0..m {
            let col = d0.column(v);
            for x in 0..pair.algebra().dim() {
                let expect = pair.rep().rho_basis(x).column(v);
                assert_eq!(&col[x * m..(x + 1) * m], &expect[..]);
            }
        }
    }

    #[test]
    fn fixture_lie_operators_pass() {
        let heis = fixtures::lie_adjoint_pair(fixtures::lie_heisenberg());
        assert!(check_lie_o_operator(&heis, &fixtures::lie_operator_heisenberg())
            .unwrap()
            .passed);

        let sl2 = fixtures::lie_sl2_natural();
        assert!(check_lie_o_operator(&sl2, &fixtures::lie_operator_sl2_natural())
            .unwrap()
            .passed);

        // Identity on the nonabelian adjoint pair fails.
        let sl2adj = fixtures::lie_adjoint_pair(fixtures::lie_sl2());
        let rep = check_lie_o_operator(&sl2adj, &Matrix::identity(3)).unwrap();
        assert!(!rep.passed);

        // The zero map always passes.
        assert!(check_lie_o_operator(&sl2adj, &Matrix::zeros(3, 3)).unwrap().passed);
    }

    #[test]
    fn induced_structures_verify() {
        let sl2 = fixtures::lie_sl2_natural();
        let t = fixtures::lie_operator_sl2_natural();
        let induced = lie_induced_structures(&sl2, &t).unwrap();
        assert!(check_lie_axioms(&induced.v_algebra).passed());
        assert!(check_lie_rep(&induced.rho_t).passed);

        // T = 0 induces the abelian bracket and the action x ↦ Tρ(x)u = 0.
        let zero = Matrix::zeros(3, 2);
        let induced = lie_induced_structures(&sl2, &zero).unwrap();
        assert_eq!(induced.v_algebra, LieStructure::zero(2));
        for u in 0..2 {
            assert!(induced.rho_t.rho_basis(u).is_zero());
        }
    }

    #[test]
    fn transfer_pair_passes_axioms() {
        for (name, pair) in fixtures::lie_pairs() {
            let lts_pair = lts_rep_from_lie(&pair).unwrap();
            assert!(
                check_rep_axioms(lts_pair.rep()).passed(),
                "transfer fails for {name}"
            );
        }
    }

    #[test]
    fn transfer_1cocycles_from_kernel_basis() {
        let pair = fixtures::lie_sl2_natural();
        let d1 = ce_coboundary(&pair, 1).unwrap();
        let kernel = d1.kernel_basis();
        for v in kernel.basis() {
            let f = LieCochain::from_components(1, 3, 2, v.clone()).unwrap();
            let (_, report) = transfer_1cocycle(&pair, &f).unwrap();
            assert!(report.is_cocycle());
        }
        // CE coboundaries of constants are 1-cocycles and transfer too.
        for v0 in 0..2 {
            let mut comp = vec_zero(2);
            comp[v0] = Scalar::one();
            let c = LieCochain::from_components(0, 3, 2, comp).unwrap();
            let df = ce_apply(&pair, &c).unwrap();
            let (_, report) = transfer_1cocycle(&pair, &df).unwrap();
            assert!(report.is_cocycle());
        }
    }

    #[test]
    fn transfer_2cocycles_from_kernel_basis() {
        let pair = fixtures::lie_adjoint_pair(fixtures::lie_heisenberg());
        let d2 = ce_coboundary(&pair, 2).unwrap();
        let kernel = d2.kernel_basis();
        assert!(kernel.dim() > 0);
        for v in kernel.basis() {
            let phi = LieCochain::from_components(2, 3, 3, v.clone()).unwrap();
            let (_, report) = transfer_2cocycle(&pair, &phi).unwrap();
            assert!(report.is_cocycle());
        }
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let pair = fixtures::lie_sl2_natural();
        // Find a non-cocycle among basis maps.
        let d1 = ce_coboundary(&pair, 1).unwrap();
        let dim = 3 * 2;
        let mut rejected = false;
        for b in 0..dim {
            let mut comp = vec_zero(dim);
            comp[b] = Scalar::one();
            let f = LieCochain::from_components(1, 3, 2, comp.clone()).unwrap();
            if !vec_is_zero(&d1.mul_vec(&comp).unwrap()) {
                assert!(matches!(
                    transfer_1cocycle(&pair, &f),
                    Err(Error::NotACocycle(_))
                ));
                rejected = true;
            }
        }
        assert!(rejected);
    }

    #[test]
    fn associated_lemma_on_all_basis_maps() {
        for (name, pair) in fixtures::lie_pairs() {
            let n = pair.algebra().dim();
            let m = pair.rep().module_dim();
            for b in 0..n * m {
                let mut comp = vec_zero(n * m);
                comp[b] = Scalar::one();
                let alpha = LieCochain::from_components(1, n, m, comp).unwrap();
                assert!(
                    associated_lemma_holds(&pair, &alpha).unwrap(),
                    "lemma fails for {name} basis {b}"
                );
            }
        }
    }

    #[test]
    fn cohomologous_cocycles_transfer_to_same_class() {
        let pair = fixtures::lie_adjoint_pair(fixtures::lie_heisenberg());
        let d2 = ce_coboundary(&pair, 2).unwrap();
        let kernel = d2.kernel_basis();
        let phi1 = LieCochain::from_components(2, 3, 3, kernel.basis()[0].clone()).unwrap();
        // φ2 = φ1 + ∂α for some α.
        let mut alpha_comp = vec_zero(9);
        alpha_comp[1] = Scalar::one();
        alpha_comp[5] = Scalar::from_int(-2);
        let alpha = LieCochain::from_components(1, 3, 3, alpha_comp).unwrap();
        let d_alpha = ce_apply(&pair, &alpha).unwrap();
        let phi2 = LieCochain::from_components(
            2,
            3,
            3,
            vec_add(phi1.components(), d_alpha.components()),
        )
        .unwrap();
        let (omega1, r1) = transfer_2cocycle(&pair, &phi1).unwrap();
        let (omega2, r2) = transfer_2cocycle(&pair, &phi2).unwrap();
        assert!(r1.is_cocycle() && r2.is_cocycle());
        // ω2 - ω1 = δ¹(α) exactly.
        let lts_pair = lts_rep_from_lie(&pair).unwrap();
        let alpha_t = Cochain::from_linear_map(&alpha.to_linear_map().unwrap());
        let delta_alpha = crate::cohomology::delta_raw(&lts_pair, &alpha_t).unwrap();
        let diff = crate::exactla::vec_sub(omega2.values(), omega1.values());
        assert_eq!(diff, delta_alpha.values().to_vec());
    }

    #[test]
    fn two_route_coincidence_for_operators() {
        let sl2 = fixtures::lie_sl2_natural();
        let t = fixtures::lie_operator_sl2_natural();
        assert!(transfer_o_operator(&sl2, &t).is_ok());

        let heis = fixtures::lie_adjoint_pair(fixtures::lie_heisenberg());
        assert!(transfer_o_operator(&heis, &fixtures::lie_operator_heisenberg()).is_ok());

        // Zero transfers trivially on every fixture pair.
        for (_, pair) in fixtures::lie_pairs() {
            let n = pair.algebra().dim();
            let m = pair.rep().module_dim();
            assert!(transfer_o_operator(&pair, &Matrix::zeros(n, m)).is_ok());
        }

        // A failing candidate is refused.
        let sl2adj = fixtures::lie_adjoint_pair(fixtures::lie_sl2());
        assert!(matches!(
            transfer_o_operator(&sl2adj, &Matrix::identity(3)),
            Err(Error::NotALieOOperator(_))
        ));
    }

    #[test]
    fn transferred_sl2_operator_cohomology_pins() {
        // Regression pins for a rectangular operator complex (V dim 2, L dim 3).
        let op = transfer_o_operator(
            &fixtures::lie_sl2_natural(),
            &fixtures::lie_operator_sl2_natural(),
        )
        .unwrap();
        let h1 = crate::cohomology::o_operator_cohomology(&op, 1).unwrap();
        assert_eq!((h1.dim_cocycles, h1.dim_coboundaries, h1.dim_h), (4, 3, 1));
        let h3 = crate::cohomology::o_operator_cohomology(&op, 3).unwrap();
        assert_eq!(h3.dim_h, h3.dim_cocycles - h3.dim_coboundaries);
    }

    #[test]
    fn transfer_t_cocycles_from_kernels() {
        let sl2 = fixtures::lie_sl2_natural();
        let t = fixtures::lie_operator_sl2_natural();
        let d1 = d_tilde_matrix(&sl2, &t, 1).unwrap();
        for v in d1.kernel_basis().basis() {
            let f = LieCochain::from_components(1, 2, 3, v.clone()).unwrap();
            let (_, verdict) = transfer_t_1cocycle(&sl2, &t, &f).unwrap();
            assert!(verdict.transferred_cocycle);
        }
        let d2 = d_tilde_matrix(&sl2, &t, 2).unwrap();
        for v in d2.kernel_basis().basis() {
            let phi = LieCochain::from_components(2, 2, 3, v.clone()).unwrap();
            let (_, verdict) = transfer_t_2cocycle(&sl2, &t, &phi).unwrap();
            assert!(verdict.transferred_cocycle);
        }
        // φ = d̃_T(α): the transferred ω equals δ¹_T(α).
        let mut alpha_comp = vec_zero(2 * 3);
        alpha_comp[0] = Scalar::one();
        alpha_comp[4] = Scalar::from_int(3);
        let alpha = LieCochain::from_components(1, 2, 3, alpha_comp).unwrap();
        let d_alpha_comp = d1.mul_vec(alpha.components()).unwrap();
        if vec_is_zero(&d2.mul_vec(&d_alpha_comp).unwrap()) {
            let phi = LieCochain::from_components(2, 2, 3, d_alpha_comp).unwrap();
            let (omega, verdict) = transfer_t_2cocycle(&sl2, &t, &phi).unwrap();
            assert!(verdict.transferred_cocycle);
            let op = transfer_o_operator(&sl2, &t).unwrap();
            let pair_t = crate::cohomology::induced_pair(&op).unwrap();
            let alpha_t = Cochain::from_linear_map(&alpha.to_linear_map().unwrap());
            let delta_alpha = crate::cohomology::delta_raw(&pair_t, &alpha_t).unwrap();
            assert_eq!(omega.values(), delta_alpha.values());
        }
    }
}
