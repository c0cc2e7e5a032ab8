//! Structures an O-operator induces, its extended complex, and the functorial
//! cochain map between the complexes of morphic operators.

use super::{coboundary_unchecked, cochain_space, Cochain, CohomologyReport};
use crate::exactla::{
    basis_vec, quotient_dim, vec_add, vec_add_scaled, vec_sub, vec_zero, Matrix,
    Scalar,
};
use crate::exec::{decode_tuple, map_indexed, tuple_count};
use crate::lts::{adjoint_action, check_lts_axioms, check_lts_morphism, wedge_dim, wedge_pairs,
    AlgebraMorphism, Bivector, LtsStructure};
use crate::operators::{check_o_morphism, check_o_operator, OOperator, OOperatorMorphism};
use crate::reps::{check_rep_axioms, LtsRepPair, LtsRepresentation};
use crate::{Error, Result};

fn ensure_o_operator(t: &OOperator) -> Result<()> {
    let rep = check_o_operator(t)?;
    if !rep.passed {
        return Err(Error::NotAnOOperator(format!("witness: {:?}", rep.witness)));
    }
    Ok(())
}

/// The bracket `[u,v,w]_T = D(Tu,Tv)w + θ(Tv,Tw)u - θ(Tu,Tw)v` on `V`.
/// Verifies the axioms of the result and that `T` is a morphism onto the
/// original bracket.
pub fn induced_bracket(t: &OOperator) -> Result<LtsStructure> {
    ensure_o_operator(t)?;
    let v = induced_bracket_unchecked(t)?;
    if !check_lts_axioms(&v).passed() {
        return Err(Error::NotAnOOperator(
            "induced bracket fails the triple system axioms".into(),
        ));
    }
    let morph = check_lts_morphism(&AlgebraMorphism {
        source: v.clone(),
        target: t.pair().algebra().clone(),
        matrix: t.matrix().clone(),
    })?;
    if !morph.passed {
        return Err(Error::NotAnOOperator(
            "T is not a morphism from the induced bracket".into(),
        ));
    }
    Ok(v)
}

fn induced_bracket_unchecked(t: &OOperator) -> Result<LtsStructure> {
    let rep = t.pair().rep();
    let m = rep.module_dim();
    let cols = t.columns();
    let mut tensor = vec_zero(m.pow(4));
    for u in 0..m {
        for v in 0..m {
            let d_uv = rep.d(&cols[u], &cols[v])?;
            for w in 0..m {
                let mut val = d_uv.column(w);
                val = vec_add(&val, &rep.theta(&cols[v], &cols[w])?.column(u));
                val = vec_sub(&val, &rep.theta(&cols[u], &cols[w])?.column(v));
                let slot = ((u * m + v) * m + w) * m;
                tensor[slot..slot + m].clone_from_slice(&val);
            }
        }
    }
    LtsStructure::from_tensor(m, tensor)
}

/// The representation `θ_T(u,v) x = [x,Tu,Tv] + T(θ(x,Tv)u - D(x,Tu)v)` of
/// the induced bracket on `L`. Verifies the representation axioms and the
/// derived-action cross formula
/// `D_T(u,v) z = [Tu,Tv,z] - T(-θ(Tu,z)v + θ(Tv,z)u)`.
pub fn induced_rep(t: &OOperator) -> Result<LtsRepresentation> {
    ensure_o_operator(t)?;
    let algebra_v = induced_bracket(t)?;
    let rep = t.pair().rep();
    let a = t.pair().algebra();
    let n = a.dim();
    let m = rep.module_dim();
    let cols = t.columns();

    let mut theta = Vec::with_capacity(m * m);
    for u in 0..m {
        for v in 0..m {
            let mut mat = Matrix::zeros(n, n);
            for x in 0..n {
                let ex = basis_vec(n, x);
                let mut val = a.bracket(&ex, &cols[u], &cols[v])?;
                let inner = vec_sub(
                    &rep.theta(&ex, &cols[v])?.column(u),
                    &rep.d(&ex, &cols[u])?.column(v),
                );
                val = vec_add(&val, &t.apply(&inner)?);
                for r in 0..n {
                    if !val[r].is_zero() {
                        *mat.at_mut(r, x) = val[r].clone();
                    }
                }
            }
            theta.push(mat);
        }
    }
    let induced = LtsRepresentation::new(algebra_v, n, theta)?;
    let axioms = check_rep_axioms(&induced);
    if !axioms.passed() {
        return Err(Error::NotAnOOperator(format!(
            "induced representation fails the axioms: {:?} / {:?}",
            axioms.axiom1.witness, axioms.axiom2.witness
        )));
    }
    // Cross formula for the derived action.
    for u in 0..m {
        for v in 0..m {
            let d_t = induced.d_basis(u, v);
            for z in 0..n {
                let ez = basis_vec(n, z);
                let mut expect = a.bracket(&cols[u], &cols[v], &ez)?;
                let inner = vec_sub(
                    &rep.theta(&cols[v], &ez)?.column(u),
                    &rep.theta(&cols[u], &ez)?.column(v),
                );
                expect = vec_sub(&expect, &t.apply(&inner)?);
                if d_t.column(z) != expect {
                    return Err(Error::NotAnOOperator(format!(
                        "derived action cross formula fails at (u,v,z) = ({u},{v},{z})"
                    )));
                }
            }
        }
    }
    Ok(induced)
}

/// The pair `(V, [·,·,·]_T; θ_T)` an O-operator induces.
pub fn induced_pair(t: &OOperator) -> Result<LtsRepPair> {
    Ok(LtsRepPair::new(induced_rep(t)?))
}

/// The degree-1 cochain `∂_T(X): v ↦ T D(X) v - [X, T v]` from `V` to `L`.
pub fn partial_t(t: &OOperator, x: &Bivector) -> Result<Cochain> {
    let a = t.pair().algebra();
    let rep = t.pair().rep();
    let n = a.dim();
    let m = rep.module_dim();
    if x.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "bivector dim {} over algebra dim {n}",
            x.dim()
        )));
    }
    let d_x = rep.d_of_bivector(x)?;
    let mut mat = Matrix::zeros(n, m);
    for v in 0..m {
        let tv = t.column(v);
        let mut val = t.apply(&d_x.column(v))?;
        val = vec_sub(&val, &adjoint_action(a, x, &tv)?);
        for r in 0..n {
            if !val[r].is_zero() {
                *mat.at_mut(r, v) = val[r].clone();
            }
        }
    }
    Ok(Cochain::from_linear_map(&mat))
}

/// Matrix of `∂_T` from wedge coordinates (lexicographic `e_i ∧ e_j`, `i<j`)
/// to degree-1 cochain coordinates.
pub fn partial_t_matrix(t: &OOperator) -> Result<Matrix> {
    let n = t.pair().algebra().dim();
    let m = t.pair().rep().module_dim();
    let pairs = wedge_pairs(n);
    let mut cols = Vec::with_capacity(pairs.len());
    for (i, j) in pairs {
        let x = Bivector::from_pair(n, i, j)?;
        cols.push(partial_t(t, &x)?.values().to_vec());
    }
    Matrix::from_columns(m * n, &cols)
}

/// `δ¹_T` assembled from the expanded degree-1 cocycle display (bracket and θ
/// terms of the base pair, not of the induced pair), mapping raw degree-1
/// coordinates to the raw degree-3 tensor. Cross-checked in tests against the
/// generic builder on the induced pair.
pub fn delta1_expanded_matrix(t: &OOperator) -> Result<Matrix> {
    ensure_o_operator(t)?;
    let a = t.pair().algebra();
    let rep = t.pair().rep();
    let n = a.dim();
    let m = rep.module_dim();
    let cols = t.columns();
    let dom_dim = m * n;
    let triples = tuple_count(m, 3);
    let columns: Vec<Vec<Scalar>> = map_indexed(dom_dim, |b| {
        let f = Matrix::from_fn(n, m, |r, c| {
            if c == b / n && r == b % n {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let fcols: Vec<Vec<Scalar>> = (0..m).map(|u| f.column(u)).collect();
        let mut out = vec_zero(triples * n);
        for idx in 0..triples {
            let tu = decode_tuple(idx, m, 3);
            let (v1, v2, v3) = (tu[0], tu[1], tu[2]);
            // [Tv1,Tv2,f(v3)] + [Tv1,f(v2),Tv3] + [f(v1),Tv2,Tv3]
            let mut val = a
                .bracket(&cols[v1], &cols[v2], &fcols[v3])
                .expect("dims agree");
            val = vec_add(
                &val,
                &a.bracket(&cols[v1], &fcols[v2], &cols[v3]).expect("dims agree"),
            );
            val = vec_add(
                &val,
                &a.bracket(&fcols[v1], &cols[v2], &cols[v3]).expect("dims agree"),
            );
            // - T( -D(f(v2),Tv1)v3 + D(f(v1),Tv2)v3 + θ(Tv2,f(v3))v1
            //      + θ(f(v2),Tv3)v1 - θ(Tv1,f(v3))v2 - θ(f(v1),Tv3)v2 )
            let mut arg = vec_sub(
                &rep.d(&fcols[v1], &cols[v2]).expect("dims agree").column(v3),
                &rep.d(&fcols[v2], &cols[v1]).expect("dims agree").column(v3),
            );
            arg = vec_add(
                &arg,
                &rep.theta(&cols[v2], &fcols[v3]).expect("dims agree").column(v1),
            );
            arg = vec_add(
                &arg,
                &rep.theta(&fcols[v2], &cols[v3]).expect("dims agree").column(v1),
            );
            arg = vec_sub(
                &arg,
                &rep.theta(&cols[v1], &fcols[v3]).expect("dims agree").column(v2),
            );
            arg = vec_sub(
                &arg,
                &rep.theta(&fcols[v1], &cols[v3]).expect("dims agree").column(v2),
            );
            val = vec_sub(&val, &t.apply(&arg).expect("dims agree"));
            // - f( D(Tv1,Tv2)v3 + θ(Tv2,Tv3)v1 - θ(Tv1,Tv3)v2 )
            let mut farg = rep
                .d(&cols[v1], &cols[v2])
                .expect("dims agree")
                .column(v3);
            farg = vec_add(
                &farg,
                &rep.theta(&cols[v2], &cols[v3]).expect("dims agree").column(v1),
            );
            farg = vec_sub(
                &farg,
                &rep.theta(&cols[v1], &cols[v3]).expect("dims agree").column(v2),
            );
            val = vec_sub(&val, &f.mul_vec(&farg).expect("dims agree"));
            out[idx * n..(idx + 1) * n].clone_from_slice(&val);
        }
        out
    });
    Matrix::from_columns(triples * n, &columns)
}

/// `δ_T` at one degree: the generic Yamaguti coboundary instantiated at the
/// induced pair of `T`.
pub fn coboundary_for_operator(
    t: &OOperator,
    degree: usize,
) -> Result<super::CoboundaryMatrix> {
    let pair_t = induced_pair(t)?;
    coboundary_unchecked(&pair_t, degree)
}

/// Cohomology of the extended complex of `T`: at degree 1 the coboundaries
/// are `im ∂_T` (the degree-0 piece of the complex is the bivector space); at
/// higher odd degrees both spaces come from `δ_T`.
pub fn o_operator_cohomology(t: &OOperator, degree: usize) -> Result<CohomologyReport> {
    if degree.is_multiple_of(2) || degree == 0 {
        return Err(Error::EvenDegree(degree));
    }
    let pair_t = induced_pair(t)?;
    let outgoing = coboundary_unchecked(&pair_t, degree)?;
    let z = outgoing.matrix.kernel_basis();
    let b = if degree == 1 {
        partial_t_matrix(t)?.image_basis()
    } else {
        coboundary_unchecked(&pair_t, degree - 2)?.matrix.image_basis()
    };
    let dim_h = quotient_dim(&z, &b)?;
    Ok(CohomologyReport {
        degree,
        dim_cocycles: z.dim(),
        dim_coboundaries: b.dim(),
        dim_h,
    })
}

/// Degree-0 transfer: the wedge-square action of φ on bivector coordinates.
pub fn gamma0_matrix(phi: &Matrix) -> Result<Matrix> {
    if phi.rows() != phi.cols() {
        return Err(Error::DimensionMismatch("phi must be square".into()));
    }
    let n = phi.rows();
    let pairs = wedge_pairs(n);
    let mut out = Matrix::zeros(wedge_dim(n), wedge_dim(n));
    for (col, &(i, j)) in pairs.iter().enumerate() {
        for (row, &(k, l)) in pairs.iter().enumerate() {
            // coefficient of e_k ∧ e_l in φ(e_i) ∧ φ(e_j)
            let v = &(phi.at(k, i) * phi.at(l, j)) - &(phi.at(l, i) * phi.at(k, j));
            if !v.is_zero() {
                *out.at_mut(row, col) = v;
            }
        }
    }
    Ok(out)
}

fn ensure_gamma_preconditions(m: &OOperatorMorphism) -> Result<Matrix> {
    if m.source.pair() != m.target.pair() {
        return Err(Error::InvalidInput(
            "gamma requires both operators over the same pair".into(),
        ));
    }
    ensure_o_operator(&m.source)?;
    ensure_o_operator(&m.target)?;
    let Some(psi_inv) = m.psi.inverse() else {
        return Err(Error::PsiNotInvertible);
    };
    let rep = check_o_morphism(m)?;
    if !rep.passed() {
        return Err(Error::NotAMorphism(format!(
            "phi_morphism={}, c1={}, c2={}",
            rep.phi_morphism.passed, rep.c1.passed, rep.c2.passed
        )));
    }
    Ok(psi_inv)
}

/// Matrix of `γ(f) = φ ∘ f ∘ (ψ^{-1})^{⊗degree}` on constrained cochain
/// coordinates (identical spaces on both sides).
pub fn gamma_matrix(m: &OOperatorMorphism, degree: usize) -> Result<Matrix> {
    let psi_inv = ensure_gamma_preconditions(m)?;
    gamma_matrix_unchecked(m, &psi_inv, degree)
}

fn gamma_matrix_unchecked(
    m: &OOperatorMorphism,
    psi_inv: &Matrix,
    degree: usize,
) -> Result<Matrix> {
    if degree.is_multiple_of(2) || degree == 0 {
        return Err(Error::EvenDegree(degree));
    }
    let n = m.source.pair().algebra().dim();
    let mdim = m.source.pair().rep().module_dim();
    let space = cochain_space(mdim, n, degree)?;
    let psi_cols: Vec<Vec<Scalar>> = (0..mdim).map(|a| psi_inv.column(a)).collect();
    let cols: Result<Vec<Vec<Scalar>>> = map_indexed(space.dim(), |b| {
        let f = space.basis_cochain(b);
        let g = gamma_apply(&m.phi, &psi_cols, &f)?;
        space.project(&g)
    })
    .into_iter()
    .collect();
    Matrix::from_columns(space.dim(), &cols?)
}

/// `γ(f)` as a raw tensor.
fn gamma_apply(phi: &Matrix, psi_inv_cols: &[Vec<Scalar>], f: &Cochain) -> Result<Cochain> {
    let degree = f.degree();
    let mdim = f.source_dim();
    let n = f.target_dim();
    let tuples = tuple_count(mdim, degree);
    let mut values = vec_zero(tuples * n);
    let mut b_args = vec![0usize; degree];
    for idx in 0..tuples {
        let args = decode_tuple(idx, mdim, degree);
        // Σ over b-tuples of Π ψ^{-1}[b_i][a_i] f(b)
        let mut acc = vec_zero(n);
        let inner = tuple_count(mdim, degree);
        for bidx in 0..inner {
            let mut coeff = Scalar::one();
            let mut tmp = bidx;
            let mut zero = false;
            for slot in (0..degree).rev() {
                let bi = tmp % mdim;
                tmp /= mdim;
                b_args[slot] = bi;
                let c = &psi_inv_cols[args[slot]][bi];
                if c.is_zero() {
                    zero = true;
                    break;
                }
                coeff *= c;
            }
            if zero {
                continue;
            }
            vec_add_scaled(&mut acc, f.value_at(&b_args), &coeff);
        }
        let val = phi.mul_vec(&acc)?;
        values[idx * n..(idx + 1) * n].clone_from_slice(&val);
    }
    Cochain::from_values(degree, mdim, n, values)
}

/// γ at one degree together with its verified cochain-map squares.
#[derive(Debug, Clone)]
pub struct GammaMap {
    pub degree: usize,
    pub matrix: Matrix,
    /// `δ_{T'} ∘ γ_d = γ_{d+2} ∘ δ_T` at the requested degree.
    pub square_commutes: bool,
    /// `∂_{T'} ∘ γ_0 = γ_1 ∘ ∂_T`.
    pub degree0_square_commutes: bool,
}

/// Builds γ at `degree` and verifies the cochain-map identity there plus the
/// degree-0 square. Errors: `PsiNotInvertible`, `NotAMorphism`.
pub fn gamma_cochain_map(m: &OOperatorMorphism, degree: usize) -> Result<GammaMap> {
    let psi_inv = ensure_gamma_preconditions(m)?;
    let gamma_d = gamma_matrix_unchecked(m, &psi_inv, degree)?;
    let gamma_d2 = gamma_matrix_unchecked(m, &psi_inv, degree + 2)?;
    let pair_t = induced_pair(&m.source)?;
    let pair_t2 = induced_pair(&m.target)?;
    let delta_t = coboundary_unchecked(&pair_t, degree)?;
    let delta_t2 = coboundary_unchecked(&pair_t2, degree)?;
    let square_commutes =
        delta_t2.matrix.mul(&gamma_d)? == gamma_d2.mul(&delta_t.matrix)?;

    let gamma_1 = if degree == 1 {
        gamma_d.clone()
    } else {
        gamma_matrix_unchecked(m, &psi_inv, 1)?
    };
    let gamma_0 = gamma0_matrix(&m.phi)?;
    let partial_src = partial_t_matrix(&m.source)?;
    let partial_tgt = partial_t_matrix(&m.target)?;
    let degree0_square_commutes =
        partial_tgt.mul(&gamma_0)? == gamma_1.mul(&partial_src)?;

    Ok(GammaMap {
        degree,
        matrix: gamma_d,
        square_commutes,
        degree0_square_commutes,
    })
}
