//! Infinitesimal and truncated formal deformations of O-operators,
//! equivalences, Nijenhuis elements and rigidity certificates.

use crate::cohomology::{coboundary_for_operator, partial_t, partial_t_matrix};
use crate::exactla::{
    vec_add, vec_is_zero, vec_sub, vec_zero, Matrix, Scalar, Subspace,
};
use crate::exec::{decode_tuple, find_map_first, tuple_count};
use crate::lts::{adjoint_action, adjoint_action_matrix, Bivector};
use crate::operators::{check_o_operator, OOperator};
use crate::report::{CheckReport, Witness};
use crate::{Error, Result};

/// A truncated polynomial family `T_t = T + T_1 t + ... + T_N t^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationSeries {
    base: OOperator,
    coefficients: Vec<Matrix>,
}

impl DeformationSeries {
    pub fn new(base: OOperator, coefficients: Vec<Matrix>) -> Result<Self> {
        let shape = (base.matrix().rows(), base.matrix().cols());
        for c in &coefficients {
            if (c.rows(), c.cols()) != shape {
                return Err(Error::DimensionMismatch(format!(
                    "coefficient {}x{} for base {}x{}",
                    c.rows(),
                    c.cols(),
                    shape.0,
                    shape.1
                )));
            }
        }
        Ok(DeformationSeries { base, coefficients })
    }

    pub fn constant(base: OOperator) -> Self {
        DeformationSeries {
            base,
            coefficients: Vec::new(),
        }
    }

    pub fn base(&self) -> &OOperator {
        &self.base
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Matrix] {
        &self.coefficients
    }

    /// `T_i` as a matrix, zero beyond the truncation order.
    pub fn term(&self, i: usize) -> Matrix {
        if i == 0 {
            self.base.matrix().clone()
        } else if i <= self.coefficients.len() {
            self.coefficients[i - 1].clone()
        } else {
            Matrix::zeros(self.base.matrix().rows(), self.base.matrix().cols())
        }
    }
}

/// LHS - RHS of the order-`s` equation of the formal system, evaluated at a
/// basis triple `(u,v,w)` of `V` for explicit term matrices `T_0..T_k`.
fn order_residual(
    t: &OOperator,
    terms: &[Matrix],
    s: usize,
    u: usize,
    v: usize,
    w: usize,
) -> Vec<Scalar> {
    let a = t.pair().algebra();
    let rep = t.pair().rep();
    let n = a.dim();
    let mut lhs = vec_zero(n);
    let mut rhs = vec_zero(n);
    for i in 0..=s.min(terms.len() - 1) {
        for j in 0..=(s - i).min(terms.len() - 1) {
            let k = s - i - j;
            if k >= terms.len() {
                continue;
            }
            let tiu = terms[i].column(u);
            let tjv = terms[j].column(v);
            let tkw = terms[k].column(w);
            lhs = vec_add(&lhs, &a.bracket(&tiu, &tjv, &tkw).expect("dims agree"));
            // T_i(D(T_j u, T_k v)w + θ(T_j v, T_k w)u - θ(T_j u, T_k w)v)
            let tju = terms[j].column(u);
            let tkv = terms[k].column(v);
            let mut arg = rep.d(&tju, &tkv).expect("dims agree").column(w);
            arg = vec_add(&arg, &rep.theta(&tjv, &tkw).expect("dims agree").column(u));
            arg = vec_sub(
                &arg,
                &rep.theta(&tju, &tkw).expect("dims agree").column(v),
            );
            rhs = vec_add(&rhs, &terms[i].mul_vec(&arg).expect("dims agree"));
        }
    }
    vec_sub(&lhs, &rhs)
}

fn scan_order(t: &OOperator, terms: &[Matrix], s: usize, name: &str) -> CheckReport {
    let m = t.pair().rep().module_dim();
    let triples = tuple_count(m, 3);
    let witness = find_map_first(triples, |idx| {
        let tu = decode_tuple(idx, m, 3);
        let r = order_residual(t, terms, s, tu[0], tu[1], tu[2]);
        if vec_is_zero(&r) {
            None
        } else {
            Some(Witness::new(tu, r.clone(), vec_zero(r.len())))
        }
    });
    CheckReport::from_witness(name, triples, witness)
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct InfinitesimalReport {
    pub order1: CheckReport,
    pub order2: CheckReport,
    pub order3: CheckReport,
}

impl InfinitesimalReport {
    /// `T + t T_1` is an O-operator for every `t` exactly when all three
    /// orders hold (the identity is cubic in the operator).
    pub fn passed(&self) -> bool {
        self.order1.passed && self.order2.passed && self.order3.passed
    }
}

/// The three coefficient equations of `T + t T_1`.
pub fn check_infinitesimal(t: &OOperator, t1: &Matrix) -> Result<InfinitesimalReport> {
    let shape = (t.matrix().rows(), t.matrix().cols());
    if (t1.rows(), t1.cols()) != shape {
        return Err(Error::DimensionMismatch(format!(
            "T1 is {}x{}, base is {}x{}",
            t1.rows(),
            t1.cols(),
            shape.0,
            shape.1
        )));
    }
    let terms = vec![t.matrix().clone(), t1.clone()];
    Ok(InfinitesimalReport {
        order1: scan_order(t, &terms, 1, "infinitesimal_order1"),
        order2: scan_order(t, &terms, 2, "infinitesimal_order2"),
        order3: scan_order(t, &terms, 3, "infinitesimal_order3"),
    })
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct FormalReport {
    pub orders: Vec<CheckReport>,
}

impl FormalReport {
    pub fn passed(&self) -> bool {
        self.orders.iter().all(|o| o.passed)
    }

    pub fn first_failing_order(&self) -> Option<usize> {
        self.orders.iter().position(|o| !o.passed)
    }
}

/// The order-`s` equations for `s = 0..=N`.
pub fn check_formal(d: &DeformationSeries) -> FormalReport {
    let terms: Vec<Matrix> = (0..=d.order()).map(|i| d.term(i)).collect();
    let orders = (0..=d.order())
        .map(|s| scan_order(&d.base, &terms, s, &format!("formal_order{s}")))
        .collect();
    FormalReport { orders }
}

/// The constant defect of the order-`s` equation with `T_s` treated as the
/// unknown: the residual evaluated with `T_s = 0` and `T_0..T_{s-1}` from the
/// series. Returned as the raw trilinear tensor `(u,v,w) ↦ defect ∈ L`, laid
/// out like a degree-3 cochain from `V` to `L`. Solving `δ¹_T(T_s) = -defect`
/// recovers the admissible next coefficients.
pub fn obstruction(d: &DeformationSeries, s: usize) -> crate::cohomology::Cochain {
    let mut terms: Vec<Matrix> = (0..=s).map(|i| d.term(i)).collect();
    if s >= 1 {
        let shape = (d.base.matrix().rows(), d.base.matrix().cols());
        terms[s] = Matrix::zeros(shape.0, shape.1);
    }
    let m = d.base.pair().rep().module_dim();
    let n = d.base.pair().algebra().dim();
    let triples = tuple_count(m, 3);
    let mut values = vec_zero(triples * n);
    for idx in 0..triples {
        let tu = decode_tuple(idx, m, 3);
        let r = order_residual(&d.base, &terms, s, tu[0], tu[1], tu[2]);
        values[idx * n..(idx + 1) * n].clone_from_slice(&r);
    }
    crate::cohomology::Cochain::from_values(3, m, n, values).expect("consistent shape")
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct EquivalenceReport {
    /// Order-t² coefficient of the φ_t morphism condition.
    pub condition1_quadratic: CheckReport,
    /// Order-t³ coefficient of the φ_t morphism condition.
    pub condition1_cubic: CheckReport,
    /// Order-t² coefficient of the ψ/θ compatibility.
    pub condition2_quadratic: CheckReport,
    /// Order-t³ coefficient of the ψ/θ compatibility.
    pub condition2_cubic: CheckReport,
    /// `T_1(u) + [X, Tu] = T D(X) u + T'_1(u)`.
    pub intertwine_linear: CheckReport,
    /// `[X, T_1(u)] = T'_1 D(X)(u)`.
    pub intertwine_quadratic: CheckReport,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.condition1_quadratic.passed
            && self.condition1_cubic.passed
            && self.condition2_quadratic.passed
            && self.condition2_cubic.passed
            && self.intertwine_linear.passed
            && self.intertwine_quadratic.passed
    }
}

/// Scans the pair-of-lines conditions on `X` plus both intertwining equations
/// tying `T_1`, `T'_1` and `X`. Both series must be order-1 deformations of
/// the same base `t`.
///
/// Only the quadratic and cubic coefficients are scanned: the constant and
/// linear coefficients of the morphism conditions hold automatically, since
/// `[X,-]` is an inner derivation and `D(X)` intertwines θ by the
/// representation identity.
pub fn check_equivalence(
    t: &OOperator,
    d1: &DeformationSeries,
    d2: &DeformationSeries,
    x: &Bivector,
) -> Result<EquivalenceReport> {
    if d1.base != *t || d2.base != *t {
        return Err(Error::BaseMismatch);
    }
    let (c1q, c1c) = condition1_reports(t, x)?;
    let (c2q, c2c) = condition2_reports(t, x)?;

    let a = t.pair().algebra();
    let rep = t.pair().rep();
    let m = rep.module_dim();
    let t1 = d1.term(1);
    let t1p = d2.term(1);
    let d_x = rep.d_of_bivector(x)?;

    let lin = find_map_first(m, |u| {
        let t1u = t1.column(u);
        let mut lhs = t1u.clone();
        lhs = vec_add(&lhs, &adjoint_action(a, x, &t.column(u)).expect("dims agree"));
        let mut rhs = t.apply(&d_x.column(u)).expect("dims agree");
        rhs = vec_add(&rhs, &t1p.column(u));
        if lhs != rhs {
            Some(Witness::new(vec![u], lhs, rhs))
        } else {
            None
        }
    });
    let quad = find_map_first(m, |u| {
        let lhs = adjoint_action(a, x, &t1.column(u)).expect("dims agree");
        let rhs = t1p.mul_vec(&d_x.column(u)).expect("dims agree");
        if lhs != rhs {
            Some(Witness::new(vec![u], lhs, rhs))
        } else {
            None
        }
    });

    Ok(EquivalenceReport {
        condition1_quadratic: c1q,
        condition1_cubic: c1c,
        condition2_quadratic: c2q,
        condition2_cubic: c2c,
        intertwine_linear: CheckReport::from_witness("intertwine_linear", m, lin),
        intertwine_quadratic: CheckReport::from_witness("intertwine_quadratic", m, quad),
    })
}

fn condition1_reports(t: &OOperator, x: &Bivector) -> Result<(CheckReport, CheckReport)> {
    let a = t.pair().algebra();
    let n = a.dim();
    let ad = adjoint_action_matrix(a, x)?;
    let adcols: Vec<Vec<Scalar>> = (0..n).map(|i| ad.column(i)).collect();
    let triples = tuple_count(n, 3);
    let quad = find_map_first(triples, |idx| {
        let tu = decode_tuple(idx, n, 3);
        let (z1, z2, z3) = (tu[0], tu[1], tu[2]);
        let e1 = crate::exactla::basis_vec(n, z1);
        let e2 = crate::exactla::basis_vec(n, z2);
        let e3 = crate::exactla::basis_vec(n, z3);
        let mut sum = a.bracket(&e1, &adcols[z2], &adcols[z3]).expect("dims agree");
        sum = vec_add(
            &sum,
            &a.bracket(&adcols[z1], &e2, &adcols[z3]).expect("dims agree"),
        );
        sum = vec_add(
            &sum,
            &a.bracket(&adcols[z1], &adcols[z2], &e3).expect("dims agree"),
        );
        if vec_is_zero(&sum) {
            None
        } else {
            Some(Witness::new(tu, sum.clone(), vec_zero(sum.len())))
        }
    });
    let cubic = find_map_first(triples, |idx| {
        let tu = decode_tuple(idx, n, 3);
        let (z1, z2, z3) = (tu[0], tu[1], tu[2]);
        let sum = a
            .bracket(&adcols[z1], &adcols[z2], &adcols[z3])
            .expect("dims agree");
        if vec_is_zero(&sum) {
            None
        } else {
            Some(Witness::new(tu, sum.clone(), vec_zero(sum.len())))
        }
    });
    Ok((
        CheckReport::from_witness("condition1_quadratic", triples, quad),
        CheckReport::from_witness("condition1_cubic", triples, cubic),
    ))
}

fn condition2_reports(t: &OOperator, x: &Bivector) -> Result<(CheckReport, CheckReport)> {
    let a = t.pair().algebra();
    let rep = t.pair().rep();
    let n = a.dim();
    let ad = adjoint_action_matrix(a, x)?;
    let adcols: Vec<Vec<Scalar>> = (0..n).map(|i| ad.column(i)).collect();
    let d_x = rep.d_of_bivector(x)?;
    let pairs = tuple_count(n, 2);
    let quad = find_map_first(pairs, |idx| {
        let tu = decode_tuple(idx, n, 2);
        let (z1, z2) = (tu[0], tu[1]);
        let e1 = crate::exactla::basis_vec(n, z1);
        let e2 = crate::exactla::basis_vec(n, z2);
        let mut sum = rep
            .theta(&e1, &adcols[z2])
            .expect("dims agree")
            .mul(&d_x)
            .expect("dims agree");
        sum = sum
            .add(
                &rep.theta(&adcols[z1], &e2)
                    .expect("dims agree")
                    .mul(&d_x)
                    .expect("dims agree"),
            )
            .expect("dims agree");
        sum = sum
            .add(&rep.theta(&adcols[z1], &adcols[z2]).expect("dims agree"))
            .expect("dims agree");
        if sum.is_zero() {
            None
        } else {
            Some(Witness::new(
                tu,
                sum.entries().to_vec(),
                vec_zero(sum.entries().len()),
            ))
        }
    });
    let cubic = find_map_first(pairs, |idx| {
        let tu = decode_tuple(idx, n, 2);
        let (z1, z2) = (tu[0], tu[1]);
        let sum = rep
            .theta(&adcols[z1], &adcols[z2])
            .expect("dims agree")
            .mul(&d_x)
            .expect("dims agree");
        if sum.is_zero() {
            None
        } else {
            Some(Witness::new(
                tu,
                sum.entries().to_vec(),
                vec_zero(sum.entries().len()),
            ))
        }
    });
    Ok((
        CheckReport::from_witness("condition2_quadratic", pairs, quad),
        CheckReport::from_witness("condition2_cubic", pairs, cubic),
    ))
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct NijenhuisElementReport {
    pub condition1: CheckReport,
    pub condition2: CheckReport,
    pub condition3: CheckReport,
}

impl NijenhuisElementReport {
    pub fn member(&self) -> bool {
        self.condition1.passed && self.condition2.passed && self.condition3.passed
    }
}

/// Membership of `X` in the set of Nijenhuis elements of `T`: the two
/// morphism-coefficient families plus `[X, T D(X) u - [X, Tu]] = 0`.
pub fn check_nijenhuis_element(t: &OOperator, x: &Bivector) -> Result<NijenhuisElementReport> {
    let (c1q, c1c) = condition1_reports(t, x)?;
    let (c2q, c2c) = condition2_reports(t, x)?;
    let condition1 = merge_reports("condition1", c1q, c1c);
    let condition2 = merge_reports("condition2", c2q, c2c);

    let a = t.pair().algebra();
    let rep = t.pair().rep();
    let m = rep.module_dim();
    let d_x = rep.d_of_bivector(x)?;
    let w3 = find_map_first(m, |u| {
        let mut inner = t.apply(&d_x.column(u)).expect("dims agree");
        inner = vec_sub(&inner, &adjoint_action(a, x, &t.column(u)).expect("dims agree"));
        let val = adjoint_action(a, x, &inner).expect("dims agree");
        if vec_is_zero(&val) {
            None
        } else {
            Some(Witness::new(vec![u], val.clone(), vec_zero(val.len())))
        }
    });
    Ok(NijenhuisElementReport {
        condition1,
        condition2,
        condition3: CheckReport::from_witness("condition3", m, w3),
    })
}

fn merge_reports(name: &str, a: CheckReport, b: CheckReport) -> CheckReport {
    let checked = a.checked + b.checked;
    if a.passed && b.passed {
        CheckReport::pass(name, checked)
    } else if !a.passed {
        CheckReport::fail(name, checked, a.witness.expect("failing report has witness"))
    } else {
        CheckReport::fail(name, checked, b.witness.expect("failing report has witness"))
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct RigidityReport {
    pub candidates_total: usize,
    pub nijenhuis_members: usize,
    pub dim_z1: usize,
    pub dim_span: usize,
    /// True when `span{d_T(X)} = Z¹_T`: the sufficient condition for rigidity
    /// is met over the supplied candidates. A false verdict certifies nothing.
    pub certified: bool,
    pub codimension: usize,
}

/// One-sided rigidity certificate over a finite candidate family: filters the
/// candidates through Nijenhuis-element membership, spans their `d_T` images
/// and compares against the full cocycle space.
pub fn rigidity_certificate(t: &OOperator, candidates: &[Bivector]) -> Result<RigidityReport> {
    let rep = check_o_operator(t)?;
    if !rep.passed {
        return Err(Error::NotAnOOperator(format!("witness: {:?}", rep.witness)));
    }
    let n = t.pair().algebra().dim();
    let m = t.pair().rep().module_dim();
    let mut members = 0usize;
    let mut span_vectors: Vec<Vec<Scalar>> = Vec::new();
    for x in candidates {
        if check_nijenhuis_element(t, x)?.member() {
            members += 1;
            span_vectors.push(partial_t(t, x)?.values().to_vec());
        }
    }
    let span = Subspace::from_spanning(m * n, &span_vectors)?;
    let delta1 = coboundary_for_operator(t, 1)?;
    let z1 = delta1.matrix.kernel_basis();
    if !z1.contains_space(&span)? {
        return Err(Error::NotAnOOperator(
            "a Nijenhuis-element image is not a 1-cocycle; operator data inconsistent".into(),
        ));
    }
    let codimension = z1.dim() - span.dim();
    Ok(RigidityReport {
        candidates_total: candidates.len(),
        nijenhuis_members: members,
        dim_z1: z1.dim(),
        dim_span: span.dim(),
        certified: codimension == 0,
        codimension,
    })
}

/// Higher-order pieces of an equivalence pair `(φ_t, ψ_t)`; the linear parts
/// are always `[X,-]` and `D(X)`.
#[derive(Debug, Clone)]
pub struct EquivalencePair {
    pub bivector: Bivector,
    pub higher_phi: Vec<Matrix>,
    pub higher_psi: Vec<Matrix>,
}

/// Truncated product of matrix power series.
fn series_mul(a: &[Matrix], b: &[Matrix], order: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(order + 1);
    for s in 0..=order {
        let mut acc: Option<Matrix> = None;
        for i in 0..=s {
            let j = s - i;
            if i >= a.len() || j >= b.len() {
                continue;
            }
            let prod = a[i].mul(&b[j]).expect("series shapes agree");
            acc = Some(match acc {
                None => prod,
                Some(p) => p.add(&prod).expect("series shapes agree"),
            });
        }
        out.push(acc.expect("series include order 0"));
    }
    out
}

/// Truncated inverse of a matrix power series by the Neumann recursion; the
/// constant term must be invertible.
pub fn series_inverse(a: &[Matrix], order: usize) -> Result<Vec<Matrix>> {
    let Some(inv0) = a[0].inverse() else {
        return Err(Error::NotInvertibleSeries);
    };
    let mut inv = vec![inv0.clone()];
    for s in 1..=order {
        let mut acc: Option<Matrix> = None;
        for i in 1..=s.min(a.len() - 1) {
            let prod = a[i].mul(&inv[s - i]).expect("series shapes agree");
            acc = Some(match acc {
                None => prod,
                Some(p) => p.add(&prod).expect("series shapes agree"),
            });
        }
        let corr = match acc {
            None => Matrix::zeros(a[0].rows(), a[0].cols()),
            Some(p) => p,
        };
        inv.push(inv0.mul(&corr).expect("series shapes agree").neg());
    }
    Ok(inv)
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct TrivialityReport {
    /// Per-order verdicts for `φ_t ∘ T_t ∘ ψ_t^{-1} = T` up to the truncation
    /// order (entry `s` covers the coefficient of `t^s`).
    pub order_residual_zero: Vec<bool>,
    /// When `T_1 = d_T(X)` exactly, the conjugated first-order coefficient
    /// must cancel; `None` when `T_1` differs from `d_T(X)`.
    pub first_order_cancellation: Option<bool>,
}

impl TrivialityReport {
    pub fn trivial(&self) -> bool {
        self.order_residual_zero.iter().all(|&b| b)
    }
}

/// Conjugates the series by the truncated `(φ_t, ψ_t)` and compares with the
/// constant series `T`.
pub fn check_trivial_deformation(
    t: &OOperator,
    d: &DeformationSeries,
    e: &EquivalencePair,
) -> Result<TrivialityReport> {
    if d.base != *t {
        return Err(Error::BaseMismatch);
    }
    let a = t.pair().algebra();
    let rep = t.pair().rep();
    let n = a.dim();
    let m = rep.module_dim();
    for p in &e.higher_phi {
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch("phi coefficient shape".into()));
        }
    }
    for p in &e.higher_psi {
        if p.rows() != m || p.cols() != m {
            return Err(Error::DimensionMismatch("psi coefficient shape".into()));
        }
    }
    let order = d.order();

    let mut phi_series = vec![Matrix::identity(n), adjoint_action_matrix(a, &e.bivector)?];
    phi_series.extend(e.higher_phi.iter().cloned());
    phi_series.truncate(order + 1);
    let mut psi_series = vec![Matrix::identity(m), rep.d_of_bivector(&e.bivector)?];
    psi_series.extend(e.higher_psi.iter().cloned());
    psi_series.truncate(order + 1);

    let t_series: Vec<Matrix> = (0..=order).map(|i| d.term(i)).collect();
    let psi_inv = series_inverse(&psi_series, order)?;
    let conj = series_mul(&series_mul(&phi_series, &t_series, order), &psi_inv, order);

    let mut order_residual_zero = Vec::with_capacity(order + 1);
    for (s, c) in conj.iter().enumerate() {
        if s == 0 {
            order_residual_zero.push(c == t.matrix());
        } else {
            order_residual_zero.push(c.is_zero());
        }
    }

    let first_order_cancellation = if order >= 1 {
        let d_t_x = partial_t(t, &e.bivector)?.to_linear_map()?;
        if d.term(1) == d_t_x {
            // T_1 - T D(X) + [X, T(·)] must vanish identically.
            let residual = d
                .term(1)
                .sub(&t.matrix().mul(&rep.d_of_bivector(&e.bivector)?)?)?
                .add(&adjoint_action_matrix(a, &e.bivector)?.mul(t.matrix())?)?;
            Some(residual.is_zero() && conj[1].is_zero())
        } else {
            None
        }
    } else {
        None
    };

    Ok(TrivialityReport {
        order_residual_zero,
        first_order_cancellation,
    })
}

/// Matrix of `δ¹_T` on raw degree-1 coordinates; used to test cocycle
/// membership of infinitesimal generators. Re-exported here for callers that
/// work purely in deformation terms.
pub fn delta1_matrix(t: &OOperator) -> Result<Matrix> {
    Ok(coboundary_for_operator(t, 1)?.matrix)
}

/// Image of `∂_T` as a subspace of `Hom(V, L)` coordinates.
pub fn partial_t_image(t: &OOperator) -> Result<Subspace> {
    Ok(partial_t_matrix(t)?.image_basis())
}
