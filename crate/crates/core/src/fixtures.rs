//! Built-in example structures used by tests, benches and the CLI registry.

use crate::exactla::{basis_vec, Matrix, Scalar};
use crate::lie_bridge::{LieRepPair, LieRepresentation};
use crate::lts::{LieStructure, LtsStructure};
use crate::operators::OOperator;
use crate::reps::LtsRepPair;

/// 2-dimensional triple system with `[e1,e2,e2] = e1`.
pub fn lts_dim2() -> LtsStructure {
    LtsStructure::from_assignments(2, &[(0, 1, 1, basis_vec(2, 0))]).expect("valid table")
}

/// 4-dimensional triple system with `[e1,e2,e1] = e4`.
pub fn lts_dim4() -> LtsStructure {
    LtsStructure::from_assignments(4, &[(0, 1, 0, basis_vec(4, 3))]).expect("valid table")
}

/// The 2-parameter family `[[0,a],[0,b]]` on the 2-dimensional system.
pub fn rb_dim2(a: Scalar, b: Scalar) -> Matrix {
    let mut m = Matrix::zeros(2, 2);
    *m.at_mut(0, 1) = a;
    *m.at_mut(1, 1) = b;
    m
}

/// The 9-parameter family on the 4-dimensional system, parameters in the
/// order `(a,b,c,d,e,f,g,h,k)`.
pub fn rb_dim4(p: &[Scalar; 9]) -> Matrix {
    let [a, b, c, d, e, f, g, h, k] = p.clone();
    let rows = vec![
        vec![Scalar::zero(), a, Scalar::zero(), Scalar::zero()],
        vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero()],
        vec![b, c, d, e],
        vec![f, g, h, k],
    ];
    Matrix::from_rows(rows).expect("fixed shape")
}

/// Adjoint pair of the 2-dimensional system.
pub fn pair_dim2() -> LtsRepPair {
    LtsRepPair::adjoint(lts_dim2()).expect("adjoint passes axioms")
}

/// Adjoint pair of the 4-dimensional system.
pub fn pair_dim4() -> LtsRepPair {
    LtsRepPair::adjoint(lts_dim4()).expect("adjoint passes axioms")
}

/// The verified operator `[[0,1],[0,2]]` on the adjoint pair of `lts_dim2`.
pub fn oper_dim2() -> OOperator {
    OOperator::new(pair_dim2(), rb_dim2(Scalar::one(), Scalar::from_int(2)))
        .expect("shape matches")
}

/// The 9-parameter operator at parameters all 1 on the adjoint pair of `lts_dim4`.
pub fn oper_dim4() -> OOperator {
    let one = Scalar::one();
    let p = [
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one,
    ];
    OOperator::new(pair_dim4(), rb_dim4(&p)).expect("shape matches")
}

/// 2-dimensional abelian Lie algebra.
pub fn lie_abelian2() -> LieStructure {
    LieStructure::zero(2)
}

/// Heisenberg algebra, basis `(x, y, z)` with `[x,y] = z`.
pub fn lie_heisenberg() -> LieStructure {
    LieStructure::from_assignments(3, &[(0, 1, basis_vec(3, 2))]).expect("valid table")
}

/// Split simple 3-dimensional algebra, basis `(h, e, f)` with
/// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn lie_sl2() -> LieStructure {
    let two_e = vec![Scalar::zero(), Scalar::from_int(2), Scalar::zero()];
    let minus_two_f = vec![Scalar::zero(), Scalar::zero(), Scalar::from_int(-2)];
    LieStructure::from_assignments(
        3,
        &[(0, 1, two_e), (0, 2, minus_two_f), (1, 2, basis_vec(3, 0))],
    )
    .expect("valid table")
}

/// Solvable 3-dimensional algebra with `[e3,e1] = e1`, `[e3,e2] = 2 e2`.
pub fn lie_solvable3() -> LieStructure {
    let two_e2 = vec![Scalar::zero(), Scalar::from_int(2), Scalar::zero()];
    LieStructure::from_assignments(3, &[(2, 0, basis_vec(3, 0)), (2, 1, two_e2)])
        .expect("valid table")
}

/// Adjoint representation of a Lie algebra as a pair.
pub fn lie_adjoint_pair(g: LieStructure) -> LieRepPair {
    LieRepPair::adjoint(g).expect("adjoint passes axioms")
}

/// A commuting diagonal action of the abelian algebra on ℚ².
pub fn lie_abelian2_nonadjoint() -> LieRepPair {
    let rho = vec![
        Matrix::from_ints(&[&[1, 0], &[0, 2]]),
        Matrix::from_ints(&[&[3, 0], &[0, 5]]),
    ];
    LieRepPair::new(LieRepresentation::new(lie_abelian2(), 2, rho).expect("shapes"))
        .expect("valid representation")
}

/// The standard 3-dimensional triangular action of the Heisenberg algebra.
pub fn lie_heisenberg_nonadjoint() -> LieRepPair {
    let rho = vec![
        Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
        Matrix::from_ints(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]),
        Matrix::from_ints(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]),
    ];
    LieRepPair::new(LieRepresentation::new(lie_heisenberg(), 3, rho).expect("shapes"))
        .expect("valid representation")
}

/// The natural 2-dimensional representation of `lie_sl2`.
pub fn lie_sl2_natural() -> LieRepPair {
    let rho = vec![
        Matrix::from_ints(&[&[1, 0], &[0, -1]]),
        Matrix::from_ints(&[&[0, 1], &[0, 0]]),
        Matrix::from_ints(&[&[0, 0], &[1, 0]]),
    ];
    LieRepPair::new(LieRepresentation::new(lie_sl2(), 2, rho).expect("shapes"))
        .expect("valid representation")
}

/// A 2-dimensional action of `lie_solvable3`.
pub fn lie_solvable3_nonadjoint() -> LieRepPair {
    let rho = vec![
        Matrix::from_ints(&[&[0, 1], &[0, 0]]),
        Matrix::zeros(2, 2),
        Matrix::from_ints(&[&[1, 0], &[0, 0]]),
    ];
    LieRepPair::new(LieRepresentation::new(lie_solvable3(), 2, rho).expect("shapes"))
        .expect("valid representation")
}

/// All shipped Lie algebras.
pub fn lie_algebras() -> Vec<(&'static str, LieStructure)> {
    vec![
        ("abelian2", lie_abelian2()),
        ("heisenberg", lie_heisenberg()),
        ("sl2", lie_sl2()),
        ("solvable3", lie_solvable3()),
    ]
}

/// All shipped Lie pairs: the adjoint pair of each algebra plus one
/// non-adjoint representation each.
pub fn lie_pairs() -> Vec<(String, LieRepPair)> {
    let mut out = Vec::new();
    for (name, g) in lie_algebras() {
        out.push((format!("{name}/adjoint"), lie_adjoint_pair(g)));
    }
    out.push(("abelian2/diagonal".into(), lie_abelian2_nonadjoint()));
    out.push(("heisenberg/triangular".into(), lie_heisenberg_nonadjoint()));
    out.push(("sl2/natural".into(), lie_sl2_natural()));
    out.push(("solvable3/plane".into(), lie_solvable3_nonadjoint()));
    out
}

/// A verified operator on the adjoint Heisenberg pair: image in the center.
pub fn lie_operator_heisenberg() -> Matrix {
    Matrix::from_ints(&[&[0, 0, 0], &[0, 0, 0], &[1, 2, 0]])
}

/// A verified rank-2 operator on the natural representation of `lie_sl2`:
/// `u1 ↦ e`, `u2 ↦ -h`.
pub fn lie_operator_sl2_natural() -> Matrix {
    Matrix::from_ints(&[&[0, -1], &[1, 0], &[0, 0]])
}

/// A verified operator on the plane representation of `lie_solvable3`:
/// `u1 ↦ 0`, `u2 ↦ e1`.
pub fn lie_operator_solvable3_plane() -> Matrix {
    Matrix::from_ints(&[&[0, 1], &[0, 0], &[0, 0]])
}

/// Every shipped `(pair, operator)` fixture that passes the Lie O-operator
/// identity, including zero operators on all pairs.
pub fn lie_operator_fixtures() -> Vec<(String, LieRepPair, Matrix)> {
    let mut out = vec![
        (
            "heisenberg/adjoint+center".to_string(),
            lie_adjoint_pair(lie_heisenberg()),
            lie_operator_heisenberg(),
        ),
        (
            "sl2/natural+rank2".to_string(),
            lie_sl2_natural(),
            lie_operator_sl2_natural(),
        ),
        (
            "solvable3/plane+rank1".to_string(),
            lie_solvable3_nonadjoint(),
            lie_operator_solvable3_plane(),
        ),
    ];
    for (name, pair) in lie_pairs() {
        let n = pair.algebra().dim();
        let m = pair.rep().module_dim();
        out.push((format!("{name}+zero"), pair, Matrix::zeros(n, m)));
    }
    out
}

/// LtsRep fixtures used by complex-level acceptance checks: adjoint pairs of
/// both bracket-table fixtures, the adjoint pair of a semidirect product, and
/// a pair transferred from a Lie algebra.
pub fn complex_fixture_names() -> Vec<&'static str> {
    vec!["dim2/adjoint", "dim4/adjoint", "semidirect", "from-lie/heisenberg"]
}
