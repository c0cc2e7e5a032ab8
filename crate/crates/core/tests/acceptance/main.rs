//! Acceptance suite: every criterion runs at its stated tolerance (exact
//! equality throughout) and prints one pass/fail line. The `determinism`
//! test reruns the whole battery and compares the emitted JSON byte for byte.

mod oracle;
mod support;

use std::time::Instant;

use serde_json::{json, Value};
use support::SplitMix64;

use triplekit::cohomology::{
    coboundary_for_operator, delta1_expanded_matrix, delta_raw, delta_squared_is_zero,
    induced_bracket, induced_pair, induced_rep, o_operator_cohomology, partial_t,
    partial_t_matrix, yamaguti_coboundary, yamaguti_cohomology, Cochain,
};
use triplekit::deformations::{
    check_equivalence, check_infinitesimal, check_nijenhuis_element, check_trivial_deformation,
    DeformationSeries, EquivalencePair,
};
use triplekit::exactla::{vec_is_zero, Matrix, Scalar};
use triplekit::fixtures;
use triplekit::lie_bridge::{
    associated_lemma_holds, ce_coboundary, lts_rep_from_lie, transfer_1cocycle, transfer_2cocycle,
    transfer_o_operator, LieCochain,
};
use triplekit::lts::{adjoint_action_matrix, check_lts_axioms, Bivector};
use triplekit::operators::{check_o_operator, check_rota_baxter, four_way_verdicts, OOperator};
use triplekit::reps::{check_rep_axioms, semidirect_structure, LtsRepPair};

/// Golden cohomology dimensions `(dim Z, dim B, dim H)` frozen from the
/// committed oracle; re-derived by the oracle on every run and matched against
/// the implementation.
const GOLDEN_DIM2_YAM_H1: (usize, usize, usize) = (2, 0, 2);
const GOLDEN_DIM2_YAM_H3: (usize, usize, usize) = (3, 2, 1);
const GOLDEN_DIM2_OP_H1: (usize, usize, usize) = (3, 1, 2);
const GOLDEN_DIM2_OP_H3: (usize, usize, usize) = (3, 1, 2);
const GOLDEN_DIM4_OP_H1: (usize, usize, usize) = (10, 1, 9);
const GOLDEN_DIM4_OP_H3: (usize, usize, usize) = (46, 6, 40);

fn report_line(n: usize, name: &str, passed: bool) {
    println!(
        "criterion {n} ({name}): {}",
        if passed { "PASS" } else { "FAIL" }
    );
}

fn criterion1() -> (bool, Value) {
    let start = Instant::now();
    let a = fixtures::lts_dim2();
    let axioms = check_lts_axioms(&a).passed();
    let mut passes = 0usize;
    for p in -2i64..=2 {
        for q in -2i64..=2 {
            let r = fixtures::rb_dim2(Scalar::from_int(p), Scalar::from_int(q));
            if check_rota_baxter(&a, &r).expect("shape ok").passed {
                passes += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = axioms && passes == 25 && elapsed.as_secs_f64() < 1.0;
    (
        ok,
        json!({
            "axioms": axioms,
            "grid_passes": passes,
            "grid_total": 25,
            "within_time_budget": elapsed.as_secs_f64() < 1.0,
        }),
    )
}

fn criterion2() -> (bool, Value) {
    let start = Instant::now();
    let a = fixtures::lts_dim4();
    let axioms = check_lts_axioms(&a).passed();
    let mut rng = SplitMix64::new(0x5eed_0002);
    let mut passes = 0usize;
    for _ in 0..25 {
        let params: [Scalar; 9] = std::array::from_fn(|_| rng.small_rational());
        if check_rota_baxter(&a, &fixtures::rb_dim4(&params))
            .expect("shape ok")
            .passed
        {
            passes += 1;
        }
    }
    let elapsed = start.elapsed();
    let ok = axioms && passes == 25 && elapsed.as_secs_f64() < 2.0;
    (
        ok,
        json!({
            "axioms": axioms,
            "random_passes": passes,
            "random_total": 25,
            "within_time_budget": elapsed.as_secs_f64() < 2.0,
        }),
    )
}

fn complex_fixtures() -> Vec<(String, LtsRepPair)> {
    vec![
        ("dim2/adjoint".into(), fixtures::pair_dim2()),
        ("dim4/adjoint".into(), fixtures::pair_dim4()),
        (
            "semidirect(dim2)/adjoint".into(),
            LtsRepPair::adjoint(semidirect_structure(&fixtures::pair_dim2()))
                .expect("semidirect passes axioms"),
        ),
        (
            "from-lie/heisenberg".into(),
            lts_rep_from_lie(&fixtures::lie_adjoint_pair(fixtures::lie_heisenberg()))
                .expect("transfer is valid"),
        ),
    ]
}

fn criterion3() -> (bool, Value) {
    let mut fixture_results = Vec::new();
    let mut all = true;
    for (name, pair) in complex_fixtures() {
        // The (1,3) composition as an honest product of constrained matrices;
        // the (3,5) composition functionally (pointwise over all basis
        // tuples), since degree-7 spaces are too large to hold densely.
        let d1 = yamaguti_coboundary(&pair, 1).expect("valid pair");
        let d3 = yamaguti_coboundary(&pair, 3).expect("valid pair");
        let d31_product = d3.matrix.mul(&d1.matrix).expect("degrees chain").is_zero();
        let d31 = delta_squared_is_zero(&pair, 1).expect("valid pair");
        let d53 = delta_squared_is_zero(&pair, 3).expect("valid pair");
        all &= d31_product && d31 && d53;
        fixture_results.push(json!({
            "fixture": name,
            "delta3_after_delta1_matrix_product_zero": d31_product,
            "delta3_after_delta1_zero": d31,
            "delta5_after_delta3_zero": d53,
        }));
    }
    let mut lie_results = Vec::new();
    for (name, pair) in fixtures::lie_pairs() {
        let mut square_zero = true;
        for p in 0..=2usize {
            let d_p = ce_coboundary(&pair, p).expect("valid pair");
            let d_p1 = ce_coboundary(&pair, p + 1).expect("valid pair");
            square_zero &= d_p1.mul(&d_p).expect("shapes chain").is_zero();
        }
        all &= square_zero;
        lie_results.push(json!({"fixture": name, "ce_square_zero": square_zero}));
    }
    (
        all,
        json!({"lts_fixtures": fixture_results, "lie_fixtures": lie_results}),
    )
}

fn criterion4() -> (bool, Value) {
    let mut rng = SplitMix64::new(0x5eed_0004);
    let pair2 = fixtures::pair_dim2();
    let pair4 = fixtures::pair_dim4();
    // A rectangular pair (algebra dim 3, module dim 2) from the Lie bridge.
    let sl2_op = transfer_o_operator(
        &fixtures::lie_sl2_natural(),
        &fixtures::lie_operator_sl2_natural(),
    )
    .expect("valid transfer");
    let pair_rect = sl2_op.pair().clone();
    let mut candidates: Vec<(LtsRepPair, Matrix)> = Vec::with_capacity(200);
    for _ in 0..50 {
        let (a, b) = (rng.small_rational(), rng.small_rational());
        candidates.push((pair2.clone(), fixtures::rb_dim2(a, b)));
    }
    for _ in 0..50 {
        candidates.push((pair2.clone(), rng.int_matrix(2, 2, 2)));
    }
    for _ in 0..30 {
        let params: [Scalar; 9] = std::array::from_fn(|_| rng.small_rational());
        candidates.push((pair4.clone(), fixtures::rb_dim4(&params)));
    }
    for _ in 0..30 {
        candidates.push((pair4.clone(), rng.int_matrix(4, 4, 1)));
    }
    for _ in 0..20 {
        // Scalings of a valid operator stay valid (the identity is cubic).
        let lambda = rng.small_rational();
        candidates.push((pair_rect.clone(), sl2_op.matrix().scale(&lambda)));
    }
    for _ in 0..20 {
        candidates.push((pair_rect.clone(), rng.int_matrix(3, 2, 2)));
    }
    let mut agree = 0usize;
    let mut valid = 0usize;
    let mut invalid = 0usize;
    for (pair, mat) in &candidates {
        let v = four_way_verdicts(pair, mat).expect("shape ok");
        if v.iter().all(|&b| b == v[0]) {
            agree += 1;
        }
        if v[0] {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    let ok = agree == 200 && valid >= 50 && invalid >= 50;
    (
        ok,
        json!({
            "candidates": 200,
            "agreements": agree,
            "valid": valid,
            "invalid": invalid,
        }),
    )
}

fn o_operator_fixtures() -> Vec<(String, OOperator)> {
    let mut out = vec![
        ("paper/dim2".to_string(), fixtures::oper_dim2()),
        ("paper/dim4".to_string(), fixtures::oper_dim4()),
        (
            "zero/dim2".to_string(),
            OOperator::new(fixtures::pair_dim2(), Matrix::zeros(2, 2)).expect("shape ok"),
        ),
        (
            "zero/dim4".to_string(),
            OOperator::new(fixtures::pair_dim4(), Matrix::zeros(4, 4)).expect("shape ok"),
        ),
    ];
    out.push((
        "transfer/heisenberg".to_string(),
        transfer_o_operator(
            &fixtures::lie_adjoint_pair(fixtures::lie_heisenberg()),
            &fixtures::lie_operator_heisenberg(),
        )
        .expect("valid transfer"),
    ));
    out.push((
        "transfer/sl2-natural".to_string(),
        transfer_o_operator(
            &fixtures::lie_sl2_natural(),
            &fixtures::lie_operator_sl2_natural(),
        )
        .expect("valid transfer"),
    ));
    out
}

fn criterion5() -> (bool, Value) {
    let mut results = Vec::new();
    let mut all = true;
    for (name, t) in o_operator_fixtures() {
        assert!(check_o_operator(&t).expect("valid pair").passed);
        // Both constructors re-verify axioms internally; failure would error.
        let bracket_ok = induced_bracket(&t).is_ok();
        let rep_ok = induced_rep(&t).is_ok();
        let delta1 = coboundary_for_operator(&t, 1).expect("builds");
        let partial = partial_t_matrix(&t).expect("builds");
        let square_zero = delta1.matrix.mul(&partial).expect("shapes chain").is_zero();
        // Two routes to δ¹_T: the expanded display vs the generic builder on
        // the induced pair, compared on raw tensors.
        let expanded = delta1_expanded_matrix(&t).expect("builds");
        let pair_t = induced_pair(&t).expect("builds");
        let m = t.pair().rep().module_dim();
        let n = t.pair().algebra().dim();
        let mut two_routes = true;
        for b in 0..m * n {
            let f = Cochain::from_values(
                1,
                m,
                n,
                (0..m * n)
                    .map(|i| if i == b { Scalar::one() } else { Scalar::zero() })
                    .collect(),
            )
            .expect("shape ok");
            let generic = delta_raw(&pair_t, &f).expect("evaluates");
            two_routes &= expanded.column(b) == generic.values().to_vec();
        }
        let ok = bracket_ok && rep_ok && square_zero && two_routes;
        all &= ok;
        results.push(json!({
            "fixture": name,
            "induced_bracket_valid": bracket_ok,
            "induced_rep_valid": rep_ok,
            "delta1_after_partial_zero": square_zero,
            "delta1_two_routes_equal": two_routes,
        }));
    }
    (all, json!(results))
}

fn criterion6() -> (bool, Value) {
    let a2 = fixtures::lts_dim2();
    let t2 = fixtures::oper_dim2();
    let pair2 = fixtures::pair_dim2();

    let as_triple = |r: &triplekit::cohomology::CohomologyReport| {
        (r.dim_cocycles, r.dim_coboundaries, r.dim_h)
    };
    let yam1 = as_triple(&yamaguti_cohomology(&pair2, 1).expect("valid"));
    let yam3 = as_triple(&yamaguti_cohomology(&pair2, 3).expect("valid"));
    let op1 = as_triple(&o_operator_cohomology(&t2, 1).expect("valid"));
    let op3 = as_triple(&o_operator_cohomology(&t2, 3).expect("valid"));

    let ora_yam1 = oracle::adjoint_h1(&a2);
    let ora_yam3 = oracle::adjoint_h3(&a2);
    let ora_op1 = oracle::operator_h1(&a2, t2.matrix());
    let ora_op3 = oracle::operator_h3(&a2, t2.matrix());

    let checks = [
        ("yamaguti_h1", yam1, ora_yam1, GOLDEN_DIM2_YAM_H1),
        ("yamaguti_h3", yam3, ora_yam3, GOLDEN_DIM2_YAM_H3),
        ("o_operator_h1", op1, ora_op1, GOLDEN_DIM2_OP_H1),
        ("o_operator_h3", op3, ora_op3, GOLDEN_DIM2_OP_H3),
    ];
    let mut all = true;
    let mut results = Vec::new();
    for (name, got, ora, golden) in checks {
        let ok = got == ora && got == golden;
        all &= ok;
        results.push(json!({
            "name": name,
            "implementation": [got.0, got.1, got.2],
            "oracle": [ora.0, ora.1, ora.2],
            "golden": [golden.0, golden.1, golden.2],
            "equal": ok,
        }));
    }
    // The 4-dim fixture values double as regression pins (same oracle).
    let t4 = fixtures::oper_dim4();
    let a4 = fixtures::lts_dim4();
    let op1_4 = as_triple(&o_operator_cohomology(&t4, 1).expect("valid"));
    let op3_4 = as_triple(&o_operator_cohomology(&t4, 3).expect("valid"));
    let ok4 = op1_4 == oracle::operator_h1(&a4, t4.matrix())
        && op1_4 == GOLDEN_DIM4_OP_H1
        && op3_4 == oracle::operator_h3(&a4, t4.matrix())
        && op3_4 == GOLDEN_DIM4_OP_H3;
    all &= ok4;
    results.push(json!({
        "name": "dim4_o_operator_h1_h3",
        "implementation": [[op1_4.0, op1_4.1, op1_4.2], [op3_4.0, op3_4.1, op3_4.2]],
        "equal": ok4,
    }));
    (all, json!(results))
}

fn criterion7() -> (bool, Value) {
    let t = fixtures::oper_dim2();
    let a = fixtures::lts_dim2();
    let n = 2usize;
    let m = 2usize;
    let mut rng = SplitMix64::new(0x5eed_0007);

    // 50 generators sampled from the oracle's Z¹ basis, validated through two
    // independent library routes.
    let z1_basis = oracle::operator_z1_basis(&a, t.matrix());
    let delta1 = coboundary_for_operator(&t, 1).expect("builds").matrix;
    let mut order1_hits = 0usize;
    let mut kernel_hits = 0usize;
    for _ in 0..50 {
        let coords = rng.combination(&z1_basis, m * n);
        let t1 = Matrix::from_fn(n, m, |r, c| coords[c * n + r].clone());
        if check_infinitesimal(&t, &t1).expect("shape ok").order1.passed {
            order1_hits += 1;
        }
        if vec_is_zero(&delta1.mul_vec(&coords).expect("shape ok")) {
            kernel_hits += 1;
        }
    }

    // 20 equivalent pairs: T1 = ∂_T(X) + h with h a 1-cocycle commuting with
    // the X-action, so (φ_t, ψ_t) is a full morphism from T+tT1 to T+th.
    let b1 = partial_t_matrix(&t).expect("builds").image_basis();
    let mut pairs_pass = 0usize;
    let mut membership = 0usize;
    let mut nonzero_x = 0usize;
    for k in 0..20 {
        let alpha = if k % 3 == 0 {
            Scalar::zero()
        } else {
            let mut v = rng.small_rational();
            if v.is_zero() {
                v = Scalar::one();
            }
            v
        };
        let x = Bivector::from_pair(n, 0, 1).expect("valid").scale(&alpha);
        if !alpha.is_zero() {
            nonzero_x += 1;
        }
        // Homogeneous intertwining rows: [X, h(e_u)] = h(D(X) e_u).
        let ad_x = adjoint_action_matrix(&a, &x).expect("valid");
        let d_x = t.pair().rep().d_of_bivector(&x).expect("valid");
        let mut rows = z1_basis_rows(&a, t.matrix());
        for u in 0..m {
            for out in 0..n {
                let mut row = vec![Scalar::zero(); m * n];
                for l in 0..n {
                    row[u * n + l] += ad_x.at(out, l);
                }
                let dcol = d_x.column(u);
                for (v, dv) in dcol.iter().enumerate() {
                    if !dv.is_zero() {
                        row[v * n + out] -= dv;
                    }
                }
                rows.push(row);
            }
        }
        let h_basis = oracle::kernel_basis(rows, m * n);
        let h_coords = rng.combination(&h_basis, m * n);
        let h = Matrix::from_fn(n, m, |r, c| h_coords[c * n + r].clone());
        let d_t_x = partial_t(&t, &x)
            .expect("valid")
            .to_linear_map()
            .expect("degree 1");
        let t1 = d_t_x.add(&h).expect("shapes match");
        let d1 = DeformationSeries::new(t.clone(), vec![t1.clone()]).expect("shapes match");
        let d2 = DeformationSeries::new(t.clone(), vec![h.clone()]).expect("shapes match");
        let rep = check_equivalence(&t, &d1, &d2, &x).expect("same base");
        if rep.passed() {
            pairs_pass += 1;
        }
        let diff = t1.sub(&h).expect("shapes match");
        let flat: Vec<Scalar> = (0..m)
            .flat_map(|u| diff.column(u))
            .collect();
        if b1.contains(&flat).expect("ambient agrees") {
            membership += 1;
        }
    }

    // Conjugation cancels the order-1 term for T1 = d_T(X), X a Nijenhuis
    // element, on both dense fixtures.
    let mut cancellations = true;
    for (op, dim) in [(fixtures::oper_dim2(), 2usize), (fixtures::oper_dim4(), 4usize)] {
        for (i, j) in triplekit::lts::wedge_pairs(dim) {
            let x = Bivector::from_pair(dim, i, j).expect("valid");
            if !check_nijenhuis_element(&op, &x).expect("shape ok").member() {
                continue;
            }
            let t1 = partial_t(&op, &x)
                .expect("valid")
                .to_linear_map()
                .expect("degree 1");
            let d = DeformationSeries::new(op.clone(), vec![t1]).expect("shapes match");
            let e = EquivalencePair {
                bivector: x,
                higher_phi: vec![],
                higher_psi: vec![],
            };
            let rep = check_trivial_deformation(&op, &d, &e).expect("same base");
            cancellations &= rep.first_order_cancellation == Some(true);
        }
    }

    let ok = order1_hits == 50
        && kernel_hits == 50
        && pairs_pass == 20
        && membership == 20
        && nonzero_x >= 8
        && cancellations;
    (
        ok,
        json!({
            "order1_generators": {"passing": order1_hits, "in_kernel": kernel_hits, "total": 50},
            "equivalent_pairs": {"passing": pairs_pass, "difference_in_image": membership,
                                  "nonzero_bivectors": nonzero_x, "total": 20},
            "first_order_cancellations": cancellations,
        }),
    )
}

/// The oracle's Z¹ rows, re-exported shape for stacking extra conditions.
fn z1_basis_rows(a: &triplekit::lts::LtsStructure, t: &Matrix) -> Vec<Vec<Scalar>> {
    oracle::operator_delta1_rows(a, t)
}

fn criterion8() -> (bool, Value) {
    let mut all = true;
    let mut results = Vec::new();
    for (name, pair) in fixtures::lie_pairs() {
        let n = pair.algebra().dim();
        let m = pair.rep().module_dim();
        let lts_pair = lts_rep_from_lie(&pair).expect("transfer valid");
        let rep_ok = check_rep_axioms(lts_pair.rep()).passed();

        let d1 = ce_coboundary(&pair, 1).expect("valid");
        let mut transfers1 = true;
        for v in d1.kernel_basis().basis() {
            let f = LieCochain::from_components(1, n, m, v.clone()).expect("shape ok");
            let (_, report) = transfer_1cocycle(&pair, &f).expect("cocycle");
            transfers1 &= report.is_cocycle();
        }

        let d2 = ce_coboundary(&pair, 2).expect("valid");
        let mut transfers2 = true;
        for v in d2.kernel_basis().basis() {
            let phi = LieCochain::from_components(2, n, m, v.clone()).expect("shape ok");
            let (_, report) = transfer_2cocycle(&pair, &phi).expect("cocycle");
            transfers2 &= report.is_cocycle();
        }

        let mut lemma = true;
        for b in 0..n * m {
            let mut comp = vec![Scalar::zero(); n * m];
            comp[b] = Scalar::one();
            let alpha = LieCochain::from_components(1, n, m, comp).expect("shape ok");
            lemma &= associated_lemma_holds(&pair, &alpha).expect("valid");
        }

        let ok = rep_ok && transfers1 && transfers2 && lemma;
        all &= ok;
        results.push(json!({
            "fixture": name,
            "transferred_rep_axioms": rep_ok,
            "kernel_1cocycles_transfer": transfers1,
            "kernel_2cocycles_transfer": transfers2,
            "associated_lemma": lemma,
        }));
    }
    // Two-route coincidence for every passing operator fixture (verified
    // inside transfer_o_operator; an Err would mean disagreement).
    let mut two_route = Vec::new();
    for (name, pair, t) in fixtures::lie_operator_fixtures() {
        let ok = transfer_o_operator(&pair, &t).is_ok();
        all &= ok;
        two_route.push(json!({"fixture": name, "two_route_equal": ok}));
    }
    (all, json!({"pairs": results, "operators": two_route}))
}

fn battery() -> (Vec<(usize, &'static str, bool)>, String) {
    let (p1, v1) = criterion1();
    let (p2, v2) = criterion2();
    let (p3, v3) = criterion3();
    let (p4, v4) = criterion4();
    let (p5, v5) = criterion5();
    let (p6, v6) = criterion6();
    let (p7, v7) = criterion7();
    let (p8, v8) = criterion8();
    let lines = vec![
        (1usize, "fixture paper/dim2", p1),
        (2, "fixture paper/dim4", p2),
        (3, "complexes square to zero", p3),
        (4, "four-way operator equivalence", p4),
        (5, "operator cohomology well-formedness", p5),
        (6, "golden cohomology dimensions", p6),
        (7, "deformation theory", p7),
        (8, "lie bridge", p8),
    ];
    let report = json!({
        "criterion1": v1,
        "criterion2": v2,
        "criterion3": v3,
        "criterion4": v4,
        "criterion5": v5,
        "criterion6": v6,
        "criterion7": v7,
        "criterion8": v8,
    });
    (lines, serde_json::to_string_pretty(&report).expect("serializable"))
}

#[test]
fn criterion1_paper_example_dim2() {
    let (ok, _) = criterion1();
    report_line(1, "fixture paper/dim2", ok);
    assert!(ok);
}

#[test]
fn criterion2_paper_example_dim4() {
    let (ok, _) = criterion2();
    report_line(2, "fixture paper/dim4", ok);
    assert!(ok);
}

#[test]
fn criterion3_complexes_square_to_zero() {
    let (ok, v) = criterion3();
    report_line(3, "complexes square to zero", ok);
    assert!(ok, "{v}");
}

#[test]
fn criterion4_four_way_equivalence() {
    let (ok, v) = criterion4();
    report_line(4, "four-way operator equivalence", ok);
    assert!(ok, "{v}");
}

#[test]
fn criterion5_operator_cohomology_well_formed() {
    let (ok, v) = criterion5();
    report_line(5, "operator cohomology well-formedness", ok);
    assert!(ok, "{v}");
}

#[test]
fn criterion6_golden_cohomology() {
    let (ok, v) = criterion6();
    report_line(6, "golden cohomology dimensions", ok);
    assert!(ok, "{v}");
}

#[test]
fn criterion7_deformation_theory() {
    let (ok, v) = criterion7();
    report_line(7, "deformation theory", ok);
    assert!(ok, "{v}");
}

#[test]
fn criterion8_lie_bridge() {
    let (ok, v) = criterion8();
    report_line(8, "lie bridge", ok);
    assert!(ok, "{v}");
}

#[test]
fn criterion9_determinism_and_runtime() {
    let start = Instant::now();
    let (lines1, report1) = battery();
    let (_, report2) = battery();
    let elapsed = start.elapsed();
    for (n, name, ok) in &lines1 {
        report_line(*n, name, *ok);
    }
    let identical = report1 == report2;
    let within_budget = elapsed.as_secs_f64() < 60.0;
    report_line(9, "determinism and runtime", identical && within_budget);
    assert!(identical, "battery reports differ between runs");
    assert!(
        within_budget,
        "two battery runs took {:.1}s (budget 60s)",
        elapsed.as_secs_f64()
    );
    assert!(lines1.iter().all(|(_, _, ok)| *ok));
}
