//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (run with `--nocapture` to see the lines; a FAIL line is
//! always accompanied by a panicking assertion, so `cargo test` reflects the
//! verdicts faithfully).

mod common;

use common::{brute_force_automorphisms, SerialOracle};
use meshcat::configuration::{
    catalog_configuration, check_configuration, lambda_configuration, lambda_simples,
};
use meshcat::dynkin::{DynkinGraph, Kind};
use meshcat::field::PrimeField;
use meshcat::functors::{
    coset_label, default_template, eta_automorphism, omega_candidates, preserves_ideal, solve_lift,
    ArrowAssignment,
};
use meshcat::pathcat::{
    mesh_ideal, modified_mesh_ideal, present, stable_vs_full, Budget, PathContext, QuotientCategory,
};
use meshcat::tquiver::{
    build_quotient, validate_type, Frequency, RfsType, TqVertex, TranslationQuiver,
};

fn verdict(criterion: u32, name: &str, ok: bool, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {criterion} ({name}): {detail}");
    assert!(ok, "criterion {criterion} ({name}) failed: {detail}");
}

fn ty(kind: Kind, n: u32, num: u32, den: u32, t: u32) -> RfsType {
    validate_type(
        DynkinGraph::new(kind, n).unwrap(),
        Frequency::new(num, den).unwrap(),
        t,
    )
    .unwrap()
}

fn rewrite_mesh(tq: &TranslationQuiver) -> QuotientCategory<PrimeField> {
    let ctx = PathContext::from_tquiver(tq);
    let f = PrimeField::gf2();
    let ideal = mesh_ideal(tq, &f);
    QuotientCategory::build_rewrite(ctx, f, ideal, Budget::default()).unwrap()
}

fn degreewise_mesh(tq: &TranslationQuiver) -> QuotientCategory<PrimeField> {
    let ctx = PathContext::from_tquiver(tq);
    let f = PrimeField::gf2();
    let ideal = mesh_ideal(tq, &f);
    QuotientCategory::build_degreewise(ctx, f, ideal, Budget::default()).unwrap()
}

fn modified_engine(m: u32) -> (TranslationQuiver, QuotientCategory<PrimeField>) {
    let tq = build_quotient(&RfsType::lambda(m));
    let ctx = PathContext::from_tquiver(&tq);
    let f = PrimeField::gf2();
    let ideal = modified_mesh_ideal(&tq, m, &f).unwrap();
    let qc = QuotientCategory::build_rewrite(ctx, f, ideal, Budget::default()).unwrap();
    (tq, qc)
}

/// The homogeneous (type, label) instances shared by criteria 1 and 9.
fn catalog_instances() -> Vec<(RfsType, &'static str)> {
    vec![
        (ty(Kind::A, 3, 2, 3, 1), "(A3, 2/3, 1)"),
        (ty(Kind::A, 3, 1, 1, 2), "(A3, 1, 2)"),
        (ty(Kind::D, 4, 1, 1, 1), "(D4, 1, 1)"),
        (ty(Kind::D, 4, 1, 1, 3), "(D4, 1, 3)"),
        (ty(Kind::D, 4, 1, 1, 2), "(D4, 1, 2)"),
        (ty(Kind::D, 6, 1, 3, 1), "(D6, 1/3, 1)"),
    ]
}

#[test]
fn criterion_1_configuration_axioms() {
    let mut checked = Vec::new();
    for (t, label) in catalog_instances() {
        let tq = build_quotient(&t);
        let qc = rewrite_mesh(&tq);
        let c = catalog_configuration(&t, &tq).unwrap();
        let report = check_configuration(&qc, &tq, &c).unwrap();
        assert!(report.verdict, "{label}: {:?}", report);
        checked.push(label.to_string());
    }
    for m in [2u32, 3] {
        let tq = build_quotient(&RfsType::lambda(m));
        let qc = rewrite_mesh(&tq);
        let c = lambda_configuration(m, &tq).unwrap();
        let report = check_configuration(&qc, &tq, &c).unwrap();
        assert!(report.verdict, "lambda m={m}: {:?}", report);
        checked.push(format!("Lambda(m={m})"));
    }
    verdict(
        1,
        "configuration axioms",
        true,
        &format!("Def. 1.1 holds for {}", checked.join(", ")),
    );
}

/// Optional slow tier: the E6 catalog entry (< 5 min).
#[test]
#[ignore = "slow: E6 mesh category"]
fn criterion_1_e6_slow() {
    let t = ty(Kind::E, 6, 1, 1, 1);
    let tq = build_quotient(&t);
    let qc = rewrite_mesh(&tq);
    let c = catalog_configuration(&t, &tq).unwrap();
    assert_eq!(c.len(), 6);
    let report = check_configuration(&qc, &tq, &c).unwrap();
    verdict(
        1,
        "configuration axioms, E6 slow tier",
        report.verdict,
        "Def. 1.1 holds for (E6, 1, 1)",
    );
}

#[test]
fn criterion_2_nilpotency_m2() {
    let (tq, modified) = modified_engine(2);
    let (n_mod, wit) = modified.nilpotency_index().unwrap();
    let mesh = rewrite_mesh(&tq);
    let (n_mesh, _) = mesh.nilpotency_index().unwrap();
    let ok = n_mod == 9 && n_mesh == 9 && wit.map(|w| w.len()) == Some(8);
    verdict(
        2,
        "nilpotency 6m-3",
        ok,
        &format!("m=2: modified index {n_mod}, mesh index {n_mesh} (both expected 9)"),
    );
}

/// Slow tier of criterion 2: m = 3 (index 15 for both ideals).
#[test]
#[ignore = "slow: m=3 nilpotency"]
fn criterion_2_nilpotency_m3_slow() {
    let (tq, modified) = modified_engine(3);
    let (n_mod, _) = modified.nilpotency_index().unwrap();
    let mesh = rewrite_mesh(&tq);
    let (n_mesh, _) = mesh.nilpotency_index().unwrap();
    let ok = n_mod == 15 && n_mesh == 15;
    verdict(
        2,
        "nilpotency 6m-3, m=3 slow tier",
        ok,
        &format!("m=3: modified index {n_mod}, mesh index {n_mesh} (both expected 15)"),
    );
}

#[test]
fn criterion_3_deviation_path() {
    let mut details = Vec::new();
    let mut ok = true;
    for m in [2u32, 3, 4] {
        let tq = build_quotient(&RfsType::lambda(m));
        let p = tq.build_path_p(m).unwrap();
        let src = tq.vertex(0, 3 * m - 1).unwrap();
        let tgt = tq.vertex(1, 3 * m - 1).unwrap();
        // Every arrow exists by construction (path_through resolves each
        // consecutive pair through arrow_between, which errors otherwise).
        ok &= p.len() == (4 * m) as usize && p.source == src && tq.path_target(&p) == tgt;
        details.push(format!("m={m}: length {}", p.len()));
    }
    verdict(
        3,
        "deviation path",
        ok,
        &format!(
            "{} — source (0,3m-1), target (1,3m-1) in all cases",
            details.join(", ")
        ),
    );
}

#[test]
fn criterion_4_h_existence_m2() {
    let (tq, qc) = modified_engine(2);
    let f = PrimeField::gf2();
    let eta = eta_automorphism(&tq).unwrap();
    let plain = ArrowAssignment::from_automorphism(&qc.ctx, &f, &eta);
    let plain_fails = !preserves_ideal(&plain, qc.ideal(), &qc).unwrap().verdict;
    let template = default_template(&tq, 2).unwrap();
    let solutions = solve_lift(&eta, &template, qc.ideal(), &qc).unwrap();
    let ok = plain_fails && !solutions.is_empty();
    verdict(
        4,
        "H existence",
        ok,
        &format!(
            "m=2: {} corrected lift(s) of eta preserve the modified ideal; uncorrected eta fails",
            solutions.len()
        ),
    );
}

#[test]
fn criterion_4_h_existence_m3() {
    let (tq, qc) = modified_engine(3);
    let f = PrimeField::gf2();
    let eta = eta_automorphism(&tq).unwrap();
    let plain = ArrowAssignment::from_automorphism(&qc.ctx, &f, &eta);
    let plain_fails = !preserves_ideal(&plain, qc.ideal(), &qc).unwrap().verdict;
    let template = default_template(&tq, 3).unwrap();
    assert_eq!(template.entries.len(), 8);
    let solutions = solve_lift(&eta, &template, qc.ideal(), &qc).unwrap();
    let ok = plain_fails && !solutions.is_empty();
    verdict(
        4,
        "H existence, m=3",
        ok,
        &format!(
            "m=3: {} corrected lift(s) over 2^8 candidates; uncorrected eta fails",
            solutions.len()
        ),
    );
}

#[test]
fn criterion_5_automorphism_groups() {
    // Λ(m) quotients: order 2(2m−1) and canonical τ^a η^b labels.
    let mut details = Vec::new();
    let mut ok = true;
    for m in [2u32, 3] {
        let tq = build_quotient(&RfsType::lambda(m));
        let group = tq.automorphism_group().unwrap();
        let expected = 2 * (2 * m as usize - 1);
        let mut labels: Vec<(u32, u32)> = group
            .iter()
            .map(|g| coset_label(&tq, g).unwrap().expect("inside <tau> x <eta>"))
            .collect();
        labels.sort();
        labels.dedup();
        ok &= group.len() == expected && labels.len() == expected;
        details.push(format!("Lambda(m={m}): order {}", group.len()));
    }
    // Serial quotients ℤA_n/τ^s: group order = brute force = formula
    // (2s for n ≥ 2, s for n = 1).
    for (n, s) in [(1u32, 1u32), (1, 3), (2, 2), (2, 3), (3, 2)] {
        let t = ty(Kind::A, n, s, n, 1);
        let tq = build_quotient(&t);
        let order = tq.automorphism_group().unwrap().len();
        let brute = brute_force_automorphisms(&tq);
        let formula = if n >= 2 { 2 * s as usize } else { s as usize };
        ok &= order == brute && order == formula;
        details.push(format!("ZA{n}/tau^{s}: order {order}"));
    }
    verdict(5, "automorphism groups", ok, &details.join(", "));
}

#[test]
fn criterion_6_projective_factoring() {
    let m = 2u32;
    let (tq, stable) = modified_engine(m);
    let c = lambda_configuration(m, &tq).unwrap();
    let coords: Vec<(u32, u32)> = c
        .ids()
        .map(|v| match tq.vertices()[v] {
            TqVertex::Reg { layer, pos } => (layer, pos),
            TqVertex::Proj { .. } => unreachable!("stable"),
        })
        .collect();
    let full_tq = tq.attach_projectives(&coords).unwrap();
    let f = PrimeField::gf2();
    let full_ctx = PathContext::from_tquiver(&full_tq);
    let full_ideal = modified_mesh_ideal(&full_tq, m, &f).unwrap();
    let full = QuotientCategory::build_rewrite(full_ctx, f, full_ideal, Budget::default()).unwrap();
    let cmp = stable_vs_full(&full_tq, &full, &tq, &stable, (0, 6), (1, 6)).unwrap();
    verdict(
        6,
        "projective-factoring fact",
        cmp.dim_projective_factoring == 0,
        &format!(
            "Hom((0,6),(1,6)) at m=2: full dim {}, stable dim {}, {} through projectives",
            cmp.dim_full, cmp.dim_stable, cmp.dim_projective_factoring
        ),
    );
}

#[test]
fn criterion_7_algebra_dimensions() {
    let f = PrimeField::gf2();
    let mut details = Vec::new();
    let mut ok = true;
    for m in [2u32, 3] {
        let pres = present::lambda(m, &f).unwrap();
        let qc = pres.quotient(f, Budget::default()).unwrap();
        let loewy = present::loewy_data(&qc).unwrap();
        // Route 1: engine dimensions. Route 2: counting vertices in the
        // transcribed Loewy diagrams: P_1 = [1, 2 × m, 1], P_j = [1 × (m+2)].
        let mut diagrams: Vec<Vec<usize>> = vec![{
            let mut l = vec![1];
            l.extend(std::iter::repeat_n(2, m as usize));
            l.push(1);
            l
        }];
        for _ in 2..=m {
            diagrams.push(vec![1; m as usize + 2]);
        }
        let total: usize = loewy.iter().map(|d| d.dim).sum();
        let diagram_total: usize = diagrams.iter().flatten().sum();
        ok &= loewy[0].dim == (2 * m + 2) as usize;
        ok &= loewy.iter().skip(1).all(|d| d.dim == (m + 2) as usize);
        ok &= loewy.iter().map(|d| d.layers.clone()).collect::<Vec<_>>() == diagrams;
        ok &= total == (m * m + 3 * m) as usize && total == diagram_total;
        details.push(format!("m={m}: dim {total}"));
    }
    verdict(
        7,
        "algebra dimensions",
        ok,
        &format!(
            "{} — engine and Loewy-diagram counts agree (2m+2, m+2, total m^2+3m)",
            details.join(", ")
        ),
    );
}

#[test]
fn criterion_8_serial_oracle() {
    let f = PrimeField::gf2();
    let mut instances = 0;
    for n in 1..=4u32 {
        for s in 1..=4u32 {
            let oracle = SerialOracle {
                n: n as i64,
                s: s as i64,
            };
            let t = ty(Kind::A, n, s, n, 1);
            let tq = build_quotient(&t);
            // Stable table vs oracle stable Homs.
            let stable = rewrite_mesh(&tq);
            for x in 0..tq.vertices().len() {
                for y in 0..tq.vertices().len() {
                    let expected =
                        oracle.stable_hom(oracle.module_of(&tq, x), oracle.module_of(&tq, y));
                    assert_eq!(
                        stable.hom_dim(x, y),
                        expected,
                        "stable (n={n}, s={s}) at ({}, {})",
                        tq.vertices()[x].name(),
                        tq.vertices()[y].name()
                    );
                }
            }
            // Full table (projectives attached over the catalog C) vs oracle
            // full Homs.
            let c = catalog_configuration(&t, &tq).unwrap();
            let coords: Vec<(u32, u32)> = c
                .ids()
                .map(|v| match tq.vertices()[v] {
                    TqVertex::Reg { layer, pos } => (layer, pos),
                    TqVertex::Proj { .. } => unreachable!("stable"),
                })
                .collect();
            let full_tq = tq.attach_projectives(&coords).unwrap();
            let full_ctx = PathContext::from_tquiver(&full_tq);
            let full = QuotientCategory::build_rewrite(
                full_ctx,
                f,
                mesh_ideal(&full_tq, &f),
                Budget::default(),
            )
            .unwrap();
            for x in 0..full_tq.vertices().len() {
                for y in 0..full_tq.vertices().len() {
                    let expected =
                        oracle.hom(oracle.module_of(&full_tq, x), oracle.module_of(&full_tq, y));
                    assert_eq!(
                        full.hom_dim(x, y),
                        expected,
                        "full (n={n}, s={s}) at ({}, {})",
                        full_tq.vertices()[x].name(),
                        full_tq.vertices()[y].name()
                    );
                }
            }
            instances += 1;
        }
    }
    verdict(
        8,
        "serial oracle equivalence",
        instances == 16,
        &format!("full and stable Hom tables match the closed-form serial oracle for all {instances} cases (n, s <= 4)"),
    );
}

#[test]
fn criterion_9_backend_agreement() {
    let f = PrimeField::gf2();
    let mut instances = Vec::new();
    // Catalog instances of criterion 1 (all homogeneous mesh ideals). The
    // Λ(3) quotient is excluded: the per-degree engine enumerates all paths
    // up to degree 15 there, which is out of reach by design (see the
    // module docs); its slow-tier coverage is the E6 run.
    for (t, label) in catalog_instances() {
        instances.push((build_quotient(&t), label.to_string()));
    }
    // Serial instances of criterion 8, stable and full.
    for (n, s) in [(2u32, 2u32), (3, 2), (2, 3), (4, 2)] {
        let t = ty(Kind::A, n, s, n, 1);
        let tq = build_quotient(&t);
        let c = catalog_configuration(&t, &tq).unwrap();
        let coords: Vec<(u32, u32)> = c
            .ids()
            .map(|v| match tq.vertices()[v] {
                TqVertex::Reg { layer, pos } => (layer, pos),
                TqVertex::Proj { .. } => unreachable!("stable"),
            })
            .collect();
        let full_tq = tq.attach_projectives(&coords).unwrap();
        instances.push((tq, format!("ZA{n}/tau^{s}")));
        instances.push((full_tq, format!("ZA{n}/tau^{s} with projectives")));
    }
    let count = instances.len();
    for (tq, label) in instances {
        let ideal = mesh_ideal(&tq, &f);
        assert!(ideal.is_homogeneous(), "{label}");
        let rw = rewrite_mesh(&tq);
        let dw = degreewise_mesh(&tq);
        assert_eq!(rw.dims(), dw.dims(), "backends disagree on {label}");
        // Bases have matching sizes per pair by construction of dims; spot
        // check the total dimensions as well.
        assert_eq!(rw.total_dimension(), dw.total_dimension(), "{label}");
    }
    verdict(
        9,
        "backend agreement",
        true,
        &format!("rewriting and per-degree Hom tables identical on {count} homogeneous instances"),
    );
}

#[test]
fn criterion_10_omega_shadow() {
    let tq = build_quotient(&RfsType::lambda(2));
    let s = lambda_simples(2, &tq).unwrap();
    let c = lambda_configuration(2, &tq).unwrap();
    let cands = omega_candidates(&tq, &s, &c).unwrap();
    let ok = cands.len() == 1 && coset_label(&tq, &cands[0]).unwrap() == Some((0, 1));
    verdict(
        10,
        "omega shadow",
        ok,
        &format!(
            "m=2: {} automorphism(s) map the simples onto C; the unique one is eta",
            cands.len()
        ),
    );
}
