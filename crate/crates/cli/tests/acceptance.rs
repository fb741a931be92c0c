//! Acceptance suite: one test per criterion, each ending in a printed
//! verdict line. Run with `cargo test -p layercode-cli --test acceptance`
//! (add `-- --nocapture` to see the PASS lines on success).

use std::time::Instant;

use layercode_analysis::{
    energy_barrier_exact, energy_barrier_sweep, layer_distance_bounds, point_defect_correctability,
    relation_inheritance, replay_penalty,
};
use layercode_css::{builtin, logical_basis, random_css_code, CssCode};
use layercode_gf2::{BinaryMatrix, BinaryVector, SearchBudget};
use layercode_layer::{build_layer_code, layer_code_json, CheckKind, LayerCode};
use layercode_logical::{map_layer_logical_to_input, quasiconcatenated_logical, PauliSide};

fn verdict(criterion: &str, detail: &str) {
    println!("[acceptance] PASS {criterion}: {detail}");
}

/// The four built-ins plus fifty seeded random codes with n <= 8 and no
/// degenerate (weight < 2) checks.
fn corpus() -> Vec<(String, CssCode, LayerCode)> {
    let mut out = Vec::new();
    for name in ["rep3", "c422", "shor", "steane"] {
        let code = builtin(name).unwrap();
        let lc = build_layer_code(&code, 2).unwrap();
        out.push((name.to_string(), code, lc));
    }
    let mut seed = 0u64;
    let mut built = 0;
    while built < 50 {
        let code = random_css_code(seed, 8);
        seed += 1;
        if code
            .hx()
            .rows()
            .iter()
            .chain(code.hz().rows())
            .any(|r| r.weight() < 2)
        {
            continue;
        }
        let lc = build_layer_code(&code, 2).unwrap();
        out.push((format!("random-{}", seed - 1), code, lc));
        built += 1;
    }
    out
}

#[test]
fn criterion_1_layer_count_goldens() {
    let start = Instant::now();
    for (name, layers, (nq, nx, nz)) in [
        ("rep3", 5, (3, 0, 2)),
        ("c422", 6, (4, 1, 1)),
        ("shor", 17, (9, 2, 6)),
        ("steane", 13, (7, 3, 3)),
    ] {
        let code = builtin(name).unwrap();
        let lc = build_layer_code(&code, 2).unwrap();
        assert_eq!(lc.layout.total_layers(), layers, "{name}: total layers");
        assert_eq!(lc.layout.qubit_layers.len(), nq, "{name}: xz layers");
        assert_eq!(lc.layout.xcheck_layers.len(), nx, "{name}: xy layers");
        assert_eq!(lc.layout.zcheck_layers.len(), nz, "{name}: yz layers");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 5, "budget 5 s, took {elapsed:?}");
    verdict(
        "criterion 1 (layer-count goldens)",
        &format!("rep3=5 c422=6 shor=17 steane=13 with correct splits in {elapsed:?}"),
    );
}

#[test]
fn criterion_2_structural_invariants() {
    let start = Instant::now();
    let corpus = corpus();
    for (name, _, lc) in &corpus {
        assert!(lc.commutation_violation().is_none(), "{name}: hx·hzᵀ != 0");
        let w = lc.max_check_weight();
        assert!(w <= 6, "{name}: weight {w}");
        let bound = 2 * lc.c as i64 + 1;
        let side = lc.max_check_box();
        assert!(side <= bound, "{name}: box {side} > {bound}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "budget 60 s, took {elapsed:?}");
    verdict(
        "criterion 2 (structural invariants)",
        &format!(
            "commutation, weight<=6, box<=2c+1 on {} codes in {elapsed:?}",
            corpus.len()
        ),
    );
}

#[test]
fn criterion_3_k_preservation() {
    let start = Instant::now();
    let corpus = corpus();
    for (name, code, lc) in &corpus {
        let expected = code.logical_qubit_count().unwrap();
        assert_eq!(lc.logical_qubit_count(), expected, "{name}");
    }
    // the named golden values
    for (name, k) in [("steane", 1), ("shor", 1), ("c422", 2), ("rep3", 1)] {
        let (_, _, lc) = corpus
            .iter()
            .find(|(n, _, _)| n == name)
            .expect("builtin in corpus");
        assert_eq!(lc.logical_qubit_count(), k, "{name} golden");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "budget 60 s, took {elapsed:?}");
    verdict(
        "criterion 3 (k-preservation)",
        &format!(
            "k(output)=k(input) on {} codes in {elapsed:?}",
            corpus.len()
        ),
    );
}

#[test]
fn criterion_4_logical_roundtrip() {
    let start = Instant::now();
    for name in ["rep3", "c422", "shor", "steane"] {
        let code = builtin(name).unwrap();
        let lc = build_layer_code(&code, 2).unwrap();
        let basis = logical_basis(&code).unwrap();
        let mut quasi_x = Vec::new();
        let mut quasi_z = Vec::new();
        for v in &basis.x_logicals {
            let op = quasiconcatenated_logical(&lc, v, PauliSide::X).unwrap();
            let back = map_layer_logical_to_input(&lc, &op).unwrap();
            assert!(
                code.hx().in_row_space(&back.xor(v)).unwrap(),
                "{name}: X roundtrip"
            );
            quasi_x.push(op);
        }
        for v in &basis.z_logicals {
            let op = quasiconcatenated_logical(&lc, v, PauliSide::Z).unwrap();
            let back = map_layer_logical_to_input(&lc, &op).unwrap();
            assert!(
                code.hz().in_row_space(&back.xor(v)).unwrap(),
                "{name}: Z roundtrip"
            );
            quasi_z.push(op);
        }
        // quasiconcatenated pairing matrix equals the input pairing matrix
        let k = basis.num_pairs();
        let mut pairing = BinaryMatrix::zeros(k, k);
        for (a, x) in quasi_x.iter().enumerate() {
            for (b, z) in quasi_z.iter().enumerate() {
                if x.support.dot(&z.support) {
                    pairing.set(a, b, true);
                }
            }
        }
        assert_eq!(pairing, basis.pairing_matrix(), "{name}: pairing matrix");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "budget 30 s, took {elapsed:?}");
    verdict(
        "criterion 4 (logical round-trip)",
        &format!("round trips and pairing matrices on all built-ins in {elapsed:?}"),
    );
}

#[test]
fn criterion_5_distance_desk_scale() {
    let start = Instant::now();
    // rep2: certified lower equals upper on both sides
    let rep2 = builtin("rep2").unwrap();
    let lc2 = build_layer_code(&rep2, 2).unwrap();
    let budget = SearchBudget::default();
    let bounds = layer_distance_bounds(&lc2, 8, &budget).unwrap();
    assert!(bounds.exact_x && bounds.exact_z, "rep2 search complete");
    assert_eq!(bounds.lower_x, bounds.upper_x, "rep2 X certified");
    assert_eq!(bounds.lower_z, bounds.upper_z, "rep2 Z certified");

    // rep(m), m = 2..5: the X-distance upper bound strictly increases
    let family_budget = SearchBudget {
        restarts: 120,
        ..Default::default()
    };
    let mut uppers = Vec::new();
    for m in 2..=5 {
        let code = builtin(&format!("rep{m}")).unwrap();
        let lc = build_layer_code(&code, 2).unwrap();
        let b = layer_distance_bounds(&lc, 3, &family_budget).unwrap();
        uppers.push(b.upper_x);
    }
    for w in uppers.windows(2) {
        assert!(w[1] > w[0], "upper_x not strictly increasing: {uppers:?}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "budget 10 min, took {elapsed:?}");
    verdict(
        "criterion 5 (desk-scale distance)",
        &format!(
            "rep2 certified lower=upper=({},{}), rep family upper_x {uppers:?} in {elapsed:?}",
            bounds.lower_x, bounds.lower_z
        ),
    );
}

#[test]
fn criterion_6_energy_barrier() {
    let start = Instant::now();
    let rep3 = builtin("rep3").unwrap();

    // independent oracle: full bottleneck relaxation over the 2^3 states
    let oracle = |penalty: &BinaryMatrix, same: &BinaryMatrix| -> Option<usize> {
        let n = 3usize;
        let size = 1usize << n;
        let cost: Vec<usize> = (0..size)
            .map(|s| {
                let mut v = BinaryVector::zeros(n);
                for q in 0..n {
                    if (s >> q) & 1 == 1 {
                        v.set(q, true);
                    }
                }
                penalty.mul_vector(&v).weight()
            })
            .collect();
        let mut dist = vec![usize::MAX; size];
        dist[0] = 0;
        let mut settled = true;
        while settled {
            settled = false;
            for s in 0..size {
                if dist[s] == usize::MAX {
                    continue;
                }
                for q in 0..n {
                    let t = s ^ (1 << q);
                    let via = dist[s].max(cost[t]);
                    if via < dist[t] {
                        dist[t] = via;
                        settled = true;
                    }
                }
            }
        }
        (1..size)
            .filter(|&s| {
                if cost[s] != 0 {
                    return false;
                }
                let mut v = BinaryVector::zeros(n);
                for q in 0..n {
                    if (s >> q) & 1 == 1 {
                        v.set(q, true);
                    }
                }
                !same.in_row_space(&v).unwrap()
            })
            .map(|s| dist[s])
            .min()
    };

    let x = energy_barrier_exact(&rep3, PauliSide::X).unwrap();
    assert_eq!(x.value, 1, "rep3 X barrier");
    assert_eq!(oracle(rep3.hz(), rep3.hx()), Some(1), "oracle X");
    assert_eq!(replay_penalty(&x.witness, rep3.hz()), 1, "X replay");

    let z = energy_barrier_exact(&rep3, PauliSide::Z).unwrap();
    assert_eq!(z.value, 0, "rep3 Z barrier");
    assert_eq!(oracle(rep3.hx(), rep3.hz()), Some(0), "oracle Z");

    // sweep bound on the layer code stays within exact input barrier + 1
    let lc = build_layer_code(&rep3, 2).unwrap();
    let logical = BinaryVector::from_bits(&[1, 1, 1]);
    let sweep = energy_barrier_sweep(&lc, &logical, PauliSide::X).unwrap();
    assert!(
        sweep.value <= x.value + 1,
        "sweep {} > exact {} + 1",
        sweep.value,
        x.value
    );
    assert_eq!(replay_penalty(&sweep.witness, &lc.hz), sweep.value);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "budget 10 s, took {elapsed:?}");
    verdict(
        "criterion 6 (energy barrier)",
        &format!(
            "rep3 barriers X=1 Z=0 match the oracle; sweep {} <= 2 in {elapsed:?}",
            sweep.value
        ),
    );
}

#[test]
fn criterion_7_correctability() {
    let start = Instant::now();
    let steane = builtin("steane").unwrap();
    let lc = build_layer_code(&steane, 2).unwrap();
    let radius = 2 * lc.c as i64;
    let report = point_defect_correctability(&lc, radius);
    assert!(!report.balls.is_empty());
    for ball in &report.balls {
        assert!(ball.pass, "ball at {:?} ({})", ball.site, ball.kind);
        assert_eq!(ball.lhs as i64, ball.rhs, "identity at {:?}", ball.site);
    }
    let ball_count = report.balls.len();

    // mutation control: delete one defect check, at least one ball fails
    let mut mutated = lc.clone();
    let victim = mutated
        .z_provenance
        .iter()
        .position(|p| p.kind == CheckKind::DefectSplitA)
        .expect("welded defect checks exist");
    let mut rows: Vec<BinaryVector> = mutated.hz.rows().to_vec();
    rows.remove(victim);
    mutated.z_provenance.remove(victim);
    mutated.hz = BinaryMatrix::from_rows(mutated.num_qubits(), rows).unwrap();
    let broken = point_defect_correctability(&mutated, radius);
    assert!(
        broken.balls.iter().any(|b| !b.pass),
        "deletion must break a ball"
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "budget 2 min, took {elapsed:?}");
    verdict(
        "criterion 7 (correctability)",
        &format!("{ball_count} steane balls pass; single deletion breaks one in {elapsed:?}"),
    );
}

#[test]
fn criterion_8_relation_inheritance() {
    let start = Instant::now();
    let augmented = CssCode::from_supports(
        "rep3-augmented",
        3,
        &[],
        &[vec![0, 1], vec![1, 2], vec![0, 2]],
    )
    .unwrap()
    .validated()
    .unwrap();
    let lc = build_layer_code(&augmented, 2).unwrap();
    let cert = relation_inheritance(&lc, &[0, 1, 2], PauliSide::Z).unwrap();
    let mut acc = BinaryVector::zeros(lc.num_qubits());
    for r in &cert.combination {
        acc.xor_assign(lc.hz.row(*r));
    }
    assert_eq!(acc, cert.product, "combination witness reproduces product");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "budget 10 s, took {elapsed:?}");
    verdict(
        "criterion 8 (relation inheritance)",
        &format!(
            "Z0Z1·Z1Z2·Z0Z2 lifts into the layer stabilizer group ({} checks) in {elapsed:?}",
            cert.combination.len()
        ),
    );
}

#[test]
fn criterion_9_determinism() {
    let steane = builtin("steane").unwrap();
    let a = build_layer_code(&steane, 2).unwrap();
    let b = build_layer_code(&steane, 2).unwrap();
    let json_a = serde_json::to_string(&layer_code_json(&a)).unwrap();
    let json_b = serde_json::to_string(&layer_code_json(&b)).unwrap();
    assert_eq!(json_a, json_b, "builds are byte-identical");

    // randomized analysis with a fixed seed is also reproducible
    let budget = SearchBudget {
        seed: 7,
        restarts: 50,
        ..Default::default()
    };
    let d1 = layer_distance_bounds(&a, 3, &budget).unwrap();
    let d2 = layer_distance_bounds(&b, 3, &budget).unwrap();
    assert_eq!(d1.upper_x, d2.upper_x);
    assert_eq!(d1.upper_z, d2.upper_z);
    assert_eq!(d1.x_witness, d2.x_witness);
    verdict(
        "criterion 9 (determinism)",
        "two pipeline runs byte-identical, seeded analysis reproducible",
    );
}
