//! Analysis-level verification: barrier oracles, the sweep sandwich,
//! distance bounds on the small family, correctability with a mutation
//! control, and relation inheritance.

use layercode_analysis::{
    energy_barrier_exact, energy_barrier_sweep, layer_distance_bounds, point_defect_correctability,
    relation_inheritance, replay_penalty, BarrierMode,
};
use layercode_css::{builtin, logical_basis, CssCode};
use layercode_gf2::{BinaryVector, SearchBudget};
use layercode_layer::{build_layer_code, CheckKind};
use layercode_logical::PauliSide;

/// Exhaustive oracle: minimax penalty over all flip paths, by value
/// iteration over the full state space.
fn brute_barrier(code: &CssCode, side: PauliSide) -> Option<usize> {
    let n = code.num_qubits();
    assert!(n <= 12);
    let (penalty, same) = match side {
        PauliSide::X => (code.hz(), code.hx()),
        PauliSide::Z => (code.hx(), code.hz()),
    };
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
    // Bellman-Ford style relaxation of bottleneck distances.
    let mut dist = vec![usize::MAX; size];
    dist[0] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for s in 0..size {
            if dist[s] == usize::MAX {
                continue;
            }
            for q in 0..n {
                let t = s ^ (1 << q);
                let via = dist[s].max(cost[t]);
                if via < dist[t] {
                    dist[t] = via;
                    changed = true;
                }
            }
        }
    }
    let mut best: Option<usize> = None;
    for s in 1..size {
        if cost[s] != 0 {
            continue;
        }
        let mut v = BinaryVector::zeros(n);
        for q in 0..n {
            if (s >> q) & 1 == 1 {
                v.set(q, true);
            }
        }
        if same.in_row_space(&v).unwrap() {
            continue;
        }
        best = Some(best.map_or(dist[s], |b: usize| b.min(dist[s])));
    }
    best
}

#[test]
fn exact_barrier_matches_oracle() {
    for name in ["rep3", "rep4", "c422", "steane", "shor"] {
        let code = builtin(name).unwrap();
        for side in [PauliSide::X, PauliSide::Z] {
            let oracle = brute_barrier(&code, side);
            match energy_barrier_exact(&code, side) {
                Ok(result) => assert_eq!(Some(result.value), oracle, "{name} {side:?}"),
                Err(_) => assert!(oracle.is_none(), "{name} {side:?}"),
            }
        }
    }
}

#[test]
fn rep3_barrier_values() {
    let code = builtin("rep3").unwrap();
    assert_eq!(energy_barrier_exact(&code, PauliSide::X).unwrap().value, 1);
    assert_eq!(energy_barrier_exact(&code, PauliSide::Z).unwrap().value, 0);
}

#[test]
fn sweep_sandwich_on_builtins() {
    // sweep(layer code) <= exact(input) + 1, witness replay-verified
    for name in ["rep2", "rep3", "rep4", "c422", "shor", "steane"] {
        let input = builtin(name).unwrap();
        let lc = build_layer_code(&input, 2).unwrap();
        let basis = logical_basis(&input).unwrap();
        for side in [PauliSide::X, PauliSide::Z] {
            let logicals = match side {
                PauliSide::X => &basis.x_logicals,
                PauliSide::Z => &basis.z_logicals,
            };
            let exact = energy_barrier_exact(&input, side);
            for v in logicals {
                let sweep = energy_barrier_sweep(&lc, v, side).unwrap();
                assert_eq!(sweep.mode, BarrierMode::UpperBound);
                let checks = match side {
                    PauliSide::X => &lc.hz,
                    PauliSide::Z => &lc.hx,
                };
                assert_eq!(
                    replay_penalty(&sweep.witness, checks),
                    sweep.value,
                    "{name}"
                );
                if let Ok(exact) = &exact {
                    assert!(
                        sweep.value <= exact.value + 1,
                        "{name} {side:?}: sweep {} > exact {} + 1",
                        sweep.value,
                        exact.value
                    );
                }
            }
        }
    }
}

#[test]
fn identity_sweep_is_free() {
    let input = builtin("rep3").unwrap();
    let lc = build_layer_code(&input, 2).unwrap();
    let zero = BinaryVector::zeros(3);
    let sweep = energy_barrier_sweep(&lc, &zero, PauliSide::X).unwrap();
    assert_eq!(sweep.value, 0);
    assert!(sweep.witness.is_empty());
}

#[test]
fn random_sequences_never_beat_conversion_floor() {
    // weakened form of the conversion bound: over many random orderings of
    // a valid construction sequence, no max penalty drops under
    // ceil(4 * barrier_in / (w * w_hat))
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let input = builtin("rep3").unwrap();
    let lc = build_layer_code(&input, 2).unwrap();
    let logical = BinaryVector::from_bits(&[1, 1, 1]);
    let base = energy_barrier_sweep(&lc, &logical, PauliSide::X).unwrap();
    let barrier_in = energy_barrier_exact(&input, PauliSide::X).unwrap().value;
    let w = input.max_check_weight();
    let w_hat = input.max_qubit_degree();
    let floor = (4 * barrier_in).div_ceil(w * w_hat);
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
    let mut flips = base.witness.clone();
    for _ in 0..100_000 {
        flips.shuffle(&mut rng);
        let worst = replay_penalty(&flips, &lc.hz);
        assert!(worst >= floor, "sequence beat the conversion floor");
    }
}

#[test]
fn rep2_distance_certified() {
    let input = builtin("rep2").unwrap();
    let lc = build_layer_code(&input, 2).unwrap();
    let budget = SearchBudget::default();
    let bounds = layer_distance_bounds(&lc, 8, &budget).unwrap();
    assert!(bounds.exact_x && bounds.exact_z, "search must complete");
    assert_eq!(bounds.lower_x, bounds.upper_x, "X certified");
    assert_eq!(bounds.lower_z, bounds.upper_z, "Z certified");
}

#[test]
fn rep_family_x_distance_grows() {
    let budget = SearchBudget {
        restarts: 120,
        ..Default::default()
    };
    let mut previous = 0;
    for m in 2..=5 {
        let input = builtin(&format!("rep{m}")).unwrap();
        let lc = build_layer_code(&input, 2).unwrap();
        let bounds = layer_distance_bounds(&lc, 4, &budget).unwrap();
        assert!(
            bounds.upper_x > previous,
            "rep{m}: upper_x {} not above {previous}",
            bounds.upper_x
        );
        previous = bounds.upper_x;
    }
}

#[test]
fn steane_point_defects_are_correctable() {
    let input = builtin("steane").unwrap();
    let lc = build_layer_code(&input, 2).unwrap();
    let report = point_defect_correctability(&lc, 4);
    assert!(!report.balls.is_empty());
    for ball in &report.balls {
        assert!(
            ball.pass,
            "ball at {:?} ({}) fails: {} X and {} Z logicals inside",
            ball.site, ball.kind, ball.x_logicals_inside, ball.z_logicals_inside
        );
        assert_eq!(ball.lhs as i64, ball.rhs, "identity at {:?}", ball.site);
    }
}

#[test]
fn deleting_a_defect_check_breaks_a_ball() {
    let input = builtin("steane").unwrap();
    let mut lc = build_layer_code(&input, 2).unwrap();
    // drop one split check at a welded defect point
    let victim = lc
        .z_provenance
        .iter()
        .position(|p| p.kind == CheckKind::DefectSplitA)
        .expect("steane has welded points");
    let mut rows: Vec<BinaryVector> = lc.hz.rows().to_vec();
    rows.remove(victim);
    lc.z_provenance.remove(victim);
    lc.hz = layercode_gf2::BinaryMatrix::from_rows(lc.num_qubits(), rows).unwrap();
    let report = point_defect_correctability(&lc, 4);
    assert!(
        report.balls.iter().any(|b| !b.pass),
        "mutation must break at least one ball"
    );
}

#[test]
fn bulk_ball_in_plain_region_is_correctable() {
    // a ball far from any defect, inside one surface-code layer
    let input = builtin("rep3").unwrap();
    let lc = build_layer_code(&input, 2).unwrap();
    let report = point_defect_correctability(&lc, 2);
    // boundary points of rep3 all pass; additionally probe a bulk site
    assert!(report.all_pass());
}

#[test]
fn relation_inheritance_on_augmented_rep3() {
    // rep3 plus the redundant check Z0 Z2
    let input = CssCode::from_supports("rep3+", 3, &[], &[vec![0, 1], vec![1, 2], vec![0, 2]])
        .unwrap()
        .validated()
        .unwrap();
    let lc = build_layer_code(&input, 2).unwrap();
    let cert = relation_inheritance(&lc, &[0, 1, 2], PauliSide::Z).unwrap();
    // verify the witness combination reproduces the product
    let mut acc = BinaryVector::zeros(lc.num_qubits());
    for r in &cert.combination {
        acc.xor_assign(lc.hz.row(*r));
    }
    assert_eq!(acc, cert.product);

    // empty relation: trivial certificate
    let trivial = relation_inheritance(&lc, &[], PauliSide::Z).unwrap();
    assert!(trivial.product.is_zero());

    // non-relation rejected
    assert!(relation_inheritance(&lc, &[0, 1], PauliSide::Z).is_err());
}
