//! The slab lemma, instance-checked: a zero-syndrome operator supported
//! wholly within one slab is a stabilizer. Verified by computing a basis
//! of all in-slab zero-syndrome operators and testing membership.

use layercode_css::builtin;
use layercode_gf2::BinaryVector;
use layercode_layer::build_layer_code;
use layercode_logical::{slab_boundaries, PauliSide};

fn slab_column_sets(lc: &layercode_layer::LayerCode, side: PauliSide) -> Vec<Vec<usize>> {
    let cuts = slab_boundaries(lc, side);
    let axis = match side {
        PauliSide::X => 0,
        PauliSide::Z => 2,
    };
    let mut slabs = Vec::new();
    let mut lo = i64::MIN;
    for (i, &cut) in cuts.iter().enumerate() {
        let hi = cut;
        let cols: Vec<usize> = lc
            .qubits
            .iter()
            .filter(|q| q.pos[axis] >= lo && q.pos[axis] < hi)
            .map(|q| q.id)
            .collect();
        slabs.push(cols);
        lo = hi;
        if i + 1 == cuts.len() {
            let last: Vec<usize> = lc
                .qubits
                .iter()
                .filter(|q| q.pos[axis] >= lo)
                .map(|q| q.id)
                .collect();
            slabs.push(last);
        }
    }
    slabs
}

#[test]
fn in_slab_zero_syndrome_operators_are_stabilizers() {
    for name in ["rep3", "c422", "steane"] {
        let input = builtin(name).unwrap();
        let lc = build_layer_code(&input, 2).unwrap();
        for side in [PauliSide::X, PauliSide::Z] {
            let (penalty, same) = match side {
                PauliSide::X => (&lc.hz, &lc.hx),
                PauliSide::Z => (&lc.hx, &lc.hz),
            };
            for (s, cols) in slab_column_sets(&lc, side).iter().enumerate() {
                if cols.is_empty() {
                    continue;
                }
                // basis of zero-syndrome operators confined to the slab
                let restricted = penalty.select_columns(cols);
                let kernel = restricted.nullspace_basis();
                for row in kernel.rows() {
                    let mut full = BinaryVector::zeros(lc.num_qubits());
                    for (j, &col) in cols.iter().enumerate() {
                        if row.get(j) {
                            full.set(col, true);
                        }
                    }
                    assert!(
                        penalty.mul_vector(&full).is_zero(),
                        "{name} {side:?} slab {s}: kernel lift has syndrome"
                    );
                    assert!(
                        same.in_row_space(&full).unwrap(),
                        "{name} {side:?} slab {s}: in-slab logical exists"
                    );
                }
            }
        }
    }
}

#[test]
fn slab_counts_match_check_layers() {
    let input = builtin("shor").unwrap();
    let lc = build_layer_code(&input, 2).unwrap();
    // one boundary per yz-layer for the X side, per xy-layer for Z
    assert_eq!(
        slab_boundaries(&lc, PauliSide::X).len(),
        input.num_z_checks()
    );
    assert_eq!(
        slab_boundaries(&lc, PauliSide::Z).len(),
        input.num_x_checks()
    );
}
