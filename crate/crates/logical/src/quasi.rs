//! Quasiconcatenated logicals and stabilizers, and the inverse map.

use layercode_gf2::{BinaryMatrix, BinaryVector};
use layercode_layer::{LayerCode, Owner, QubitRole};

use crate::config::{config_to_input_pauli, reduce_to_xz, slab_boundaries, slab_boundary_config};
use crate::ops::{xlayer_qubits, zlayer_qubits, LogicalOpError, PauliOperator, PauliSide};

/// The string operator across qubit layer `i` for one input Pauli.
///
/// X side: every ẑ-edge of the layer on one transverse row (the lowest,
/// z = 1), running boundary to boundary along x̂. Z side: every ẑ-edge in
/// one column (x = 0), running rough to rough along ẑ.
fn layer_string(lc: &LayerCode, i: usize, side: PauliSide) -> BinaryVector {
    let mut v = BinaryVector::zeros(lc.num_qubits());
    for q in &lc.qubits {
        if q.owner != Owner::QubitLayer(i) || q.role != QubitRole::ZEdge {
            continue;
        }
        let hit = match side {
            PauliSide::X => q.pos[2] == 1,
            PauliSide::Z => q.pos[0] == 0,
        };
        if hit {
            v.set(q.id, true);
        }
    }
    v
}

/// Clears the syndrome on one check layer with a correction supported on
/// that layer's own qubits.
fn clear_layer_syndrome(
    lc: &LayerCode,
    side: PauliSide,
    layer_index: usize,
    layer_cols: &[usize],
    syndrome: &BinaryVector,
) -> Result<BinaryVector, LogicalOpError> {
    // Rows of the opposite-type matrix whose check could see this layer's
    // qubits; restrict columns to the layer and solve.
    let (matrix, provs) = match side {
        PauliSide::X => (&lc.hz, &lc.z_provenance),
        PauliSide::Z => (&lc.hx, &lc.x_provenance),
    };
    let owns = |owner: Owner| match (side, owner) {
        (PauliSide::X, Owner::ZCheckLayer(j)) => j == layer_index,
        (PauliSide::X, Owner::Defect(j, _, _)) => j == layer_index,
        (PauliSide::Z, Owner::XCheckLayer(k)) => k == layer_index,
        (PauliSide::Z, Owner::Defect(_, _, k)) => k == layer_index,
        _ => false,
    };
    let rows: Vec<usize> = provs
        .iter()
        .enumerate()
        .filter(|(_, p)| owns(p.owner))
        .map(|(r, _)| r)
        .collect();
    let mut sub_rows = Vec::with_capacity(rows.len());
    let mut target = BinaryVector::zeros(rows.len());
    for (t, &r) in rows.iter().enumerate() {
        sub_rows.push(matrix.row(r).select(layer_cols));
        if syndrome.get(r) {
            target.set(t, true);
        }
    }
    let sub = BinaryMatrix::from_rows(layer_cols.len(), sub_rows).expect("uniform widths");
    let local = sub
        .solve(&target)
        .ok_or(LogicalOpError::ResidualSyndrome { layer: layer_index })?;
    let mut fix = BinaryVector::zeros(lc.num_qubits());
    for (t, &col) in layer_cols.iter().enumerate() {
        if local.get(t) {
            fix.set(col, true);
        }
    }
    Ok(fix)
}

/// Builds the quasiconcatenated representative of an input logical.
///
/// The result is a product of one string per supported qubit layer plus
/// pairing strings confined to the check layers of the opposite species,
/// and it carries zero syndrome.
pub fn quasiconcatenated_logical(
    lc: &LayerCode,
    input_logical: &BinaryVector,
    side: PauliSide,
) -> Result<PauliOperator, LogicalOpError> {
    let n_in = lc.input.num_qubits();
    if input_logical.len() != n_in {
        return Err(LogicalOpError::InputSize {
            expected: n_in,
            got: input_logical.len(),
        });
    }
    // normalizer membership: commutes with every opposite-type input check
    let commutes = match side {
        PauliSide::X => lc.input.hz().mul_vector(input_logical).is_zero(),
        PauliSide::Z => lc.input.hx().mul_vector(input_logical).is_zero(),
    };
    if !commutes {
        return Err(LogicalOpError::NotInNormalizer { side });
    }

    let mut support = BinaryVector::zeros(lc.num_qubits());
    for i in input_logical.support() {
        support.xor_assign(&layer_string(lc, i, side));
    }

    let mut op = PauliOperator { side, support };
    let syndrome = op.syndrome(lc);
    if syndrome.is_zero() {
        return Ok(op);
    }
    // Pair the junction excitations within each check layer.
    let layer_count = match side {
        PauliSide::X => lc.input.num_z_checks(),
        PauliSide::Z => lc.input.num_x_checks(),
    };
    for layer_index in 0..layer_count {
        let cols = match side {
            PauliSide::X => zlayer_qubits(lc, layer_index),
            PauliSide::Z => xlayer_qubits(lc, layer_index),
        };
        let fix = clear_layer_syndrome(lc, side, layer_index, &cols, &syndrome)?;
        op.support.xor_assign(&fix);
    }
    let residual = op.syndrome(lc);
    if !residual.is_zero() {
        return Err(LogicalOpError::ResidualSyndrome { layer: usize::MAX });
    }
    Ok(op)
}

/// The quasiconcatenated form of one input stabilizer check: the GF(2) sum
/// of every same-type check on the corresponding check layer (welded defect
/// checks included). By construction it lies in the layer stabilizer row
/// space and has zero syndrome.
pub fn quasiconcatenated_stabilizer(
    lc: &LayerCode,
    check_index: usize,
    side: PauliSide,
) -> PauliOperator {
    let (matrix, provs) = match side {
        PauliSide::X => (&lc.hx, &lc.x_provenance),
        PauliSide::Z => (&lc.hz, &lc.z_provenance),
    };
    let owns = |owner: Owner| match (side, owner) {
        (PauliSide::X, Owner::XCheckLayer(k)) => k == check_index,
        (PauliSide::X, Owner::Defect(_, _, k)) => k == check_index,
        (PauliSide::Z, Owner::ZCheckLayer(j)) => j == check_index,
        (PauliSide::Z, Owner::Defect(j, _, _)) => j == check_index,
        _ => false,
    };
    let mut support = BinaryVector::zeros(lc.num_qubits());
    for (row, prov) in matrix.rows().iter().zip(provs) {
        if owns(prov.owner) {
            support.xor_assign(row);
        }
    }
    PauliOperator { side, support }
}

/// Maps a zero-syndrome layer operator back to an input Pauli by cutting at
/// the median reference boundary, clearing segment bits, and transcribing
/// layer parities. The result is checked against the input normalizer.
pub fn map_layer_logical_to_input(
    lc: &LayerCode,
    op: &PauliOperator,
) -> Result<BinaryVector, LogicalOpError> {
    if !op.syndrome(lc).is_zero() {
        return Err(LogicalOpError::NoisyOperator);
    }
    let boundaries = slab_boundaries(lc, op.side);
    let reference = boundaries.len() / 2;
    let cfg = slab_boundary_config(lc, op, reference)?;
    let cfg = reduce_to_xz(&cfg, lc);
    let pauli = config_to_input_pauli(&cfg)?;
    let in_normalizer = match op.side {
        PauliSide::X => lc.input.hz().mul_vector(&pauli).is_zero(),
        PauliSide::Z => lc.input.hx().mul_vector(&pauli).is_zero(),
    };
    if !in_normalizer {
        return Err(LogicalOpError::MapsOutsideNormalizer);
    }
    Ok(pauli)
}
