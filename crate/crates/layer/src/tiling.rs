//! Block tiling: disjoint copies of one layer code.
//!
//! Copies are translated along x by one bounding box plus a gap, so the
//! union stays geometrically local and the logical count adds up.

use layercode_gf2::{BinaryMatrix, BinaryVector};

use crate::build::{build_layer_code, BuildError};
use crate::code::{LayerCode, QubitInfo};
use layercode_css::CssCode;

/// Builds `block_count` disjoint translated copies of the layer code of
/// `code`. Logical count multiplies by the block count; distance is that
/// of a single block.
pub fn tile_blocks(code: &CssCode, c: usize, block_count: usize) -> Result<LayerCode, BuildError> {
    assert!(block_count >= 1, "need at least one block");
    let base = build_layer_code(code, c)?;
    if block_count == 1 {
        return Ok(base);
    }
    let n = base.num_qubits();
    let stride = base.layout.bounding_box.1[0] - base.layout.bounding_box.0[0] + 2 * c as i64;

    let mut qubits: Vec<QubitInfo> = Vec::with_capacity(n * block_count);
    for b in 0..block_count {
        for q in &base.qubits {
            qubits.push(QubitInfo {
                id: b * n + q.id,
                pos: [q.pos[0] + stride * b as i64, q.pos[1], q.pos[2]],
                owner: q.owner,
                role: q.role,
            });
        }
    }

    let widen = |matrix: &BinaryMatrix| {
        let mut rows = Vec::with_capacity(matrix.num_rows() * block_count);
        for b in 0..block_count {
            for row in matrix.rows() {
                let mut wide = BinaryVector::zeros(n * block_count);
                for q in row.support() {
                    wide.set(b * n + q, true);
                }
                rows.push(wide);
            }
        }
        BinaryMatrix::from_rows(n * block_count, rows).expect("widths match")
    };
    let hx = widen(&base.hx);
    let hz = widen(&base.hz);

    let mut x_provenance = Vec::new();
    let mut z_provenance = Vec::new();
    for b in 0..block_count {
        let shift = stride * b as i64;
        for p in &base.x_provenance {
            let mut q = p.clone();
            q.site[0] += shift;
            x_provenance.push(q);
        }
        for p in &base.z_provenance {
            let mut q = p.clone();
            q.site[0] += shift;
            z_provenance.push(q);
        }
    }

    Ok(LayerCode {
        input: base.input.clone(),
        c,
        qubits,
        hx,
        hz,
        x_provenance,
        z_provenance,
        layout: base.layout.clone(),
        registry: base.registry.clone(),
    })
}
