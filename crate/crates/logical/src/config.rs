//! Slab-boundary excitation patterns and their canonical reduction.

use std::collections::BTreeMap;

use layercode_gf2::BinaryVector;
use layercode_layer::{LayerCode, Owner};

use crate::ops::{LogicalOpError, PauliOperator, PauliSide};

/// Excitation pattern a cut operator creates on one slab boundary: one bit
/// per qubit layer, one bit per check-layer segment between consecutive
/// junctions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MConfiguration {
    pub side: PauliSide,
    pub boundary: usize,
    /// Parity of excitations on each qubit layer.
    pub xz_bits: BinaryVector,
    /// Parity per (check layer, segment index); segment `s` lies between
    /// the s-th and (s+1)-th supported qubit layer of that check.
    pub segment_bits: BTreeMap<(usize, usize), bool>,
}

impl MConfiguration {
    pub fn weight(&self) -> usize {
        self.xz_bits.weight() + self.segment_bits.values().filter(|&&b| b).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.xz_bits.is_zero() && self.segment_bits.values().all(|&b| !b)
    }

    pub fn segments_clear(&self) -> bool {
        self.segment_bits.values().all(|&b| !b)
    }
}

/// Cut coordinates for the given species: one boundary just past each
/// opposite-species check layer (x for the X side, z for the Z side).
///
/// A code with no check layers of that species is a single slab; the one
/// boundary through the middle of the cuboid still reads the per-layer
/// string parities, which is the whole content of the map there.
pub fn slab_boundaries(lc: &LayerCode, side: PauliSide) -> Vec<i64> {
    match side {
        PauliSide::X => {
            if lc.layout.zcheck_layers.is_empty() {
                return vec![lc.layout.frame.lx / 2];
            }
            lc.layout
                .zcheck_layers
                .iter()
                .map(|zl| zl.plane + 2)
                .collect()
        }
        PauliSide::Z => {
            if lc.layout.xcheck_layers.is_empty() {
                return vec![lc.layout.frame.lz / 2];
            }
            lc.layout
                .xcheck_layers
                .iter()
                .map(|xl| xl.plane + 2)
                .collect()
        }
    }
}

/// Cuts `op` at the boundary and reads off the excitation pattern.
///
/// The restriction keeps the qubits strictly below the cut coordinate; for
/// an operator with zero global syndrome the violations of the restricted
/// operator cluster along the cut, on qubit layers and on check layers of
/// the same species, which is exactly what an `MConfiguration` records.
pub fn slab_boundary_config(
    lc: &LayerCode,
    op: &PauliOperator,
    boundary: usize,
) -> Result<MConfiguration, LogicalOpError> {
    let boundaries = slab_boundaries(lc, op.side);
    let Some(&cut) = boundaries.get(boundary) else {
        return Err(LogicalOpError::SlabOutOfRange {
            index: boundary,
            count: boundaries.len(),
        });
    };
    let axis = match op.side {
        PauliSide::X => 0,
        PauliSide::Z => 2,
    };
    let mut restricted = BinaryVector::zeros(lc.num_qubits());
    for q in op.support.support() {
        if lc.qubits[q].pos[axis] < cut {
            restricted.set(q, true);
        }
    }
    let cut_op = PauliOperator {
        side: op.side,
        support: restricted,
    };
    let syndrome = cut_op.syndrome(lc);
    let provs = match op.side {
        PauliSide::X => &lc.z_provenance,
        PauliSide::Z => &lc.x_provenance,
    };

    let mut xz_bits = BinaryVector::zeros(lc.input.num_qubits());
    let mut segment_bits: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    for r in syndrome.support() {
        let prov = &provs[r];
        match (op.side, prov.owner) {
            (_, Owner::QubitLayer(i)) => xz_bits.flip(i),
            (PauliSide::X, Owner::XCheckLayer(k)) => {
                let seg = segment_index(lc.input.hx().row(k).support(), lc, prov.site[1]);
                *segment_bits.entry((k, seg)).or_insert(false) ^= true;
            }
            (PauliSide::Z, Owner::ZCheckLayer(j)) => {
                let seg = segment_index(lc.input.hz().row(j).support(), lc, prov.site[1]);
                *segment_bits.entry((j, seg)).or_insert(false) ^= true;
            }
            _ => {
                // A cut can only excite checks that straddle it; same-x
                // (respectively same-z) check layers never do.
                return Err(LogicalOpError::NoisyOperator);
            }
        }
    }
    segment_bits.retain(|_, v| *v);
    Ok(MConfiguration {
        side: op.side,
        boundary,
        xz_bits,
        segment_bits,
    })
}

/// Number of supported qubit planes strictly below coordinate `y`.
fn segment_index(support: Vec<usize>, lc: &LayerCode, y: i64) -> usize {
    support
        .iter()
        .filter(|&&i| lc.layout.frame.qubit_plane(i) < y)
        .count()
}

/// Clears every segment bit onto an adjacent qubit layer.
///
/// Each segment is bounded by two junctions; a segment excitation can be
/// pushed through either onto that junction's qubit layer. The direction
/// minimizing the resulting weight wins, ties toward the lower qubit index.
pub fn reduce_to_xz(cfg: &MConfiguration, lc: &LayerCode) -> MConfiguration {
    let mut out = cfg.clone();
    let entries: Vec<(usize, usize)> = out
        .segment_bits
        .iter()
        .filter(|(_, &v)| v)
        .map(|(&k, _)| k)
        .collect();
    for (layer, seg) in entries {
        let support = match cfg.side {
            PauliSide::X => lc.input.hx().row(layer).support(),
            PauliSide::Z => lc.input.hz().row(layer).support(),
        };
        debug_assert!(seg >= 1 && seg < support.len());
        let lo = support[seg - 1];
        let hi = support[seg];
        // toggling a set bit lowers the weight; prefer that, then low index
        let pick = match (out.xz_bits.get(lo), out.xz_bits.get(hi)) {
            (true, false) => lo,
            (false, true) => hi,
            _ => lo.min(hi),
        };
        out.xz_bits.flip(pick);
        out.segment_bits.insert((layer, seg), false);
    }
    out.segment_bits.retain(|_, v| *v);
    out
}

/// Transcribes a segments-free configuration into an input Pauli: one bit
/// per qubit layer with an odd excitation parity.
pub fn config_to_input_pauli(cfg: &MConfiguration) -> Result<BinaryVector, LogicalOpError> {
    if !cfg.segments_clear() {
        return Err(LogicalOpError::SegmentBitsPresent);
    }
    Ok(cfg.xz_bits.clone())
}
