use layercode_gf2::BinaryVector;
use layercode_layer::{LayerCode, Owner};

/// Which single-Pauli species an operator is built from.
///
/// The X side is analyzed against Z checks and cut between yz-layers; the
/// Z side mirrors with the roles of the check layers swapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PauliSide {
    X,
    Z,
}

impl PauliSide {
    pub fn opposite(self) -> Self {
        match self {
            PauliSide::X => PauliSide::Z,
            PauliSide::Z => PauliSide::X,
        }
    }
}

/// A pure X-type or Z-type Pauli on the layer code, stored by support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliOperator {
    pub side: PauliSide,
    pub support: BinaryVector,
}

impl PauliOperator {
    pub fn identity(side: PauliSide, n: usize) -> Self {
        Self {
            side,
            support: BinaryVector::zeros(n),
        }
    }

    pub fn weight(&self) -> usize {
        self.support.weight()
    }

    /// Syndrome against the opposite-type check matrix.
    pub fn syndrome(&self, lc: &LayerCode) -> BinaryVector {
        match self.side {
            PauliSide::X => lc.hz.mul_vector(&self.support),
            PauliSide::Z => lc.hx.mul_vector(&self.support),
        }
    }

    pub fn is_stabilizer(&self, lc: &LayerCode) -> bool {
        self.syndrome(lc).is_zero()
            && match self.side {
                PauliSide::X => lc.hx.in_row_space(&self.support).unwrap_or(false),
                PauliSide::Z => lc.hz.in_row_space(&self.support).unwrap_or(false),
            }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LogicalOpError {
    #[error("input operator of length {got} does not match input code size {expected}")]
    InputSize { expected: usize, got: usize },
    #[error("input operator is outside the input {side:?} normalizer")]
    NotInNormalizer { side: PauliSide },
    #[error("residual syndrome after pairing on check layer {layer}; integrity failure")]
    ResidualSyndrome { layer: usize },
    #[error("configuration still has segment bits set; clear them first")]
    SegmentBitsPresent,
    #[error("slab index {index} out of range ({count} boundaries)")]
    SlabOutOfRange { index: usize, count: usize },
    #[error("operator has nonzero syndrome; not in the layer normalizer")]
    NoisyOperator,
    #[error("mapped operator is outside the input normalizer; invalid input operator")]
    MapsOutsideNormalizer,
}

/// Qubit ids owned by the yz-layer of Z check `j` (welds excluded).
pub(crate) fn zlayer_qubits(lc: &LayerCode, j: usize) -> Vec<usize> {
    lc.qubits
        .iter()
        .filter(|q| q.owner == Owner::ZCheckLayer(j))
        .map(|q| q.id)
        .collect()
}

/// Qubit ids owned by the xy-layer of X check `k` (welds excluded).
pub(crate) fn xlayer_qubits(lc: &LayerCode, k: usize) -> Vec<usize> {
    lc.qubits
        .iter()
        .filter(|q| q.owner == Owner::XCheckLayer(k))
        .map(|q| q.id)
        .collect()
}
