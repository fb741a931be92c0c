//! The output code object and its structural invariants.

use std::collections::BTreeMap;

use layercode_css::CssCode;
use layercode_gf2::{BinaryMatrix, BinaryVector};
use serde::{Deserialize, Serialize};

use crate::layout::LayerLayout;
use crate::registry::DefectRegistry;

/// Which layer (or defect) a qubit or check belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Owner {
    /// xz-layer of an input qubit.
    QubitLayer(usize),
    /// yz-layer of an input Z check.
    ZCheckLayer(usize),
    /// xy-layer of an input X check.
    XCheckLayer(usize),
    /// Weld structure at a point defect (z-check layer, qubit, x-check).
    Defect(usize, usize, usize),
}

impl Owner {
    pub fn label(&self) -> String {
        match self {
            Owner::QubitLayer(i) => format!("q{i}"),
            Owner::ZCheckLayer(j) => format!("z{j}"),
            Owner::XCheckLayer(k) => format!("x{k}"),
            Owner::Defect(j, i, k) => format!("defect-z{j}-q{i}-x{k}"),
        }
    }
}

/// Grid role of a qubit within its layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QubitRole {
    /// Edge along x̂ within an xz- or xy-layer.
    XEdge,
    /// Edge along ẑ within an xz- or yz-layer.
    ZEdge,
    /// Edge along ŷ within a check layer (includes junction stubs).
    YEdge,
    /// Extra qubit woven into a point defect.
    Weld,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QubitInfo {
    pub id: usize,
    pub pos: [i64; 3],
    pub owner: Owner,
    pub role: QubitRole,
}

/// Template kind a check was instantiated from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckKind {
    /// Bulk or boundary star of a layer.
    Star,
    /// Bulk or boundary plaquette of a layer.
    Plaquette,
    /// Plaquette of a check layer that carries a junction coupling.
    JunctionPlaquette,
    /// Star of a check layer (xy-layer X-checks carry junction couplings).
    JunctionStar,
    /// First half of the split plaquette at a junction-through-line point.
    DefectSplitA,
    /// Second half of the split plaquette at that point.
    DefectSplitB,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckProvenance {
    pub owner: Owner,
    pub kind: CheckKind,
    pub site: [i64; 3],
}

/// The constructed three-dimensional code.
#[derive(Clone, Debug)]
pub struct LayerCode {
    pub input: CssCode,
    pub c: usize,
    pub qubits: Vec<QubitInfo>,
    pub hx: BinaryMatrix,
    pub hz: BinaryMatrix,
    pub x_provenance: Vec<CheckProvenance>,
    pub z_provenance: Vec<CheckProvenance>,
    pub layout: LayerLayout,
    pub registry: DefectRegistry,
}

impl LayerCode {
    pub fn num_qubits(&self) -> usize {
        self.qubits.len()
    }

    /// As a plain CSS code, for reuse of the input-code machinery.
    pub fn as_css(&self) -> CssCode {
        CssCode::from_matrices(
            format!("layer({})", self.input.name()),
            self.hx.clone(),
            self.hz.clone(),
        )
        .expect("matrices share the qubit count")
    }

    pub fn logical_qubit_count(&self) -> usize {
        self.num_qubits() - self.hx.rank() - self.hz.rank()
    }

    /// First anticommuting (X row, Z row) pair, if any.
    pub fn commutation_violation(&self) -> Option<(usize, usize)> {
        for (a, x) in self.hx.rows().iter().enumerate() {
            for (b, z) in self.hz.rows().iter().enumerate() {
                if x.overlap(z) % 2 == 1 {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn max_check_weight(&self) -> usize {
        self.hx
            .rows()
            .iter()
            .chain(self.hz.rows())
            .map(BinaryVector::weight)
            .max()
            .unwrap_or(0)
    }

    /// Side length of the largest axis-aligned bounding box over all check
    /// supports; geometric locality demands this stays at most 2c+1.
    pub fn max_check_box(&self) -> i64 {
        let mut worst = 0;
        for (matrix, _) in [(&self.hx, 'x'), (&self.hz, 'z')] {
            for row in matrix.rows() {
                worst = worst.max(self.support_box(row));
            }
        }
        worst
    }

    fn support_box(&self, row: &BinaryVector) -> i64 {
        let mut min = [i64::MAX; 3];
        let mut max = [i64::MIN; 3];
        for q in row.support() {
            let p = self.qubits[q].pos;
            for a in 0..3 {
                min[a] = min[a].min(p[a]);
                max[a] = max[a].max(p[a]);
            }
        }
        (0..3).map(|a| max[a] - min[a]).max().unwrap_or(0)
    }

    /// Qubit ids within Chebyshev distance `radius` of `site`.
    pub fn ball(&self, site: [i64; 3], radius: i64) -> Vec<usize> {
        self.qubits
            .iter()
            .filter(|q| (0..3).all(|a| (q.pos[a] - site[a]).abs() <= radius))
            .map(|q| q.id)
            .collect()
    }

    /// Map from input qubit index to the layer-code qubit ids of its layer,
    /// sorted by id.
    pub fn layer_qubits(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for q in &self.qubits {
            if let Owner::QubitLayer(i) = q.owner {
                out.entry(i).or_default().push(q.id);
            }
        }
        out
    }
}
