//! Geometric plan: where every layer sits and what it spans.

use layercode_css::CssCode;
use serde::{Deserialize, Serialize};

use crate::geometry::Frame;

#[derive(Debug, thiserror::Error)]
pub enum LayoutError {
    #[error("spacing c = {0} rejected; junction templates need c >= 2")]
    SpacingTooSmall(usize),
    #[error("input code failed validation: {0} anticommuting check pairs")]
    InvalidCode(usize),
    #[error("check {index} ({pauli}) has empty support")]
    EmptyCheck { index: usize, pauli: char },
}

/// Plan entry for one qubit layer (an xz-plane).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QubitLayerPlan {
    pub input_qubit: usize,
    pub y: i64,
    pub x_extent: (i64, i64),
    pub z_extent: (i64, i64),
}

/// Plan entry for one check layer (yz for Z checks, xy for X checks).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckLayerPlan {
    pub input_check: usize,
    /// Fixed coordinate of the plane (x for Z checks, z for X checks).
    pub plane: i64,
    /// Closed y-span from the first to the last supported qubit layer.
    pub y_span: (i64, i64),
    /// Supported qubit layers, in qubit order.
    pub support: Vec<usize>,
}

/// The full geometric plan, before any checks are synthesized.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LayerLayout {
    pub c: usize,
    #[serde(skip, default = "Frame::placeholder")]
    pub frame: Frame,
    pub qubit_layers: Vec<QubitLayerPlan>,
    pub zcheck_layers: Vec<CheckLayerPlan>,
    pub xcheck_layers: Vec<CheckLayerPlan>,
    pub bounding_box: ([i64; 3], [i64; 3]),
}

impl LayerLayout {
    pub fn total_layers(&self) -> usize {
        self.qubit_layers.len() + self.zcheck_layers.len() + self.xcheck_layers.len()
    }
}

/// Lays out one xz-layer per input qubit, one yz-layer per Z check spanning
/// its support, and one xy-layer per X check, on the shared frame.
pub fn plan_layout(code: &CssCode, c: usize) -> Result<LayerLayout, LayoutError> {
    if c < 2 {
        return Err(LayoutError::SpacingTooSmall(c));
    }
    let report = code.validate();
    if !report.passed() {
        return Err(LayoutError::InvalidCode(report.violations.len()));
    }
    let frame = Frame::new(
        c,
        code.num_qubits(),
        code.num_x_checks(),
        code.num_z_checks(),
    );

    let qubit_layers: Vec<QubitLayerPlan> = (0..code.num_qubits())
        .map(|i| QubitLayerPlan {
            input_qubit: i,
            y: frame.qubit_plane(i),
            x_extent: (0, frame.lx),
            z_extent: (0, frame.lz),
        })
        .collect();

    let span_of = |support: &[usize]| -> (i64, i64) {
        let first = *support.first().expect("nonempty support");
        let last = *support.last().expect("nonempty support");
        (frame.qubit_plane(first), frame.qubit_plane(last))
    };

    let mut zcheck_layers = Vec::with_capacity(code.num_z_checks());
    for j in 0..code.num_z_checks() {
        let support = code.hz().row(j).support();
        if support.is_empty() {
            return Err(LayoutError::EmptyCheck {
                index: j,
                pauli: 'Z',
            });
        }
        zcheck_layers.push(CheckLayerPlan {
            input_check: j,
            plane: frame.zcheck_plane(j),
            y_span: span_of(&support),
            support,
        });
    }

    let mut xcheck_layers = Vec::with_capacity(code.num_x_checks());
    for k in 0..code.num_x_checks() {
        let support = code.hx().row(k).support();
        if support.is_empty() {
            return Err(LayoutError::EmptyCheck {
                index: k,
                pauli: 'X',
            });
        }
        xcheck_layers.push(CheckLayerPlan {
            input_check: k,
            plane: frame.xcheck_plane(k),
            y_span: span_of(&support),
            support,
        });
    }

    let max_plane_y = frame.qubit_plane(code.num_qubits().saturating_sub(1));
    Ok(LayerLayout {
        c,
        frame,
        qubit_layers,
        zcheck_layers,
        xcheck_layers,
        bounding_box: frame.bounding_box(max_plane_y),
    })
}
