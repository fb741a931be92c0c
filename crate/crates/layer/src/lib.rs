//! The layer-code construction.
//!
//! Takes a validated CSS code and produces an explicit three-dimensional
//! local stabilizer code: one surface-code layer per input qubit (xz-plane),
//! per Z check (yz-plane) and per X check (xy-plane), welded along junction
//! lines whose pattern follows the input Tanner graph, with point defects
//! where junction lines meet.
//!
//! The pipeline is `plan_layout` → `compute_pairing` → `classify_junctions`
//! → `build_layer_code`, each stage pure and deterministic; two builds of
//! the same input are identical down to qubit ids.

mod build;
mod code;
mod export;
mod geometry;
mod layout;
mod pairing;
mod registry;
mod tiling;

pub use build::{build_layer_code, BuildError};
pub use code::{CheckKind, CheckProvenance, LayerCode, Owner, QubitInfo, QubitRole};
pub use export::{
    geometry_json, layer_code_from_json, layer_code_json, write_check_matrices, ExportError,
};
pub use geometry::Frame;
pub use layout::{plan_layout, CheckLayerPlan, LayerLayout, LayoutError, QubitLayerPlan};
pub use pairing::{compute_pairing, OverlapPairing, PairingError, SegmentKind};
pub use registry::{
    classify_junctions, BoundaryPointKind, BulkPointKind, DefectRegistry, JunctionKind, LineDefect,
    LineOrientation, PointDefect, RegistryError,
};
pub use tiling::tile_blocks;
