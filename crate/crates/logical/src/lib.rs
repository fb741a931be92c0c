//! Constructive logical-operator machinery for layer codes.
//!
//! The two directions of the logical correspondence:
//!
//!   - input → layer: [`quasiconcatenated_logical`] replaces each input
//!     Pauli with a string operator across the matching qubit layer, then
//!     cancels the excitations those strings deposit at junctions with
//!     pairing strings inside the check layers.
//!   - layer → input: [`map_layer_logical_to_input`] cuts an operator at a
//!     reference plane between check layers, reads the excitation pattern
//!     the cut creates as an [`MConfiguration`], clears the segment bits
//!     onto qubit layers, and transcribes the remaining per-layer parities
//!     into an input Pauli.
//!
//! Everything here is pure GF(2) algebra on the built code; the X and Z
//! sides run through the same implementation with the axes swapped.

mod config;
mod ops;
mod quasi;

pub use config::{
    config_to_input_pauli, reduce_to_xz, slab_boundaries, slab_boundary_config, MConfiguration,
};
pub use ops::{LogicalOpError, PauliOperator, PauliSide};
pub use quasi::{
    map_layer_logical_to_input, quasiconcatenated_logical, quasiconcatenated_stabilizer,
};
