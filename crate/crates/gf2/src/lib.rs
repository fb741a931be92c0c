//! Bit-packed linear algebra over GF(2).
//!
//! Everything downstream (code validation, logical-operator search, rank
//! identities) reduces to exact arithmetic on binary vectors and matrices,
//! so this crate keeps the representation dense and word-packed and the
//! operations allocation-light and deterministic.
//!
//! Word size and packing order are internal: all construction and inspection
//! goes through bit indices or index lists, never raw words.

mod echelon;
mod matrix;
mod mm;
mod search;
mod vector;

pub use echelon::Echelon;
pub use matrix::BinaryMatrix;
pub use mm::{read_matrix_market, write_matrix_market, MatrixMarketError};
pub use search::{
    min_weight_in_coset, CosetSearch, SearchBudget, SearchError, SearchMode, SearchOutcome,
};
pub use vector::BinaryVector;

/// Errors from shape-checked operations.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("bit index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
}
