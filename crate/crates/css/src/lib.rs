//! CSS stabilizer code model.
//!
//! A [`CssCode`] holds the X/Z parity-check matrices of an input code with a
//! frozen qubit ordering (the order of the input file, which downstream
//! pairing rules depend on). On top of that sit validation, logical-qubit
//! counting, canonical logical bases, exact/randomized distance, the
//! built-in example codes, and JSON / Matrix Market I/O.

mod builtins;
mod code;
mod distance;
mod io;
mod logicals;
mod random;

pub use builtins::{builtin, builtin_names, BuiltinError};
pub use code::{CssCode, CssError, ValidationReport};
pub use distance::{distance, DistanceError, DistanceReport};
pub use io::{from_json, read_code_files, to_json, CodeIoError};
pub use logicals::{logical_basis, LogicalBasis, LogicalError};
pub use random::random_css_code;
