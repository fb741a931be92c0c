//! JSON and Matrix Market input formats for codes.
//!
//! JSON schema: `{"name": str, "n": int, "hx": [[int,...],...],
//! "hz": [[int,...],...]}` with 0-based qubit indices, checks in definition
//! order. The Matrix Market alternative takes a pair of pattern files plus
//! a sidecar naming file.

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use serde::{Deserialize, Serialize};

use layercode_gf2::{read_matrix_market, MatrixMarketError};

use crate::{CssCode, CssError};

#[derive(Debug, thiserror::Error)]
pub enum CodeIoError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json schema error: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    MatrixMarket(#[from] MatrixMarketError),
    #[error(transparent)]
    Css(#[from] CssError),
    #[error("sidecar file missing `name` field")]
    Sidecar,
}

#[derive(Serialize, Deserialize)]
struct CodeJson {
    name: String,
    n: usize,
    hx: Vec<Vec<usize>>,
    hz: Vec<Vec<usize>>,
}

pub fn to_json(code: &CssCode) -> String {
    let doc = CodeJson {
        name: code.name().to_string(),
        n: code.num_qubits(),
        hx: code.hx().rows().iter().map(|r| r.support()).collect(),
        hz: code.hz().rows().iter().map(|r| r.support()).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("schema is serializable")
}

pub fn from_json(text: &str) -> Result<CssCode, CodeIoError> {
    let doc: CodeJson = serde_json::from_str(text)?;
    Ok(CssCode::from_supports(doc.name, doc.n, &doc.hx, &doc.hz)?)
}

#[derive(Deserialize)]
struct Sidecar {
    name: String,
}

/// Loads a code from `path`. A `.json` file uses the JSON schema; anything
/// else is treated as the X-check Matrix Market file, with the Z checks in
/// `<stem>.z.mtx` and the name in `<stem>.name.json`.
pub fn read_code_files(path: &Path) -> Result<CssCode, CodeIoError> {
    if path.extension().is_some_and(|e| e == "json") {
        let text = std::fs::read_to_string(path)?;
        return from_json(&text);
    }
    let hx = read_matrix_market(BufReader::new(File::open(path)?))?;
    let stem = path.with_extension("");
    let hz = read_matrix_market(BufReader::new(File::open(stem.with_extension("z.mtx"))?))?;
    let sidecar: Sidecar = serde_json::from_reader(BufReader::new(File::open(
        stem.with_extension("name.json"),
    )?))
    .map_err(|_| CodeIoError::Sidecar)?;
    Ok(CssCode::from_matrices(sidecar.name, hx, hz)?)
}
