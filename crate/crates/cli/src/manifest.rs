//! Run manifests: enough to reproduce a run and fingerprint its outputs.

use std::path::Path;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub struct RunManifest {
    subcommand: String,
    input_hash: String,
    parameters: Value,
    outputs: Vec<Value>,
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

impl RunManifest {
    pub fn new(subcommand: &str, input_text: &str, parameters: Value) -> Self {
        Self {
            subcommand: subcommand.to_string(),
            input_hash: hex_digest(input_text.as_bytes()),
            parameters,
            outputs: Vec::new(),
        }
    }

    pub fn record_output(&mut self, path: &Path) -> std::io::Result<()> {
        let bytes = std::fs::read(path)?;
        self.outputs.push(json!({
            "file": path.file_name().and_then(|f| f.to_str()).unwrap_or_default(),
            "sha256": hex_digest(&bytes),
            "bytes": bytes.len(),
        }));
        Ok(())
    }

    pub fn finish(self) -> Value {
        json!({
            "subcommand": self.subcommand,
            "input_sha256": self.input_hash,
            "parameters": self.parameters,
            "tool_version": env!("CARGO_PKG_VERSION"),
            "outputs": self.outputs,
        })
    }
}
