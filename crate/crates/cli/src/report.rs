use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Machine-readable record of one invocation.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub args: Vec<String>,
    /// SHA-256 over the input files in argument order, each prefixed by its
    /// byte length.
    pub inputs_sha256: String,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub wall_time_ms: f64,
    pub version: String,
    pub seed: Option<u64>,
}

pub fn digest<'a>(inputs: impl IntoIterator<Item = &'a [u8]>) -> String {
    let mut h = Sha256::new();
    for bytes in inputs {
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    hex::encode(h.finalize())
}
