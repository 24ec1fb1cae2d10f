//! Machine-checkable run certificates.
//!
//! Every CLI command emits one [`Certificate`]: the command line, sha256
//! digests of the input files, a sorted verdict map with reals rendered at
//! 15 significant digits, and optional witness matrices. Re-running the same
//! command on the same inputs with the same seed reproduces the document
//! byte for byte.

use crate::io::MatrixFile;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub verdicts: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<BTreeMap<String, MatrixFile>>,
    pub tol: f64,
}

impl Certificate {
    pub fn new(command: impl Into<String>, tol: f64) -> Self {
        Self {
            command: command.into(),
            inputs: BTreeMap::new(),
            verdicts: BTreeMap::new(),
            witnesses: None,
            tol,
        }
    }

    pub fn record_input(&mut self, path: impl AsRef<Path>) -> std::io::Result<()> {
        let path = path.as_ref();
        let digest = file_digest(path)?;
        self.inputs.insert(path.display().to_string(), digest);
        Ok(())
    }

    pub fn verdict_real(&mut self, key: &str, value: f64) {
        self.verdicts.insert(key.to_string(), fmt_real(value));
    }

    pub fn verdict_bool(&mut self, key: &str, value: bool) {
        self.verdicts.insert(key.to_string(), value.to_string());
    }

    pub fn verdict_int(&mut self, key: &str, value: usize) {
        self.verdicts.insert(key.to_string(), value.to_string());
    }

    pub fn verdict_text(&mut self, key: &str, value: impl Into<String>) {
        self.verdicts.insert(key.to_string(), value.into());
    }

    pub fn witness(&mut self, key: &str, value: MatrixFile) {
        self.witnesses.get_or_insert_with(BTreeMap::new).insert(key.to_string(), value);
    }

    /// Pretty JSON with a trailing newline; the canonical printed form.
    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("certificate serializes");
        text.push('\n');
        text
    }
}

/// Reals at 15 significant digits: below double-precision noise, above every
/// test tolerance in the crate. Infinities serialize as "inf"/"-inf".
pub fn fmt_real(value: f64) -> String {
    if value.is_infinite() {
        return if value > 0.0 { "inf".to_string() } else { "-inf".to_string() };
    }
    format!("{value:.14e}")
}

pub fn file_digest(path: impl AsRef<Path>) -> std::io::Result<String> {
    let bytes = std::fs::read(path)?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(format!("{:x}", hasher.finalize()))
}
