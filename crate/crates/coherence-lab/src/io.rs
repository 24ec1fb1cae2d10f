//! Self-describing JSON documents for states, Kraus sets, and phase tables.
//!
//! One object per file: explicit `kind` and `dim`, entries as row-major
//! `[re, im]` pairs. JSON floats use the shortest round-trip representation,
//! so write-then-read reproduces every entry bit for bit and the fixture
//! files double as readable copies of the matrices they hold.

use crate::bipartite::{BipartiteError, PhaseMatrix};
use crate::channels::{ChannelError, KrausChannel};
use crate::linalg::{Complex, ComplexMatrix, LinalgError};
use crate::states::{DensityMatrix, StateError};
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("validation error: {0}")]
    State(#[from] StateError),

    #[error("validation error: {0}")]
    Channel(#[from] ChannelError),

    #[error("validation error: {0}")]
    Phase(#[from] BipartiteError),

    #[error("validation error: {0}")]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixKind {
    #[serde(rename = "state")]
    State,
    #[serde(rename = "kraus-set")]
    KrausSet,
    #[serde(rename = "phase-matrix")]
    PhaseMatrix,
}

/// On-disk form of a state, Kraus set, or phase table.
///
/// - `state`: `dim` = d, entries are the d×d density matrix.
/// - `kraus-set`: `dim` = d, entries concatenate m row-major d×d operators.
/// - `phase-matrix`: `dim` = total entry count d_a·d_b, `rows` = d_a,
///   entries carry the phases in their `re` component (`im` = 0).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub kind: MatrixKind,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixFile {
    pub fn from_state(rho: &DensityMatrix) -> Self {
        Self {
            kind: MatrixKind::State,
            dim: rho.dim(),
            rows: None,
            entries: rho.mat().entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        Self {
            kind: MatrixKind::State,
            dim: m.rows(),
            rows: None,
            entries: m.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn from_channel(ch: &KrausChannel) -> Self {
        let mut entries = Vec::with_capacity(ch.operators().len() * ch.dim() * ch.dim());
        for k in ch.operators() {
            entries.extend(k.entries().iter().map(|z| [z.re, z.im]));
        }
        Self { kind: MatrixKind::KrausSet, dim: ch.dim(), rows: None, entries }
    }

    pub fn from_phase_matrix(pm: &PhaseMatrix) -> Self {
        Self {
            kind: MatrixKind::PhaseMatrix,
            dim: pm.d_a() * pm.d_b(),
            rows: Some(pm.d_a()),
            entries: pm.flat().iter().map(|&t| [t, 0.0]).collect(),
        }
    }

    /// Checks that the entry count is consistent with `kind` and `dim`.
    pub fn validate_shape(&self) -> Result<(), FileError> {
        if self.dim == 0 {
            return Err(FileError::Shape("dim must be positive".into()));
        }
        match self.kind {
            MatrixKind::State => {
                if self.entries.len() != self.dim * self.dim {
                    return Err(FileError::Shape(format!(
                        "state of dim {} needs {} entries, found {}",
                        self.dim,
                        self.dim * self.dim,
                        self.entries.len()
                    )));
                }
            }
            MatrixKind::KrausSet => {
                let block = self.dim * self.dim;
                if self.entries.is_empty() || self.entries.len() % block != 0 {
                    return Err(FileError::Shape(format!(
                        "kraus-set of dim {} needs a positive multiple of {} entries, found {}",
                        self.dim,
                        block,
                        self.entries.len()
                    )));
                }
            }
            MatrixKind::PhaseMatrix => {
                let rows = self
                    .rows
                    .ok_or_else(|| FileError::Shape("phase-matrix requires rows".into()))?;
                if rows == 0 || self.dim % rows != 0 {
                    return Err(FileError::Shape(format!(
                        "phase-matrix rows {} must divide dim {}",
                        rows, self.dim
                    )));
                }
                if self.entries.len() != self.dim {
                    return Err(FileError::Shape(format!(
                        "phase-matrix of dim {} needs {} entries, found {}",
                        self.dim, self.dim,
                        self.entries.len()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_state(&self, tol: f64) -> Result<DensityMatrix, FileError> {
        self.validate_shape()?;
        if self.kind != MatrixKind::State {
            return Err(FileError::Shape("expected kind \"state\"".into()));
        }
        let entries = self.entries.iter().map(|[re, im]| Complex::new(*re, *im)).collect();
        let mat = ComplexMatrix::new(self.dim, self.dim, entries)?;
        Ok(DensityMatrix::new(mat, tol)?)
    }

    pub fn to_channel(&self, tol: f64) -> Result<KrausChannel, FileError> {
        self.validate_shape()?;
        if self.kind != MatrixKind::KrausSet {
            return Err(FileError::Shape("expected kind \"kraus-set\"".into()));
        }
        let block = self.dim * self.dim;
        let ops: Result<Vec<ComplexMatrix>, LinalgError> = self
            .entries
            .chunks(block)
            .map(|chunk| {
                let entries = chunk.iter().map(|[re, im]| Complex::new(*re, *im)).collect();
                ComplexMatrix::new(self.dim, self.dim, entries)
            })
            .collect();
        Ok(KrausChannel::new(ops?, tol)?)
    }

    pub fn to_phase_matrix(&self) -> Result<PhaseMatrix, FileError> {
        self.validate_shape()?;
        if self.kind != MatrixKind::PhaseMatrix {
            return Err(FileError::Shape("expected kind \"phase-matrix\"".into()));
        }
        let rows = self.rows.expect("shape validated");
        let cols = self.dim / rows;
        let theta: Vec<f64> = self.entries.iter().map(|[re, _]| *re).collect();
        Ok(PhaseMatrix::new(rows, cols, theta)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, FileError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|source| FileError::Io { path: path.display().to_string(), source })?;
        let file: MatrixFile = serde_json::from_str(&text)?;
        file.validate_shape()?;
        Ok(file)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), FileError> {
        let path = path.as_ref();
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text)
            .map_err(|source| FileError::Io { path: path.display().to_string(), source })
    }
}
