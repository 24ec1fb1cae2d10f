//! Library-side implementations of the CLI verbs. The binary only parses
//! arguments, calls one of these, prints the certificate, and maps the error
//! to an exit code.

use crate::bipartite::{self, BipartiteError};
use crate::cert::Certificate;
use crate::channels::{classify_mcs_preservation, ChannelError, KrausChannel};
use crate::coherence::{c_l1, c_re, is_mcs, make_mcs, DEFAULT_MCS_TOL};
use crate::io::{FileError, MatrixFile};
use crate::states::{DensityMatrix, DEFAULT_TOL};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Exit codes: 0 success, 2 validation failure, 3 classifier disagreement,
/// 1 everything else.
#[derive(Debug, Error)]
pub enum CommandError {
    #[error("{0}")]
    Validation(String),

    #[error("{0}")]
    Classifier(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Validation(_) => 2,
            CommandError::Classifier(_) => 3,
            _ => 1,
        }
    }
}

impl From<FileError> for CommandError {
    fn from(e: FileError) -> Self {
        match e {
            FileError::Io { path, source } => {
                CommandError::Io(std::io::Error::new(source.kind(), format!("{path}: {source}")))
            }
            other => CommandError::Validation(other.to_string()),
        }
    }
}

impl From<ChannelError> for CommandError {
    fn from(e: ChannelError) -> Self {
        match e {
            ChannelError::ClassifierDisagreement { .. } => CommandError::Classifier(e.to_string()),
            other => CommandError::Validation(other.to_string()),
        }
    }
}

impl From<BipartiteError> for CommandError {
    fn from(e: BipartiteError) -> Self {
        match e {
            BipartiteError::OutOfRange { .. } => CommandError::OutOfRange(e.to_string()),
            other => CommandError::Validation(other.to_string()),
        }
    }
}

/// Shared run options resolved by the binary.
#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub tol: f64,
    pub seed: u64,
    pub samples: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { tol: DEFAULT_TOL, seed: 0, samples: 50 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    RelativeEntropy,
    L1,
}

fn load_state(path: &Path, tol: f64) -> Result<DensityMatrix, CommandError> {
    Ok(MatrixFile::load(path)?.to_state(tol)?)
}

fn coherence_verdicts(cert: &mut Certificate, rho: &DensityMatrix) {
    let report = is_mcs(rho, DEFAULT_MCS_TOL);
    cert.verdict_int("dim", rho.dim());
    cert.verdict_real("c_re", report.value);
    cert.verdict_real("max_possible", report.max_possible);
    cert.verdict_bool("is_mcs", report.is_mcs);
}

/// `coherence <state-file>`: value of the chosen measure, the log₂ d bound,
/// and the MCS verdict.
pub fn cmd_coherence(
    path: &Path,
    measure: Measure,
    opts: RunOptions,
) -> Result<Certificate, CommandError> {
    let rho = load_state(path, opts.tol)?;
    let measure_name = match measure {
        Measure::RelativeEntropy => "re",
        Measure::L1 => "l1",
    };
    let mut cert = Certificate::new(
        format!("coherence --measure {} {}", measure_name, path.display()),
        opts.tol,
    );
    cert.record_input(path)?;
    coherence_verdicts(&mut cert, &rho);
    let value = match measure {
        Measure::RelativeEntropy => c_re(&rho),
        Measure::L1 => c_l1(&rho),
    };
    cert.verdict_text("measure", measure_name);
    cert.verdict_real("value", value);
    Ok(cert)
}

/// `superadd <state-file> --da --db`: both sides of the super-additivity
/// inequality and the product verdict.
pub fn cmd_superadd(
    path: &Path,
    d_a: usize,
    d_b: usize,
    opts: RunOptions,
) -> Result<Certificate, CommandError> {
    let rho = load_state(path, opts.tol)?;
    let report = bipartite::superadditivity_report(&rho, d_a, d_b)?;
    let mut cert = Certificate::new(
        format!("superadd --da {} --db {} {}", d_a, d_b, path.display()),
        opts.tol,
    );
    cert.record_input(path)?;
    cert.verdict_real("c_ab", report.c_ab);
    cert.verdict_real("c_a", report.c_a);
    cert.verdict_real("c_b", report.c_b);
    cert.verdict_real("gap", report.gap);
    cert.verdict_bool("equality", report.equality);
    cert.verdict_bool("is_product", report.is_product);
    cert.verdict_real("product_distance", report.product_distance);
    Ok(cert)
}

/// `counterexample --theta`: the 2×3 linear-phase construction, its gap, and
/// the displayed reduced states as witnesses.
pub fn cmd_counterexample(
    theta: f64,
    out: Option<&Path>,
    opts: RunOptions,
) -> Result<Certificate, CommandError> {
    let (rho, report) = bipartite::counterexample_23(theta)?;
    let mut cert = Certificate::new(format!("counterexample --theta {theta}"), opts.tol);
    cert.verdict_real("theta", theta);
    cert.verdict_real("c_ab", report.c_ab);
    cert.verdict_real("c_a", report.c_a);
    cert.verdict_real("c_b", report.c_b);
    cert.verdict_real("gap", report.gap);
    cert.verdict_bool("equality", report.equality);
    cert.verdict_bool("is_product", report.is_product);
    cert.verdict_real("product_distance", report.product_distance);
    cert.witness("rho_a", MatrixFile::from_matrix(&bipartite::counterexample_reduced_a(theta)));
    cert.witness("rho_b", MatrixFile::from_matrix(&bipartite::counterexample_reduced_b(theta)));
    if let Some(out) = out {
        MatrixFile::from_state(&rho).save(out)?;
        cert.verdict_text("state_file", out.display().to_string());
    }
    Ok(cert)
}

/// `entangled-mcs --d`: the DFT-phase state that is maximally coherent on
/// the d² system and maximally entangled across the cut.
pub fn cmd_entangled_mcs(
    d: usize,
    out: Option<&Path>,
    opts: RunOptions,
) -> Result<Certificate, CommandError> {
    if d < 2 {
        return Err(CommandError::OutOfRange(format!("entangled MCS needs d >= 2, got {d}")));
    }
    let rho = bipartite::make_mcs_max_entangled(d);
    let report = is_mcs(&rho, DEFAULT_MCS_TOL);
    let (rho_a, _) = crate::states::reduced_states(&rho, d, d)
        .map_err(|e| CommandError::Validation(e.to_string()))?;
    let target = crate::linalg::ComplexMatrix::identity(d)
        .scale(crate::linalg::Complex::new(1.0 / d as f64, 0.0));
    let residual = rho_a.mat().frobenius_distance(&target).expect("same dims");

    let mut cert = Certificate::new(format!("entangled-mcs --d {d}"), opts.tol);
    cert.verdict_int("d", d);
    cert.verdict_real("c_re", report.value);
    cert.verdict_real("max_possible", report.max_possible);
    cert.verdict_bool("is_mcs", report.is_mcs);
    cert.verdict_real("reduced_residual", residual);
    cert.verdict_bool("maximally_entangled", residual <= opts.tol);
    if let Some(out) = out {
        MatrixFile::from_state(&rho).save(out)?;
        cert.verdict_text("state_file", out.display().to_string());
    }
    Ok(cert)
}

/// `identity-decomp --d`: the d maximally coherent states summing to the
/// identity; optionally written out as `{prefix}-0.json`, ….
pub fn cmd_identity_decomp(
    d: usize,
    out_prefix: Option<&Path>,
    opts: RunOptions,
) -> Result<Certificate, CommandError> {
    if d < 1 {
        return Err(CommandError::OutOfRange("identity decomposition needs d >= 1".into()));
    }
    let states = crate::channels::identity_mcs_decomposition(d);
    let residual = crate::channels::identity_decomposition_residual(&states);
    let all_mcs = states
        .iter()
        .all(|s| is_mcs(&s.to_density(opts.tol), DEFAULT_MCS_TOL).is_mcs);

    let mut cert = Certificate::new(format!("identity-decomp --d {d}"), opts.tol);
    cert.verdict_int("d", d);
    cert.verdict_real("residual", residual);
    cert.verdict_bool("all_components_mcs", all_mcs);
    if let Some(prefix) = out_prefix {
        for (j, s) in states.iter().enumerate() {
            let path = numbered_path(prefix, j);
            MatrixFile::from_state(&s.to_density(opts.tol)).save(&path)?;
        }
        cert.verdict_text("state_files", format!("{}-0..{}", prefix.display(), d - 1));
    }
    Ok(cert)
}

fn numbered_path(prefix: &Path, index: usize) -> PathBuf {
    let mut name = prefix.as_os_str().to_os_string();
    name.push(format!("-{index}.json"));
    PathBuf::from(name)
}

/// `channel <kraus-file>`: incoherence and unitality checks, and with
/// `--classify` the full MCS-preservation verdict with its Monte-Carlo
/// cross-validation.
pub fn cmd_channel(
    path: &Path,
    classify: bool,
    opts: RunOptions,
) -> Result<Certificate, CommandError> {
    let ch: KrausChannel = MatrixFile::load(path)?.to_channel(opts.tol)?;
    let mut cert = Certificate::new(
        format!(
            "channel{} --samples {} --seed {} {}",
            if classify { " --classify" } else { "" },
            opts.samples,
            opts.seed,
            path.display()
        ),
        opts.tol,
    );
    cert.record_input(path)?;
    cert.verdict_int("dim", ch.dim());
    cert.verdict_int("kraus_terms", ch.operators().len());
    cert.verdict_real("completeness_residual", ch.completeness_residual());

    let inc = crate::channels::is_incoherent(&ch);
    cert.verdict_bool("incoherent", inc.incoherent);
    cert.verdict_bool("unital", crate::channels::is_unital(&ch));
    cert.verdict_real("unitality_residual", ch.unitality_residual());
    if !inc.incoherent {
        let v = &inc.violations[0];
        cert.verdict_text(
            "incoherence_violation",
            format!("operator {} column {} has {} nonzeros", v.operator, v.column, v.nonzero_rows.len()),
        );
    }

    if classify {
        let mut rng = ChaCha20Rng::seed_from_u64(opts.seed);
        let class = classify_mcs_preservation(&ch, opts.samples, &mut rng)?;
        cert.verdict_bool("preserves_mcs", class.preserves_mcs);
        cert.verdict_bool("factors_found", class.factors.is_some());
        if let Some(factors) = &class.factors {
            for (n, f) in factors.iter().enumerate() {
                let perm: Vec<String> = f.perm.iter().map(|p| p.to_string()).collect();
                cert.verdict_text(&format!("factor_{n}_perm"), perm.join(","));
                cert.verdict_real(&format!("factor_{n}_modulus"), f.scale.norm());
            }
        }
        if let Some(witness) = &class.witness {
            cert.verdict_real("witness_coherence_drop", witness.coherence_drop);
            cert.witness("witness_input", MatrixFile::from_state(&witness.input));
            cert.witness("witness_output", MatrixFile::from_state(&witness.output));
        }
    }
    Ok(cert)
}

/// `mcs-make`: phase vector → maximally coherent state file.
pub fn cmd_mcs_make(
    d: Option<usize>,
    phases: Option<&[f64]>,
    phases_file: Option<&Path>,
    out: &Path,
    opts: RunOptions,
) -> Result<Certificate, CommandError> {
    let theta: Vec<f64> = match (phases, phases_file) {
        (Some(p), None) => p.to_vec(),
        (None, Some(file)) => MatrixFile::load(file)?.to_phase_matrix()?.flat().to_vec(),
        (None, None) => {
            let d = d.ok_or_else(|| {
                CommandError::OutOfRange("mcs-make needs --d, --phases, or --phases-file".into())
            })?;
            vec![0.0; d]
        }
        (Some(_), Some(_)) => {
            return Err(CommandError::OutOfRange(
                "--phases and --phases-file are mutually exclusive".into(),
            ))
        }
    };
    if let Some(d) = d {
        if d != theta.len() {
            return Err(CommandError::OutOfRange(format!(
                "--d {} disagrees with {} phases",
                d,
                theta.len()
            )));
        }
    }
    if theta.is_empty() {
        return Err(CommandError::OutOfRange("empty phase vector".into()));
    }

    let rho = make_mcs(&theta);
    let mut cert = Certificate::new(
        format!("mcs-make --d {} --out {}", theta.len(), out.display()),
        opts.tol,
    );
    if let Some(file) = phases_file {
        cert.record_input(file)?;
    }
    coherence_verdicts(&mut cert, &rho);
    MatrixFile::from_state(&rho).save(out)?;
    cert.verdict_text("state_file", out.display().to_string());
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    #[test]
    fn coherence_command_on_uniform_state() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("uniform-4.json");
        MatrixFile::from_state(&make_mcs(&[0.0; 4])).save(&path).unwrap();

        let cert = cmd_coherence(&path, Measure::RelativeEntropy, RunOptions::default()).unwrap();
        assert_eq!(cert.verdicts["value"], "2.00000000000000e0");
        assert_eq!(cert.verdicts["is_mcs"], "true");
        assert_eq!(cert.inputs.len(), 1);
    }

    #[test]
    fn counterexample_command_reports_zero_gap() {
        let cert =
            cmd_counterexample(std::f64::consts::PI / 3.0, None, RunOptions::default()).unwrap();
        let gap: f64 = cert.verdicts["gap"].parse().unwrap();
        assert!(gap.abs() < 1e-9);
        assert!(cert.witnesses.as_ref().unwrap().contains_key("rho_a"));
    }

    #[test]
    fn counterexample_rejects_bad_theta() {
        let err = cmd_counterexample(0.0, None, RunOptions::default()).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn mcs_make_then_coherence_round_trip() {
        let dir = tempdir().unwrap();
        let out = dir.path().join("state.json");
        let cert = cmd_mcs_make(
            None,
            Some(&[0.0, 1.0, 2.0]),
            None,
            &out,
            RunOptions::default(),
        )
        .unwrap();
        assert_eq!(cert.verdicts["is_mcs"], "true");

        let cert2 = cmd_coherence(&out, Measure::L1, RunOptions::default()).unwrap();
        let value: f64 = cert2.verdicts["value"].parse().unwrap();
        assert!((value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn identity_decomp_writes_numbered_files() {
        let dir = tempdir().unwrap();
        let prefix = dir.path().join("part");
        let cert = cmd_identity_decomp(2, Some(&prefix), RunOptions::default()).unwrap();
        assert_eq!(cert.verdicts["all_components_mcs"], "true");
        assert!(dir.path().join("part-0.json").exists());
        assert!(dir.path().join("part-1.json").exists());
    }
}
