//! End-to-end tests of the `coherence-lab` binary: certificates, file
//! round-trips, determinism under a fixed seed, and exit codes.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coherence-lab"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn certificate(output: &Output) -> Value {
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    serde_json::from_slice(&output.stdout).expect("stdout is a JSON certificate")
}

fn verdict<'a>(cert: &'a Value, key: &str) -> &'a str {
    cert["verdicts"][key].as_str().unwrap_or_else(|| panic!("missing verdict {key}"))
}

fn verdict_f64(cert: &Value, key: &str) -> f64 {
    verdict(cert, key).parse().expect("verdict parses as real")
}

#[test]
fn coherence_of_uniform_state() {
    let out = run(&["coherence", fixture("uniform-4.json").to_str().unwrap()]);
    let cert = certificate(&out);
    assert_eq!(verdict(&cert, "value"), "2.00000000000000e0");
    assert_eq!(verdict(&cert, "is_mcs"), "true");
    assert_eq!(verdict(&cert, "max_possible"), "2.00000000000000e0");
    assert_eq!(cert["inputs"].as_object().unwrap().len(), 1);
}

#[test]
fn coherence_of_diagonal_state_is_zero() {
    let out = run(&["coherence", fixture("diag-state.json").to_str().unwrap()]);
    let cert = certificate(&out);
    assert!(verdict_f64(&cert, "value").abs() < 1e-12);
    assert_eq!(verdict(&cert, "is_mcs"), "false");
}

#[test]
fn coherence_of_perturbed_mcs_falls_short() {
    let out = run(&["coherence", fixture("perturbed-mcs.json").to_str().unwrap()]);
    let cert = certificate(&out);
    assert_eq!(verdict(&cert, "is_mcs"), "false");
    let value = verdict_f64(&cert, "value");
    assert!(value < 2.0 && value > 1.9, "value {value}");
}

#[test]
fn l1_measure_flag() {
    let out = run(&["coherence", "--measure", "l1", fixture("uniform-4.json").to_str().unwrap()]);
    let cert = certificate(&out);
    assert_eq!(verdict(&cert, "measure"), "l1");
    assert!((verdict_f64(&cert, "value") - 3.0).abs() < 1e-9);
}

#[test]
fn superadd_on_product_of_plus_states() {
    let out = run(&[
        "superadd",
        "--da",
        "2",
        "--db",
        "2",
        fixture("uniform-4.json").to_str().unwrap(),
    ]);
    let cert = certificate(&out);
    assert!((verdict_f64(&cert, "c_ab") - 2.0).abs() < 1e-9);
    assert!((verdict_f64(&cert, "c_a") - 1.0).abs() < 1e-9);
    assert!(verdict_f64(&cert, "gap").abs() < 1e-9);
    assert_eq!(verdict(&cert, "is_product"), "true");
}

#[test]
fn superadd_on_bell_state() {
    let out = run(&[
        "superadd",
        "--da",
        "2",
        "--db",
        "2",
        fixture("bell-state.json").to_str().unwrap(),
    ]);
    let cert = certificate(&out);
    assert!((verdict_f64(&cert, "gap") - 1.0).abs() < 1e-9);
    assert_eq!(verdict(&cert, "equality"), "false");
    assert_eq!(verdict(&cert, "is_product"), "false");
}

#[test]
fn counterexample_certificate_at_pi_over_three() {
    let out = run(&["counterexample", "--theta", "1.0471975511965976"]);
    let cert = certificate(&out);
    assert!(verdict_f64(&cert, "gap").abs() < 1e-9);
    assert!((verdict_f64(&cert, "c_ab") - 6f64.log2()).abs() < 1e-9);
    assert!(cert["witnesses"]["rho_a"]["dim"].as_u64() == Some(2));
    assert!(cert["witnesses"]["rho_b"]["dim"].as_u64() == Some(3));
}

#[test]
fn entangled_mcs_writes_a_valid_state() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("emax-3.json");
    let out = run(&["entangled-mcs", "--d", "3", "--out", out_path.to_str().unwrap()]);
    let cert = certificate(&out);
    assert_eq!(verdict(&cert, "is_mcs"), "true");
    assert!(verdict_f64(&cert, "reduced_residual") <= 1e-9);
    assert_eq!(verdict(&cert, "maximally_entangled"), "true");

    // The emitted file is a readable state with 2·log2(3) bits of coherence.
    let again = run(&["coherence", out_path.to_str().unwrap()]);
    let cert2 = certificate(&again);
    assert!((verdict_f64(&cert2, "value") - 2.0 * 3f64.log2()).abs() < 1e-9);
}

#[test]
fn identity_decomp_emits_states_summing_to_identity() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("part");
    let out = run(&["identity-decomp", "--d", "2", "--out", prefix.to_str().unwrap()]);
    let cert = certificate(&out);
    assert!(verdict_f64(&cert, "residual") < 1e-12);
    assert_eq!(verdict(&cert, "all_components_mcs"), "true");
    assert!(dir.path().join("part-0.json").exists());
    assert!(dir.path().join("part-1.json").exists());
}

#[test]
fn channel_classification_verdicts() {
    let out = run(&["channel", "--classify", fixture("perm-diag-unitary-3.json").to_str().unwrap()]);
    let cert = certificate(&out);
    assert_eq!(verdict(&cert, "incoherent"), "true");
    assert_eq!(verdict(&cert, "unital"), "true");
    assert_eq!(verdict(&cert, "preserves_mcs"), "true");
    assert_eq!(verdict(&cert, "factor_0_perm"), "1,2,0");

    let out = run(&["channel", "--classify", fixture("dephasing-3.json").to_str().unwrap()]);
    let cert = certificate(&out);
    assert_eq!(verdict(&cert, "preserves_mcs"), "false");
    let drop = verdict_f64(&cert, "witness_coherence_drop");
    assert!((drop - 3f64.log2()).abs() < 1e-9, "dephasing drops all coherence, got {drop}");
    assert!(cert["witnesses"]["witness_output"]["dim"].as_u64() == Some(3));

    let out = run(&["channel", "--classify", fixture("two-perm-mix-2.json").to_str().unwrap()]);
    let cert = certificate(&out);
    assert_eq!(verdict(&cert, "incoherent"), "true");
    assert_eq!(verdict(&cert, "unital"), "true");
    assert_eq!(verdict(&cert, "preserves_mcs"), "false");
    assert!(verdict_f64(&cert, "witness_coherence_drop") > 1e-6);
}

#[test]
fn classify_is_deterministic_for_a_fixed_seed() {
    let path = fixture("dephasing-3.json");
    let args = ["channel", "--classify", "--seed", "5", path.to_str().unwrap()];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "same seed must reproduce the certificate");
}

#[test]
fn mcs_make_from_phases_file_round_trips_bit_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("state.json");
    let out = run(&[
        "mcs-make",
        "--phases-file",
        fixture("phases-2x3.json").to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    let cert = certificate(&out);
    assert_eq!(verdict(&cert, "is_mcs"), "true");

    // Reading the emitted document and re-serializing it reproduces the
    // original bytes: every f64 survives the JSON round trip.
    let bytes = std::fs::read(&out_path).unwrap();
    let parsed: coherence_lab::io::MatrixFile = serde_json::from_slice(&bytes).unwrap();
    let mut rendered = serde_json::to_string_pretty(&parsed).unwrap();
    rendered.push('\n');
    assert_eq!(bytes, rendered.into_bytes());
}

#[test]
fn mcs_make_inline_phases() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("state.json");
    let out = run(&[
        "mcs-make",
        "--phases",
        "0,1.5707963267948966,3.141592653589793",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    let cert = certificate(&out);
    assert_eq!(verdict(&cert, "dim"), "3");
    assert_eq!(verdict(&cert, "is_mcs"), "true");
}

#[test]
fn exit_codes() {
    // 2: file parses but fails validation (wrong trace).
    let dir = tempfile::tempdir().unwrap();
    let bad_state = dir.path().join("bad.json");
    std::fs::write(
        &bad_state,
        r#"{"kind":"state","dim":2,"entries":[[0.9,0.0],[0.0,0.0],[0.0,0.0],[0.9,0.0]]}"#,
    )
    .unwrap();
    let out = run(&["coherence", bad_state.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", String::from_utf8_lossy(&out.stderr));

    // 2: malformed JSON.
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "not json").unwrap();
    let out = run(&["coherence", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // 1: missing file.
    let out = run(&["coherence", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // 1: parameter out of range.
    let out = run(&["counterexample", "--theta", "0.0"]);
    assert_eq!(out.status.code(), Some(1));

    // 0: success.
    let out = run(&["coherence", fixture("diag-state.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn tolerance_env_and_flag() {
    // A state with its trace deliberately off by 1e-10: inside the default
    // 1e-9 tolerance, outside a 1e-12 tolerance set via the environment.
    // The --tol flag takes precedence over the environment.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("near-valid.json");
    std::fs::write(
        &path,
        r#"{"kind":"state","dim":2,"entries":[[0.3,0.0],[0.0,0.0],[0.0,0.0],[0.7000000001,0.0]]}"#,
    )
    .unwrap();

    let out = run(&["coherence", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "default tolerance accepts the 1e-10 offset");

    let out = bin()
        .args(["coherence", path.to_str().unwrap()])
        .env("COHERENCE_LAB_TOL", "1e-12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let out = bin()
        .args(["coherence", "--tol", "1e-9", path.to_str().unwrap()])
        .env("COHERENCE_LAB_TOL", "1e-12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}
