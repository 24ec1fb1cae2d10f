//! The identity operator splits into d maximally coherent projectors with
//! discrete-Fourier phases — the structural fact behind the unitality of
//! MCS-preserving operations.
//!
//! Run with: cargo run --example identity_from_mcs

use coherence_lab::channels::{identity_decomposition_residual, identity_mcs_decomposition};
use coherence_lab::coherence::{is_mcs, DEFAULT_MCS_TOL};
use coherence_lab::states::DEFAULT_TOL;

fn main() {
    for d in 1..=8 {
        let states = identity_mcs_decomposition(d);
        let residual = identity_decomposition_residual(&states);
        let all_mcs = states
            .iter()
            .all(|s| is_mcs(&s.to_density(DEFAULT_TOL), DEFAULT_MCS_TOL).is_mcs);
        println!("d = {d}: ‖Σ|φ_j⟩⟨φ_j| − I‖_F = {residual:.3e}, every component MCS: {all_mcs}");
    }

    println!("\nthe d = 2 decomposition is the |±⟩ pair:");
    for (j, s) in identity_mcs_decomposition(2).iter().enumerate() {
        let amps: Vec<String> = s.amplitudes().iter().map(|a| format!("{:+.4}", a.re)).collect();
        println!("  |φ_{j}⟩ amplitudes: [{}]", amps.join(", "));
    }
}
