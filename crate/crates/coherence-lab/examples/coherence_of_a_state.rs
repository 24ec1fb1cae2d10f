//! Evaluate the coherence measures on a handful of qubit and qutrit states.
//!
//! Run with: cargo run --example coherence_of_a_state

use coherence_lab::coherence::{c_l1, c_re, is_mcs, make_mcs, DEFAULT_MCS_TOL};
use coherence_lab::states::{DensityMatrix, IncoherentState, DEFAULT_TOL};

fn show(label: &str, rho: &DensityMatrix) {
    let report = is_mcs(rho, DEFAULT_MCS_TOL);
    println!(
        "{label:<28} C_RE = {:.6} / {:.6} bits   C_l1 = {:.6}   MCS: {}",
        report.value,
        report.max_possible,
        c_l1(rho),
        report.is_mcs
    );
}

fn main() {
    // The uniform superposition carries the full log2(d) bits.
    show("uniform qubit |+>", &make_mcs(&[0.0, 0.0]));
    show("uniform qutrit", &make_mcs(&[0.0, 0.0, 0.0]));

    // Phases do not change the measure: still maximally coherent.
    show("phased qutrit", &make_mcs(&[0.0, 2.1, 4.4]));

    // Diagonal states carry none.
    let diagonal = IncoherentState::new(vec![0.2, 0.5, 0.3], DEFAULT_TOL)
        .unwrap()
        .to_density(DEFAULT_TOL);
    show("diagonal qutrit", &diagonal);

    // Mixing destroys coherence: half MCS, half ground state.
    let mixed = coherence_lab::states::Ensemble::new(
        vec![0.5, 0.5],
        vec![make_mcs(&[0.0, 0.0]), DensityMatrix::basis_state(2, 0)],
        DEFAULT_TOL,
    )
    .unwrap()
    .mixture(DEFAULT_TOL);
    show("half |+>, half |0>", &mixed);
    println!("\nclosed form for the mixture: C_RE = {:.12} bits", c_re(&mixed));
}
