//! Which incoherent operations keep maximally coherent states maximally
//! coherent? Exactly the conjugations by a permuted diagonal unitary. The
//! classifier reads that structure off the Kraus operators and double-checks
//! its verdict with random MCS probes.
//!
//! Run with: cargo run --example channel_classification

use coherence_lab::channels::{classify_mcs_preservation, KrausChannel};
use coherence_lab::linalg::{Complex, ComplexMatrix};
use coherence_lab::sampling;
use coherence_lab::states::DEFAULT_TOL;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

fn show(label: &str, ch: &KrausChannel, rng: &mut ChaCha20Rng) {
    let class = classify_mcs_preservation(ch, 50, rng).expect("no classifier disagreement");
    print!(
        "{label:<34} incoherent: {:<5} unital: {:<5} preserves MCS: {:<5}",
        class.incoherent, class.unital, class.preserves_mcs
    );
    match class.witness {
        Some(w) => println!(" witness drop: {:.6} bits", w.coherence_drop),
        None => println!(),
    }
}

fn main() {
    let mut rng = ChaCha20Rng::seed_from_u64(1);

    // A permuted diagonal unitary: the preserving normal form.
    let mut u = ComplexMatrix::zeros(3, 3);
    u.set(1, 0, Complex::from_polar(1.0, 0.8));
    u.set(2, 1, Complex::from_polar(1.0, 2.3));
    u.set(0, 2, Complex::from_polar(1.0, 5.1));
    show("permuted diagonal unitary", &KrausChannel::from_unitary(u, DEFAULT_TOL).unwrap(), &mut rng);

    // Full dephasing: incoherent and unital, yet it flattens every MCS to I/d.
    show("full dephasing (d = 3)", &KrausChannel::dephasing(3), &mut rng);

    // An even mixture of two permutations: each term is fine alone, the mix is not.
    let s = Complex::new(1.0 / 2f64.sqrt(), 0.0);
    let k1 = ComplexMatrix::identity(2).scale(s);
    let mut swap = ComplexMatrix::zeros(2, 2);
    swap.set(0, 1, s);
    swap.set(1, 0, s);
    show("mix of identity and swap", &KrausChannel::with_default_tol(vec![k1, swap]).unwrap(), &mut rng);

    // Random members of the structured families.
    show("random DΠ unitary (d = 4)", &sampling::random_perm_diag_unitary_channel(4, &mut rng.clone()), &mut rng);
    show(
        "random 3-term incoherent unital",
        &sampling::random_multi_term_incoherent_channel(3, 3, &mut rng.clone()),
        &mut rng,
    );

    // A coherent channel for contrast: the preservation question is out of
    // scope, so no witness is attached.
    let h = 1.0 / 2f64.sqrt();
    let hadamard = ComplexMatrix::from_rows(&[
        vec![Complex::new(h, 0.0), Complex::new(h, 0.0)],
        vec![Complex::new(h, 0.0), Complex::new(-h, 0.0)],
    ])
    .unwrap();
    show("Hadamard (coherent)", &KrausChannel::from_unitary(hadamard, DEFAULT_TOL).unwrap(), &mut rng);
}
