//! Not every coherence measure singles out the uniform superposition: the
//! piecewise measure C_f on d = 4 is maximized both by every interior
//! probability vector and by the uniform three-level boundary point.
//!
//! Run with: cargo run --example cf_measure_example

use coherence_lab::coherence::{cf_measure, CfInput};
use coherence_lab::states::DEFAULT_TOL;

fn main() {
    let log2_3 = 3f64.log2();
    println!("ceiling of C_f: log2(3) = {log2_3:.12}\n");

    let cases = [
        ("interior, skewed", [0.4, 0.3, 0.2, 0.1]),
        ("interior, near-uniform", [0.26, 0.25, 0.25, 0.24]),
        ("uniform on three levels", [1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0]),
        ("skewed boundary", [0.6, 0.3, 0.1, 0.0]),
        ("deterministic", [1.0, 0.0, 0.0, 0.0]),
    ];
    for (label, x) in cases {
        let input = CfInput::new(x, DEFAULT_TOL).unwrap();
        let value = cf_measure(&input);
        let maximal = (value - log2_3).abs() < 1e-12;
        println!("{label:<26} x = {x:?}  →  f = {value:.12}{}", if maximal { "  (maximal)" } else { "" });
    }

    println!("\ntwo distinct maximizer families: the whole interior (least entry nonzero)");
    println!("and the uniform three-level point on the boundary, where f is Shannon entropy.");
}
