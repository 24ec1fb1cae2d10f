//! Coherence measures and the structure of maximally coherent states.
//!
//! The relative-entropy measure C_RE(ρ) = S(ρ_diag) − S(ρ) is the primary
//! quantity. A state is maximally coherent (MCS) exactly when it is the
//! diagonal-unitary orbit of the uniform superposition: pure, with every
//! amplitude of modulus 1/√d. [`is_mcs`] tests that structure directly and
//! reports the witness phases when it holds. [`c_re_via_minimization`] is the
//! definitional min over incoherent states, kept as an independent
//! cross-check of the closed form.

use crate::states::{
    dephase, relative_entropy, shannon_entropy, von_neumann_entropy, DensityMatrix,
    IncoherentState, PureState, StateError, DEFAULT_TOL,
};
use std::f64::consts::TAU;
use thiserror::Error;

/// Default structural tolerance for MCS detection, applied to both purity
/// (largest eigenvalue ≥ 1 − tol) and modulus uniformity (||α_k|² − 1/d| ≤ tol).
pub const DEFAULT_MCS_TOL: f64 = 1e-7;

/// Entries of a C_f input below this are clipped to exact zero before the
/// least-element branch is decided.
pub const CF_ZERO_CLIP: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum CoherenceError {
    #[error("invalid C_f input: {0}")]
    InvalidCfInput(String),

    #[error(transparent)]
    State(#[from] StateError),
}

/// Outcome of an MCS detection run.
#[derive(Debug, Clone)]
pub struct CoherenceReport {
    /// C_RE(ρ) in bits.
    pub value: f64,
    /// log₂ d, the ceiling of the measure at this dimension.
    pub max_possible: f64,
    /// Whether the state passed the structural MCS test.
    pub is_mcs: bool,
    /// Phases θ_k of the diagonal unitary carrying |ψ_d⟩ onto the state,
    /// gauge-fixed to θ_1 = 0 and wrapped into [0, 2π). Present iff `is_mcs`.
    pub witness_phases: Option<Vec<f64>>,
}

/// Relative entropy of coherence, closed form: C_RE(ρ) = S(ρ_diag) − S(ρ).
pub fn c_re(rho: &DensityMatrix) -> f64 {
    let raw = dephase(rho).shannon_entropy() - von_neumann_entropy(rho);
    debug_assert!(raw > -1e-9, "coherence came out {raw:.3e} < 0");
    raw.max(0.0)
}

/// l₁ coherence: Σ_{i≠j} |ρ_ij|.
pub fn c_l1(rho: &DensityMatrix) -> f64 {
    let d = rho.dim();
    let mut acc = 0.0;
    for i in 0..d {
        for j in 0..d {
            if i != j {
                acc += rho.mat().get(i, j).norm();
            }
        }
    }
    acc
}

/// Definitional relative entropy of coherence: min over incoherent σ of
/// S(ρ‖σ), located numerically.
///
/// A strictly interior simplex grid of resolution `grid` seeds a projected
/// coordinate descent that moves probability between pairs of entries with a
/// golden-section line search. This is deliberately a brute search with no
/// knowledge of where the optimum lands, so it can serve as an oracle for
/// the closed form.
pub fn c_re_via_minimization(rho: &DensityMatrix, grid: usize) -> f64 {
    let d = rho.dim();
    if d == 1 {
        return 0.0;
    }
    let g = grid.max(d + 1);

    let objective = |q: &[f64]| -> f64 {
        let sum: f64 = q.iter().sum();
        let normalized: Vec<f64> = q.iter().map(|&x| x / sum).collect();
        let sigma = IncoherentState::new(normalized, rho.tol())
            .expect("search iterates stay on the simplex")
            .to_density(rho.tol());
        relative_entropy(rho, &sigma).expect("same dimension")
    };

    // Coarse pass over interior grid points n_i ≥ 1, Σ n_i = g.
    let mut best_q = vec![1.0 / d as f64; d];
    let mut best = objective(&best_q);
    let mut composition = vec![1usize; d];
    enumerate_compositions(g - d, 0, &mut composition, &mut |comp| {
        let q: Vec<f64> = comp.iter().map(|&n| n as f64 / g as f64).collect();
        let val = objective(&q);
        if val < best {
            best = val;
            best_q = q;
        }
    });

    // Projected coordinate descent over transfer directions e_i − e_j.
    const FLOOR: f64 = 1e-10;
    const MAX_SWEEPS: usize = 120;
    for _ in 0..MAX_SWEEPS {
        let before = best;
        for i in 0..d {
            for j in (i + 1)..d {
                let lo = -(best_q[i] - FLOOR);
                let hi = best_q[j] - FLOOR;
                if hi <= lo {
                    continue;
                }
                let eval = |t: f64| {
                    let mut q = best_q.clone();
                    q[i] += t;
                    q[j] -= t;
                    objective(&q)
                };
                let (t, val) = golden_section(lo, hi, 1e-11, eval);
                if val < best {
                    best = val;
                    best_q[i] += t;
                    best_q[j] -= t;
                }
            }
        }
        if before - best < 1e-13 {
            break;
        }
    }
    best
}

fn enumerate_compositions(
    remaining: usize,
    index: usize,
    composition: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    let d = composition.len();
    if index == d - 1 {
        composition[index] += remaining;
        visit(composition);
        composition[index] -= remaining;
        return;
    }
    for extra in 0..=remaining {
        composition[index] += extra;
        enumerate_compositions(remaining - extra, index + 1, composition, visit);
        composition[index] -= extra;
    }
}

fn golden_section(mut lo: f64, mut hi: f64, width: f64, mut f: impl FnMut(f64) -> f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > width {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let mid = 0.5 * (lo + hi);
    (mid, f(mid))
}

/// Structural MCS test: rank one within `mcs_tol` and uniform amplitude
/// moduli within `mcs_tol`. The report always carries C_RE(ρ); witness
/// phases are attached only on success.
pub fn is_mcs(rho: &DensityMatrix, mcs_tol: f64) -> CoherenceReport {
    let d = rho.dim();
    let max_possible = (d as f64).log2();
    let value = c_re(rho);

    let top = rho.spectrum().eigenvalues()[0];
    let pure_enough = top >= 1.0 - mcs_tol;

    let mut uniform = false;
    let mut phases = None;
    if pure_enough {
        let alpha = rho.spectrum().eigenvector(0);
        let target = 1.0 / d as f64;
        uniform = alpha.iter().all(|a| (a.norm_sqr() - target).abs() <= mcs_tol);
        if uniform {
            let gauge = alpha[0].arg();
            let theta: Vec<f64> = alpha
                .iter()
                .map(|a| {
                    let mut t = (a.arg() - gauge) % TAU;
                    if t < 0.0 {
                        t += TAU;
                    }
                    t
                })
                .collect();
            phases = Some(theta);
        }
    }

    CoherenceReport { value, max_possible, is_mcs: pure_enough && uniform, witness_phases: phases }
}

/// Builds the MCS U|ψ_d⟩⟨ψ_d|U† with U = diag(e^{iθ_1}, …, e^{iθ_d}).
pub fn make_mcs(theta: &[f64]) -> DensityMatrix {
    PureState::from_phases(theta).to_density(DEFAULT_TOL)
}

/// Probability 4-vector input of the example measure C_f.
#[derive(Debug, Clone, Copy)]
pub struct CfInput {
    x: [f64; 4],
}

impl CfInput {
    pub fn new(x: [f64; 4], tol: f64) -> Result<Self, CoherenceError> {
        if let Some(v) = x.iter().find(|v| !v.is_finite() || **v < -tol) {
            return Err(CoherenceError::InvalidCfInput(format!("entry {v}")));
        }
        let sum: f64 = x.iter().sum();
        if (sum - 1.0).abs() > tol {
            return Err(CoherenceError::InvalidCfInput(format!("sum {sum}")));
        }
        let mut clipped = x;
        for v in &mut clipped {
            *v = v.max(0.0);
        }
        Ok(Self { x: clipped })
    }

    pub fn values(&self) -> [f64; 4] {
        self.x
    }
}

/// The example measure's generating function on the probability simplex:
/// Shannon entropy when the least entry vanishes, log₂ 3 otherwise.
pub fn cf_measure(input: &CfInput) -> f64 {
    let mut x = input.x;
    for v in &mut x {
        if *v < CF_ZERO_CLIP {
            *v = 0.0;
        }
    }
    let min = x.iter().cloned().fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        shannon_entropy(&x)
    } else {
        3f64.log2()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Complex, ComplexMatrix};

    #[test]
    fn c_re_of_uniform_superposition_is_log_d() {
        for d in 2..=6 {
            let rho = make_mcs(&vec![0.0; d]);
            assert!((c_re(&rho) - (d as f64).log2()).abs() < 1e-12);
        }
    }

    #[test]
    fn c_re_of_diagonal_state_is_zero() {
        let rho = IncoherentState::new(vec![0.2, 0.5, 0.3], DEFAULT_TOL)
            .unwrap()
            .to_density(DEFAULT_TOL);
        assert!(c_re(&rho).abs() < 1e-14);
    }

    #[test]
    fn c_re_of_half_mcs_half_ground_mixture() {
        // ρ = ½|ψ₂⟩⟨ψ₂| + ½|0⟩⟨0| = [[3/4, 1/4], [1/4, 1/4]].
        // Oracle: eigenvalues from the 2x2 quadratic formula λ± = (1 ± √½)/2,
        // c_re = H(3/4) − H(λ+, λ−). Frozen: 0.21040208776627667.
        let lam_p = (1.0 + 0.5f64.sqrt()) / 2.0;
        let lam_m = (1.0 - 0.5f64.sqrt()) / 2.0;
        let oracle = shannon_entropy(&[0.75, 0.25]) - shannon_entropy(&[lam_p, lam_m]);
        assert!((oracle - 0.21040208776627667).abs() < 1e-15);

        let c = |re: f64| Complex::new(re, 0.0);
        let rho = DensityMatrix::with_default_tol(
            ComplexMatrix::from_rows(&[vec![c(0.75), c(0.25)], vec![c(0.25), c(0.25)]]).unwrap(),
        )
        .unwrap();
        assert!((c_re(&rho) - oracle).abs() < 1e-12);
    }

    #[test]
    fn c_l1_examples() {
        let diag = IncoherentState::new(vec![0.6, 0.4], DEFAULT_TOL)
            .unwrap()
            .to_density(DEFAULT_TOL);
        assert!(c_l1(&diag).abs() < 1e-15);

        for d in 2..=5 {
            let rho = make_mcs(&vec![0.0; d]);
            assert!((c_l1(&rho) - (d as f64 - 1.0)).abs() < 1e-12);

            let theta: Vec<f64> = (0..d).map(|k| 0.7 * k as f64 + 0.3).collect();
            let rot = make_mcs(&theta);
            assert!((c_l1(&rot) - (d as f64 - 1.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn minimization_matches_closed_form_on_plus_state() {
        let plus = make_mcs(&[0.0, 0.0]);
        let min = c_re_via_minimization(&plus, 32);
        assert!((min - 1.0).abs() < 1e-7, "got {min}");
    }

    #[test]
    fn minimization_is_zero_on_diagonal_states() {
        let rho = IncoherentState::new(vec![0.35, 0.65], DEFAULT_TOL)
            .unwrap()
            .to_density(DEFAULT_TOL);
        assert!(c_re_via_minimization(&rho, 32) < 1e-9);
    }

    #[test]
    fn is_mcs_examples() {
        let report = is_mcs(&make_mcs(&[0.0; 3]), DEFAULT_MCS_TOL);
        assert!(report.is_mcs);
        let phases = report.witness_phases.unwrap();
        for p in phases {
            assert!(p.abs() < 1e-9 || (p - TAU).abs() < 1e-9);
        }

        let report = is_mcs(&DensityMatrix::maximally_mixed(3), DEFAULT_MCS_TOL);
        assert!(!report.is_mcs);
        assert!(report.witness_phases.is_none());

        // Non-uniform pure state (√0.6, √0.4): fails, value = H(0.6) < 1.
        let psi = PureState::new(
            vec![Complex::new(0.6f64.sqrt(), 0.0), Complex::new(0.4f64.sqrt(), 0.0)],
            DEFAULT_TOL,
        )
        .unwrap();
        let report = is_mcs(&psi.to_density(DEFAULT_TOL), DEFAULT_MCS_TOL);
        assert!(!report.is_mcs);
        assert!((report.value - 0.9709505944546686).abs() < 1e-12);
        assert!(report.value < report.max_possible);
    }

    #[test]
    fn is_mcs_recovers_witness_phases() {
        let theta = [0.0, 1.25, 2.5, 4.75];
        let report = is_mcs(&make_mcs(&theta), DEFAULT_MCS_TOL);
        assert!(report.is_mcs);
        let witness = report.witness_phases.unwrap();
        for (w, t) in witness.iter().zip(&theta) {
            let mut diff = (w - t) % TAU;
            if diff > std::f64::consts::PI {
                diff -= TAU;
            }
            if diff < -std::f64::consts::PI {
                diff += TAU;
            }
            assert!(diff.abs() < 1e-9, "phase {w} vs {t}");
        }
    }

    #[test]
    fn cf_measure_examples() {
        let interior = CfInput::new([0.4, 0.3, 0.2, 0.1], DEFAULT_TOL).unwrap();
        assert_eq!(cf_measure(&interior), 3f64.log2());

        let boundary = CfInput::new([1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0], DEFAULT_TOL).unwrap();
        assert!((cf_measure(&boundary) - 3f64.log2()).abs() < 1e-12);

        let deterministic = CfInput::new([1.0, 0.0, 0.0, 0.0], DEFAULT_TOL).unwrap();
        assert_eq!(cf_measure(&deterministic), 0.0);
    }

    #[test]
    fn cf_input_validation() {
        assert!(CfInput::new([0.5, 0.5, 0.5, -0.5], DEFAULT_TOL).is_err());
        assert!(CfInput::new([0.3, 0.3, 0.3, 0.3], DEFAULT_TOL).is_err());
    }
}
