//! Validated quantum states, dephasing, and the two entropies everything
//! else is built from.
//!
//! All entropies are in bits (log base 2): a maximally mixed qudit has
//! entropy log₂ d and the uniform superposition has coherence log₂ d.

use crate::linalg::{self, hermitian_eig, Complex, ComplexMatrix, LinalgError, Spectrum, Subsystem};
use thiserror::Error;

/// Default validation tolerance. The Jacobi eigensolver leaves residuals
/// far below this at the dimensions this crate targets.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Eigenvalues of a state below this absolute size are treated as zero when
/// deciding support questions for the relative entropy.
pub const SUPPORT_EIG_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum StateError {
    #[error("matrix is not Hermitian (defect {defect:.3e}, tol {tol:.3e})")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("matrix is not positive semidefinite (minimum eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("trace is {trace} instead of 1")]
    TraceNotOne { trace: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("state vector norm is {norm} instead of 1")]
    NotNormalized { norm: f64 },

    #[error("invalid probability vector: {0}")]
    InvalidDistribution(String),

    #[error("invalid ensemble: {0}")]
    InvalidEnsemble(String),

    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Density matrix validated at construction: Hermitian, positive
/// semidefinite, and unit trace, each within `tol`. The spectrum is computed
/// once and cached, so downstream entropy evaluations never re-diagonalize.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
    spectrum: Spectrum,
    tol: f64,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix, tol: f64) -> Result<Self, StateError> {
        if !mat.is_square() {
            return Err(LinalgError::NotSquare { rows: mat.rows(), cols: mat.cols() }.into());
        }
        let spectrum = hermitian_eig(&mat, tol).map_err(|e| match e {
            LinalgError::NotHermitian { defect, tol } => StateError::NotHermitian { defect, tol },
            other => StateError::Linalg(other),
        })?;
        let min_eigenvalue = spectrum.eigenvalues().last().copied().unwrap_or(0.0);
        if min_eigenvalue < -tol {
            return Err(StateError::NotPositiveSemidefinite { min_eigenvalue });
        }
        let trace = mat.trace().re;
        if (trace - 1.0).abs() > tol {
            return Err(StateError::TraceNotOne { trace });
        }
        Ok(Self { mat, spectrum, tol })
    }

    pub fn with_default_tol(mat: ComplexMatrix) -> Result<Self, StateError> {
        Self::new(mat, DEFAULT_TOL)
    }

    pub fn from_pure(psi: &PureState, tol: f64) -> Result<Self, StateError> {
        Self::new(ComplexMatrix::outer(psi.amplitudes()), tol)
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        let p = Complex::new(1.0 / dim as f64, 0.0);
        let mat = ComplexMatrix::identity(dim).scale(p);
        Self::new(mat, DEFAULT_TOL).expect("maximally mixed state is valid")
    }

    /// |k⟩⟨k| in the reference basis.
    pub fn basis_state(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index {k} out of range for dim {dim}");
        let mut mat = ComplexMatrix::zeros(dim, dim);
        mat.set(k, k, Complex::new(1.0, 0.0));
        Self::new(mat, DEFAULT_TOL).expect("basis state is valid")
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn mat(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Tr ρ², computed directly from the matrix entries.
    pub fn purity(&self) -> f64 {
        let d = self.dim();
        let mut acc = 0.0;
        for i in 0..d {
            for j in 0..d {
                acc += (self.mat.get(i, j) * self.mat.get(j, i)).re;
            }
        }
        acc
    }

    /// Diagonal in the reference basis, clamped to [0, ∞) against roundoff.
    pub fn diagonal_probs(&self) -> Vec<f64> {
        (0..self.dim()).map(|k| self.mat.get(k, k).re.max(0.0)).collect()
    }

    /// Eigenvalues with the clipping rule applied: values in [−tol, 0) are
    /// treated as exact zeros. Genuine PSD violations fail validation first.
    pub fn clipped_eigenvalues(&self) -> Vec<f64> {
        self.spectrum.eigenvalues().iter().map(|&l| if l < 0.0 { 0.0 } else { l }).collect()
    }
}

/// Pure state |φ⟩ = Σ α_k|k⟩ with Σ|α_k|² = 1.
#[derive(Debug, Clone)]
pub struct PureState {
    amplitudes: Vec<Complex>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex>, tol: f64) -> Result<Self, StateError> {
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > tol {
            return Err(StateError::NotNormalized { norm });
        }
        Ok(Self { amplitudes })
    }

    /// Uniform superposition (1/√d)Σ|k⟩.
    pub fn uniform(dim: usize) -> Self {
        let a = Complex::new(1.0 / (dim as f64).sqrt(), 0.0);
        Self { amplitudes: vec![a; dim] }
    }

    /// α_k = e^{iθ_k}/√d; always unit norm by construction.
    pub fn from_phases(phases: &[f64]) -> Self {
        let d = phases.len();
        let r = 1.0 / (d as f64).sqrt();
        let amplitudes = phases.iter().map(|&t| Complex::from_polar(r, t)).collect();
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amplitudes
    }

    pub fn to_density(&self, tol: f64) -> DensityMatrix {
        DensityMatrix::from_pure(self, tol).expect("projector of a unit vector is a valid state")
    }
}

/// Diagonal state stored as its probability vector.
#[derive(Debug, Clone)]
pub struct IncoherentState {
    probs: Vec<f64>,
}

impl IncoherentState {
    pub fn new(probs: Vec<f64>, tol: f64) -> Result<Self, StateError> {
        if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < -tol) {
            return Err(StateError::InvalidDistribution(format!("entry {p}")));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > tol {
            return Err(StateError::InvalidDistribution(format!("sum {sum}")));
        }
        let probs = probs.into_iter().map(|p| p.max(0.0)).collect();
        Ok(Self { probs })
    }

    pub fn uniform(dim: usize) -> Self {
        Self { probs: vec![1.0 / dim as f64; dim] }
    }

    pub fn dim(&self) -> usize {
        self.probs.len()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn shannon_entropy(&self) -> f64 {
        shannon_entropy(&self.probs)
    }

    pub fn to_density(&self, tol: f64) -> DensityMatrix {
        let diag: Vec<Complex> = self.probs.iter().map(|&p| Complex::new(p, 0.0)).collect();
        DensityMatrix::new(ComplexMatrix::diagonal(&diag), tol)
            .expect("diagonal probability matrix is a valid state")
    }
}

/// Convex mixture {p_n, ρ_n} over states of a common dimension.
#[derive(Debug, Clone)]
pub struct Ensemble {
    weights: Vec<f64>,
    members: Vec<DensityMatrix>,
}

impl Ensemble {
    pub fn new(weights: Vec<f64>, members: Vec<DensityMatrix>, tol: f64) -> Result<Self, StateError> {
        if weights.len() != members.len() {
            return Err(StateError::InvalidEnsemble(format!(
                "{} weights for {} members",
                weights.len(),
                members.len()
            )));
        }
        if members.is_empty() {
            return Err(StateError::InvalidEnsemble("empty ensemble".into()));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < -tol) {
            return Err(StateError::InvalidEnsemble(format!("weight {w}")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > tol {
            return Err(StateError::InvalidEnsemble(format!("weights sum to {sum}")));
        }
        let dim = members[0].dim();
        if members.iter().any(|m| m.dim() != dim) {
            return Err(StateError::InvalidEnsemble("members of mixed dimensions".into()));
        }
        Ok(Self { weights, members })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn members(&self) -> &[DensityMatrix] {
        &self.members
    }

    /// Σ p_n ρ_n as a validated state.
    pub fn mixture(&self, tol: f64) -> DensityMatrix {
        let dim = self.members[0].dim();
        let mut acc = ComplexMatrix::zeros(dim, dim);
        for (w, m) in self.weights.iter().zip(&self.members) {
            acc = acc.add(&m.mat().scale(Complex::new(*w, 0.0))).expect("same dims");
        }
        DensityMatrix::new(acc, tol).expect("convex mixture of valid states is valid")
    }
}

/// Deletes all off-diagonal entries: ρ ↦ ρ_diag as a probability vector.
pub fn dephase(rho: &DensityMatrix) -> IncoherentState {
    IncoherentState { probs: rho.diagonal_probs() }
}

/// Shannon entropy in bits with the 0·log₂0 := 0 convention.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    probs.iter().filter(|&&p| p > 0.0).map(|&p| -p * p.log2()).sum::<f64>() + 0.0
}

/// Von Neumann entropy S(ρ) = −Σ λ_k log₂ λ_k in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    shannon_entropy(&rho.clipped_eigenvalues())
}

/// Relative entropy S(ρ‖σ) = Tr(ρ log₂ρ − ρ log₂σ) in bits.
///
/// Evaluated in the eigenbasis of σ: S(ρ‖σ) = −S(ρ) − Σ_j ⟨v_j|ρ|v_j⟩log₂μ_j.
/// When ρ carries more than `rho.tol()` of mass on the kernel of σ the result
/// is the +∞ sentinel (`f64::INFINITY`), not an error: callers performing
/// minimizations compare against it directly.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64, StateError> {
    if rho.dim() != sigma.dim() {
        return Err(StateError::DimensionMismatch { expected: rho.dim(), actual: sigma.dim() });
    }
    let mut cross = 0.0;
    for (j, &mu) in sigma.spectrum().eigenvalues().iter().enumerate() {
        let v = sigma.spectrum().eigenvector(j);
        let mass = rho.mat().quadratic_form(&v).re.max(0.0);
        if mu <= SUPPORT_EIG_TOL {
            if mass > rho.tol() {
                return Ok(f64::INFINITY);
            }
            // Negligible mass on a kernel direction contributes nothing.
        } else {
            cross += mass * mu.log2();
        }
    }
    Ok(-von_neumann_entropy(rho) - cross)
}

/// Both reduced states of a bipartite state, via the partial trace.
pub fn reduced_states(
    rho: &DensityMatrix,
    d_a: usize,
    d_b: usize,
) -> Result<(DensityMatrix, DensityMatrix), StateError> {
    if rho.dim() != d_a * d_b {
        return Err(StateError::DimensionMismatch { expected: d_a * d_b, actual: rho.dim() });
    }
    let a = linalg::partial_trace(rho.mat(), d_a, d_b, Subsystem::A)?;
    let b = linalg::partial_trace(rho.mat(), d_a, d_b, Subsystem::B)?;
    Ok((DensityMatrix::new(a, rho.tol())?, DensityMatrix::new(b, rho.tol())?))
}

/// Free-function form of [`PureState::from_phases`].
pub fn pure_from_phases(phases: &[f64]) -> PureState {
    PureState::from_phases(phases)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn plus_state() -> DensityMatrix {
        PureState::uniform(2).to_density(DEFAULT_TOL)
    }

    #[test]
    fn dephase_examples() {
        let diag = IncoherentState::new(vec![0.3, 0.7], DEFAULT_TOL).unwrap().to_density(DEFAULT_TOL);
        assert_eq!(dephase(&diag).probs(), &[0.3, 0.7]);

        let probs = dephase(&plus_state());
        assert!((probs.probs()[0] - 0.5).abs() < 1e-15);
        assert!((probs.probs()[1] - 0.5).abs() < 1e-15);

        for d in [2, 3, 5] {
            let mcs = PureState::uniform(d).to_density(DEFAULT_TOL);
            for &p in dephase(&mcs).probs() {
                assert!((p - 1.0 / d as f64).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn entropy_examples() {
        assert!(von_neumann_entropy(&plus_state()).abs() < 1e-12);
        for d in [2, 4, 7] {
            let mixed = DensityMatrix::maximally_mixed(d);
            assert!((von_neumann_entropy(&mixed) - (d as f64).log2()).abs() < 1e-12);
        }
        let rho = IncoherentState::new(vec![0.5, 0.25, 0.25], DEFAULT_TOL)
            .unwrap()
            .to_density(DEFAULT_TOL);
        assert!((von_neumann_entropy(&rho) - 1.5).abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_examples() {
        let plus = plus_state();
        assert!(relative_entropy(&plus, &plus).unwrap().abs() < 1e-12);

        let mixed = DensityMatrix::maximally_mixed(2);
        assert!((relative_entropy(&plus, &mixed).unwrap() - 1.0).abs() < 1e-12);

        let zero = DensityMatrix::basis_state(2, 0);
        let one = DensityMatrix::basis_state(2, 1);
        assert!(relative_entropy(&zero, &one).unwrap().is_infinite());
    }

    #[test]
    fn relative_entropy_dimension_mismatch() {
        let a = DensityMatrix::maximally_mixed(2);
        let b = DensityMatrix::maximally_mixed(3);
        assert!(matches!(
            relative_entropy(&a, &b),
            Err(StateError::DimensionMismatch { expected: 2, actual: 3 })
        ));
    }

    #[test]
    fn pure_from_phases_examples() {
        let psi = pure_from_phases(&[0.0; 4]);
        for a in psi.amplitudes() {
            assert!((a - c(0.5, 0.0)).norm() < 1e-15);
        }

        let psi = pure_from_phases(&[0.0, std::f64::consts::PI]);
        let s = 1.0 / 2f64.sqrt();
        assert!((psi.amplitudes()[0] - c(s, 0.0)).norm() < 1e-15);
        assert!((psi.amplitudes()[1] - c(-s, 0.0)).norm() < 1e-15);

        // Linear-phase vector of the 2x3 bipartite construction at θ = π/3.
        let theta = std::f64::consts::PI / 3.0;
        let phases: Vec<f64> = (0..6).map(|k| k as f64 * theta).collect();
        let psi = pure_from_phases(&phases);
        let r = 1.0 / 6f64.sqrt();
        for (k, a) in psi.amplitudes().iter().enumerate() {
            assert!((a - Complex::from_polar(r, k as f64 * theta)).norm() < 1e-15);
        }
    }

    #[test]
    fn validation_rejects_bad_states() {
        // Non-Hermitian.
        let m = ComplexMatrix::from_rows(&[
            vec![c(0.5, 0.0), c(0.4, 0.0)],
            vec![c(0.0, 0.0), c(0.5, 0.0)],
        ])
        .unwrap();
        assert!(matches!(
            DensityMatrix::with_default_tol(m),
            Err(StateError::NotHermitian { .. })
        ));

        // Negative eigenvalue (Hermitian, unit trace).
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.2, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(-0.2, 0.0)],
        ])
        .unwrap();
        assert!(matches!(
            DensityMatrix::with_default_tol(m),
            Err(StateError::NotPositiveSemidefinite { .. })
        ));

        // Wrong trace.
        let m = ComplexMatrix::diagonal(&[c(0.6, 0.0), c(0.6, 0.0)]);
        assert!(matches!(DensityMatrix::with_default_tol(m), Err(StateError::TraceNotOne { .. })));
    }

    #[test]
    fn reduced_states_of_bell_state() {
        let s = 1.0 / 2f64.sqrt();
        let bell = PureState::new(vec![c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)], DEFAULT_TOL)
            .unwrap()
            .to_density(DEFAULT_TOL);
        let (a, b) = reduced_states(&bell, 2, 2).unwrap();
        for r in [a, b] {
            let dist = r
                .mat()
                .frobenius_distance(&DensityMatrix::maximally_mixed(2).mat().clone())
                .unwrap();
            assert!(dist < 1e-12);
        }
    }

    #[test]
    fn ensemble_mixture() {
        let e = Ensemble::new(
            vec![0.5, 0.5],
            vec![plus_state(), DensityMatrix::basis_state(2, 0)],
            DEFAULT_TOL,
        )
        .unwrap();
        let mix = e.mixture(DEFAULT_TOL);
        assert!((mix.mat().get(0, 0).re - 0.75).abs() < 1e-15);
        assert!((mix.mat().get(0, 1).re - 0.25).abs() < 1e-15);

        assert!(Ensemble::new(vec![0.9, 0.2], vec![plus_state(), plus_state()], DEFAULT_TOL).is_err());
        assert!(Ensemble::new(
            vec![0.5, 0.5],
            vec![plus_state(), DensityMatrix::maximally_mixed(3)],
            DEFAULT_TOL
        )
        .is_err());
    }
}
