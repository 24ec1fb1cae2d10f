//! Super-additivity of the relative-entropy measure on bipartite systems.
//!
//! For any state, C_RE(ρ_AB) ≥ C_RE(ρ_A) + C_RE(ρ_B). This module measures
//! the gap, decides equality and product-ness, relates both to the phase
//! structure of maximally coherent bipartite pure states, and constructs the
//! state that is simultaneously maximally coherent and maximally entangled.
//!
//! Composite indices follow |i, j⟩ ↦ i·d_b + j throughout, matching
//! [`crate::linalg::kron`] and [`crate::linalg::partial_trace`].

use crate::coherence::c_re;
use crate::linalg::{kron, ComplexMatrix, Complex};
use crate::states::{reduced_states, DensityMatrix, PureState, StateError, DEFAULT_TOL};
use std::f64::consts::{PI, TAU};
use thiserror::Error;

/// |gap| at or below this counts as equality in the super-additivity law.
pub const EQUALITY_TOL: f64 = 1e-7;

/// Frobenius distance to ρ_A ⊗ ρ_B at or below this counts as a product state.
pub const PRODUCT_TOL: f64 = 1e-7;

/// Wrapped phase-consistency residual at or below this counts as separable phases.
pub const PHASE_CONSISTENCY_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum BipartiteError {
    #[error("state dimension {dim} does not factor as {d_a}·{d_b}")]
    DimensionMismatch { dim: usize, d_a: usize, d_b: usize },

    #[error("phase matrix is {d_a}x{d_b}, expected square")]
    NotSquare { d_a: usize, d_b: usize },

    #[error("phase entry count {len} does not match {d_a}x{d_b}")]
    ShapeMismatch { d_a: usize, d_b: usize, len: usize },

    #[error("non-finite phase entry")]
    NonFinitePhase,

    #[error("theta = {theta} outside the open interval (0, 2π)")]
    OutOfRange { theta: f64 },

    #[error(transparent)]
    State(#[from] StateError),
}

/// Wraps an angle into (−π, π].
pub fn wrap_angle(x: f64) -> f64 {
    let mut y = x % TAU;
    if y > PI {
        y -= TAU;
    }
    if y <= -PI {
        y += TAU;
    }
    y
}

/// Phase table θ_{ij} generating the bipartite pure state
/// (1/√d)Σ e^{iθ_{ij}}|i, j⟩. Stored row-major with the gauge θ_{00} = 0
/// applied at construction (a global phase of the state).
#[derive(Debug, Clone)]
pub struct PhaseMatrix {
    d_a: usize,
    d_b: usize,
    theta: Vec<f64>,
}

impl PhaseMatrix {
    pub fn new(d_a: usize, d_b: usize, theta: Vec<f64>) -> Result<Self, BipartiteError> {
        if theta.len() != d_a * d_b {
            return Err(BipartiteError::ShapeMismatch { d_a, d_b, len: theta.len() });
        }
        if theta.iter().any(|t| !t.is_finite()) {
            return Err(BipartiteError::NonFinitePhase);
        }
        let gauge = theta[0];
        let theta = theta.into_iter().map(|t| t - gauge).collect();
        Ok(Self { d_a, d_b, theta })
    }

    /// Separable table θ_{ij} = a_i + b_j; always phase-consistent.
    pub fn separable(a: &[f64], b: &[f64]) -> Self {
        let mut theta = Vec::with_capacity(a.len() * b.len());
        for &ai in a {
            for &bj in b {
                theta.push(ai + bj);
            }
        }
        Self::new(a.len(), b.len(), theta).expect("finite inputs")
    }

    /// Discrete-Fourier table θ_{ij} = −2π·i·j/d on a d×d system. Row
    /// differences sum to zero, which is exactly the maximal-entanglement
    /// condition on the reduced state.
    pub fn dft(d: usize) -> Self {
        let mut theta = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                theta.push(-TAU * (i * j) as f64 / d as f64);
            }
        }
        Self::new(d, d, theta).expect("finite inputs")
    }

    /// Linear table θ_{ij} = (i·d_b + j)·step: the flattened state carries
    /// phases 0, step, 2·step, … down the composite basis.
    pub fn linear(d_a: usize, d_b: usize, step: f64) -> Self {
        let mut theta = Vec::with_capacity(d_a * d_b);
        for i in 0..d_a {
            for j in 0..d_b {
                theta.push((i * d_b + j) as f64 * step);
            }
        }
        Self::new(d_a, d_b, theta).expect("finite inputs")
    }

    pub fn d_a(&self) -> usize {
        self.d_a
    }

    pub fn d_b(&self) -> usize {
        self.d_b
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.theta[i * self.d_b + j]
    }

    pub fn flat(&self) -> &[f64] {
        &self.theta
    }

    pub fn to_pure_state(&self) -> PureState {
        PureState::from_phases(&self.theta)
    }

    pub fn to_density(&self) -> DensityMatrix {
        self.to_pure_state().to_density(DEFAULT_TOL)
    }

    /// Largest wrapped residual |θ_{ij} − θ_{it} − θ_{i'j} + θ_{i't}| over all
    /// index quadruples. Zero exactly when the table splits as a_i + b_j
    /// modulo 2π.
    pub fn consistency_violation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.d_a {
            for ip in (i + 1)..self.d_a {
                for j in 0..self.d_b {
                    for t in (j + 1)..self.d_b {
                        let r = self.get(i, j) - self.get(i, t) - self.get(ip, j) + self.get(ip, t);
                        worst = worst.max(wrap_angle(r).abs());
                    }
                }
            }
        }
        worst
    }
}

/// Both sides of the super-additivity inequality for one state, with the
/// equality and product verdicts at the module tolerances.
#[derive(Debug, Clone)]
pub struct SuperAdditivityReport {
    pub c_ab: f64,
    pub c_a: f64,
    pub c_b: f64,
    /// c_ab − c_a − c_b; nonnegative up to numerics.
    pub gap: f64,
    /// |gap| ≤ [`EQUALITY_TOL`].
    pub equality: bool,
    /// product_distance ≤ [`PRODUCT_TOL`].
    pub is_product: bool,
    /// ‖ρ − ρ_A ⊗ ρ_B‖_F.
    pub product_distance: f64,
}

/// Evaluates C_RE on a bipartite state and both reduced states, the gap,
/// and the distance to the product of the marginals.
pub fn superadditivity_report(
    rho: &DensityMatrix,
    d_a: usize,
    d_b: usize,
) -> Result<SuperAdditivityReport, BipartiteError> {
    if rho.dim() != d_a * d_b {
        return Err(BipartiteError::DimensionMismatch { dim: rho.dim(), d_a, d_b });
    }
    let (rho_a, rho_b) = reduced_states(rho, d_a, d_b)?;
    let c_ab = c_re(rho);
    let c_a = c_re(&rho_a);
    let c_b = c_re(&rho_b);
    let gap = c_ab - c_a - c_b;
    let product = kron(rho_a.mat(), rho_b.mat());
    let product_distance =
        rho.mat().frobenius_distance(&product).expect("dimensions agree by construction");
    Ok(SuperAdditivityReport {
        c_ab,
        c_a,
        c_b,
        gap,
        equality: gap.abs() <= EQUALITY_TOL,
        is_product: product_distance <= PRODUCT_TOL,
        product_distance,
    })
}

/// The three predicates of the equality question for a square-phase MCS.
#[derive(Debug, Clone, Copy)]
pub struct Result2Check {
    /// Equality in the super-additivity inequality.
    pub equality: bool,
    /// ρ_AB equals ρ_A ⊗ ρ_B.
    pub is_product: bool,
    /// The phase table splits as θ_{ij} = a_i + b_j modulo 2π.
    pub phases_consistent: bool,
}

impl Result2Check {
    pub fn all_agree(&self) -> bool {
        self.equality == self.is_product && self.is_product == self.phases_consistent
    }
}

/// Builds the MCS generated by a square phase table and evaluates all three
/// equivalent predicates: equality of the super-additivity law, product
/// structure, and phase separability.
pub fn result2_check(theta: &PhaseMatrix) -> Result<Result2Check, BipartiteError> {
    if theta.d_a() != theta.d_b() {
        return Err(BipartiteError::NotSquare { d_a: theta.d_a(), d_b: theta.d_b() });
    }
    let rho = theta.to_density();
    let report = superadditivity_report(&rho, theta.d_a(), theta.d_b())?;
    Ok(Result2Check {
        equality: report.equality,
        is_product: report.is_product,
        phases_consistent: theta.consistency_violation() <= PHASE_CONSISTENCY_TOL,
    })
}

/// The 2×3 linear-phase construction: |φ⟩ = (1/√6)Σ_k e^{ikθ}|k⟩.
///
/// For every θ the reduced states are the single-qubit and single-qutrit
/// MCSs displayed by `counterexample_reduced_a`/`_b`, and the
/// super-additivity gap vanishes identically. The returned report also
/// carries the product distance; linear phases split as
/// kθ = 3(i−1)θ + (j−1)θ across the 2×3 index grid, so the state in fact
/// factorizes as ρ_A ⊗ ρ_B for every θ and `is_product` comes out true.
pub fn counterexample_23(
    theta: f64,
) -> Result<(DensityMatrix, SuperAdditivityReport), BipartiteError> {
    if !(theta > 0.0 && theta < TAU) {
        return Err(BipartiteError::OutOfRange { theta });
    }
    let rho = PhaseMatrix::linear(2, 3, theta).to_density();
    let report = superadditivity_report(&rho, 2, 3)?;
    Ok((rho, report))
}

/// The displayed 2×2 reduced state of the linear-phase construction:
/// (1/2)[[1, e^{−3iθ}], [e^{3iθ}, 1]].
pub fn counterexample_reduced_a(theta: f64) -> ComplexMatrix {
    let z = Complex::from_polar(0.5, 3.0 * theta);
    ComplexMatrix::from_rows(&[
        vec![Complex::new(0.5, 0.0), z.conj()],
        vec![z, Complex::new(0.5, 0.0)],
    ])
    .expect("fixed shape")
}

/// The displayed 3×3 reduced state: entries (1/3)e^{i(j−t)θ}.
pub fn counterexample_reduced_b(theta: f64) -> ComplexMatrix {
    ComplexMatrix::from_fn(3, 3, |j, t| {
        Complex::from_polar(1.0 / 3.0, (j as f64 - t as f64) * theta)
    })
}

/// Constructs the d×d-system MCS with maximally mixed reduced state, from
/// the discrete-Fourier phase table. The state is maximally coherent on the
/// d²-dimensional system and maximally entangled across the cut.
pub fn make_mcs_max_entangled(d: usize) -> DensityMatrix {
    assert!(d >= 2, "entangled MCS needs d >= 2");
    PhaseMatrix::dft(d).to_density()
}

/// Reduced-state entries straight from the phase table:
/// (ρ_A)_{is} = (1/d)Σ_j e^{i(θ_{ij} − θ_{sj})}.
pub fn reduced_a_from_phases(theta: &PhaseMatrix) -> ComplexMatrix {
    let d = (theta.d_a() * theta.d_b()) as f64;
    ComplexMatrix::from_fn(theta.d_a(), theta.d_a(), |i, s| {
        (0..theta.d_b())
            .map(|j| Complex::from_polar(1.0, theta.get(i, j) - theta.get(s, j)))
            .sum::<Complex>()
            / d
    })
}
