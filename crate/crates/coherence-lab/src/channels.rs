//! Kraus channels, incoherence and unitality tests, and the classifier for
//! operations that preserve maximally coherent states.
//!
//! The classifier is structural: an incoherent, unital channel preserves the
//! MCS set exactly when every Kraus operator is a common-modulus monomial
//! matrix a_n·D_n·Π_n (diagonal unitary times permutation) and all terms
//! share the same Π and the same residual phase pattern, i.e. the channel is
//! a single ρ ↦ (DΠ)ρ(DΠ)†. A Monte-Carlo sweep over random-phase MCS probes
//! cross-checks every verdict; the two paths disagreeing is a hard error,
//! never a silent fallback.

use crate::coherence::{c_re, is_mcs, DEFAULT_MCS_TOL};
use crate::linalg::{Complex, ComplexMatrix, LinalgError};
use crate::states::{DensityMatrix, PureState, StateError, DEFAULT_TOL};
use rand::Rng;
use std::f64::consts::TAU;
use thiserror::Error;

/// Entries with modulus at most this fraction of ‖K_n‖_F count as zero when
/// reading off the support pattern of a Kraus operator.
pub const NONZERO_REL_TOL: f64 = 1e-10;

/// Tolerance on modulus uniformity and phase matching in the monomial
/// factorization and the preservation decision.
pub const FACTOR_TOL: f64 = 1e-8;

/// Default number of Monte-Carlo MCS probes in the classifier.
pub const DEFAULT_MC_SAMPLES: usize = 50;

#[derive(Debug, Error)]
pub enum ChannelError {
    #[error("channel has no Kraus operators")]
    Empty,

    #[error("Kraus operator {index} is {rows}x{cols}, expected {dim}x{dim}")]
    OperatorShape { index: usize, rows: usize, cols: usize, dim: usize },

    #[error("completeness violation: ‖ΣK†K − I‖_F = {residual:.3e} exceeds {tol:.3e}")]
    NotTracePreserving { residual: f64, tol: f64 },

    #[error("dimension mismatch: channel dim {channel}, state dim {state}")]
    DimensionMismatch { channel: usize, state: usize },

    #[error(
        "classifier disagreement: structural verdict says preserves_mcs = {structural}, \
         but Monte-Carlo probe {probe} has coherence {observed:.12} of a maximum {max:.12}"
    )]
    ClassifierDisagreement { structural: bool, probe: usize, observed: f64, max: f64 },

    #[error(transparent)]
    State(#[from] StateError),

    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Finite Kraus representation {K_n} with Σ K_n†K_n = I certified at
/// construction.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    kraus: Vec<ComplexMatrix>,
    dim: usize,
    tol: f64,
}

impl KrausChannel {
    pub fn new(kraus: Vec<ComplexMatrix>, tol: f64) -> Result<Self, ChannelError> {
        let first = kraus.first().ok_or(ChannelError::Empty)?;
        let dim = first.rows();
        for (index, k) in kraus.iter().enumerate() {
            if k.rows() != dim || k.cols() != dim {
                return Err(ChannelError::OperatorShape {
                    index,
                    rows: k.rows(),
                    cols: k.cols(),
                    dim,
                });
            }
        }
        let ch = Self { kraus, dim, tol };
        let residual = ch.completeness_residual();
        if residual > tol {
            return Err(ChannelError::NotTracePreserving { residual, tol });
        }
        Ok(ch)
    }

    pub fn with_default_tol(kraus: Vec<ComplexMatrix>) -> Result<Self, ChannelError> {
        Self::new(kraus, DEFAULT_TOL)
    }

    /// The trivial channel {I}.
    pub fn identity(dim: usize) -> Self {
        Self::with_default_tol(vec![ComplexMatrix::identity(dim)]).expect("identity is complete")
    }

    /// Full dephasing {|k⟩⟨k|}_k.
    pub fn dephasing(dim: usize) -> Self {
        let ops = (0..dim)
            .map(|k| {
                let mut m = ComplexMatrix::zeros(dim, dim);
                m.set(k, k, Complex::new(1.0, 0.0));
                m
            })
            .collect();
        Self::with_default_tol(ops).expect("projector set is complete")
    }

    /// Single-operator channel ρ ↦ UρU†; `u` must be unitary within tol.
    pub fn from_unitary(u: ComplexMatrix, tol: f64) -> Result<Self, ChannelError> {
        Self::new(vec![u], tol)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// ‖Σ K†K − I‖_F.
    pub fn completeness_residual(&self) -> f64 {
        let mut acc = ComplexMatrix::zeros(self.dim, self.dim);
        for k in &self.kraus {
            acc = acc.add(&k.adjoint().matmul(k).expect("square")).expect("same dims");
        }
        acc.frobenius_distance(&ComplexMatrix::identity(self.dim)).expect("same dims")
    }

    /// ‖Σ KK† − I‖_F: zero for unital channels.
    pub fn unitality_residual(&self) -> f64 {
        let mut acc = ComplexMatrix::zeros(self.dim, self.dim);
        for k in &self.kraus {
            acc = acc.add(&k.matmul(&k.adjoint()).expect("square")).expect("same dims");
        }
        acc.frobenius_distance(&ComplexMatrix::identity(self.dim)).expect("same dims")
    }

    /// Applies the channel: ρ ↦ Σ K ρ K†.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix, ChannelError> {
        if rho.dim() != self.dim {
            return Err(ChannelError::DimensionMismatch { channel: self.dim, state: rho.dim() });
        }
        let mut acc = ComplexMatrix::zeros(self.dim, self.dim);
        for k in &self.kraus {
            let term = k.matmul(rho.mat())?.matmul(&k.adjoint())?;
            acc = acc.add(&term)?;
        }
        Ok(DensityMatrix::new(acc, rho.tol())?)
    }
}

/// One column of a Kraus operator carrying more than one nonzero entry,
/// which is exactly a violation of incoherence.
#[derive(Debug, Clone)]
pub struct ColumnViolation {
    pub operator: usize,
    pub column: usize,
    pub nonzero_rows: Vec<usize>,
}

/// Structural incoherence verdict with the violating columns as witnesses.
#[derive(Debug, Clone)]
pub struct IncoherenceReport {
    pub incoherent: bool,
    pub violations: Vec<ColumnViolation>,
}

/// Structural incoherence test: every column of every Kraus operator holds
/// at most one nonzero entry (relative threshold [`NONZERO_REL_TOL`]).
pub fn is_incoherent(ch: &KrausChannel) -> IncoherenceReport {
    let d = ch.dim();
    let mut violations = Vec::new();
    for (n, k) in ch.operators().iter().enumerate() {
        let cutoff = NONZERO_REL_TOL * k.frobenius_norm();
        for col in 0..d {
            let rows: Vec<usize> = (0..d).filter(|&row| k.get(row, col).norm() > cutoff).collect();
            if rows.len() > 1 {
                violations.push(ColumnViolation { operator: n, column: col, nonzero_rows: rows });
            }
        }
    }
    IncoherenceReport { incoherent: violations.is_empty(), violations }
}

/// Definitional incoherence test: every Kraus term sends every basis state
/// to a diagonal (unnormalized) matrix. Kept separate from the structural
/// column test so the two can be played against each other.
pub fn is_incoherent_definitional(ch: &KrausChannel, tol: f64) -> bool {
    let d = ch.dim();
    for k in ch.operators() {
        let scale = k.frobenius_norm().max(1.0);
        for basis in 0..d {
            // K|b⟩⟨b|K† = v v† with v the b-th column of K.
            let v: Vec<Complex> = (0..d).map(|r| k.get(r, basis)).collect();
            for i in 0..d {
                for j in 0..d {
                    if i != j && (v[i] * v[j].conj()).norm() > tol * scale * scale {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Unitality test: Σ K K† = I within the channel tolerance.
pub fn is_unital(ch: &KrausChannel) -> bool {
    ch.unitality_residual() <= ch.tol()
}

/// Monomial normal form of a Kraus operator: K = a · diag(e^{iφ}) · Π.
///
/// `perm[j]` is the row of the single nonzero in column j, `scale` carries
/// the common modulus and the phase of column 0, and `phases[j]` is the
/// residual phase of column j relative to column 0 (`phases[0] = 0`).
#[derive(Debug, Clone)]
pub struct PermScaledFactor {
    pub scale: Complex,
    pub perm: Vec<usize>,
    pub phases: Vec<f64>,
}

impl PermScaledFactor {
    /// Rebuilds the operator from the factor data.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.perm.len();
        let mut m = ComplexMatrix::zeros(d, d);
        for (col, &row) in self.perm.iter().enumerate() {
            m.set(row, col, self.scale * Complex::from_polar(1.0, self.phases[col]));
        }
        m
    }
}

/// Attempts the a·DΠ factorization of one operator. Fails (None) when any
/// column has no nonzero or more than one, when a row is reused, or when the
/// nonzero moduli are not uniform.
pub fn factor_perm_scaled(k: &ComplexMatrix) -> Option<PermScaledFactor> {
    let d = k.dim();
    let cutoff = NONZERO_REL_TOL * k.frobenius_norm();
    let mut perm = Vec::with_capacity(d);
    let mut values = Vec::with_capacity(d);
    let mut row_used = vec![false; d];
    for col in 0..d {
        let rows: Vec<usize> = (0..d).filter(|&row| k.get(row, col).norm() > cutoff).collect();
        let [row] = rows[..] else { return None };
        if row_used[row] {
            return None;
        }
        row_used[row] = true;
        perm.push(row);
        values.push(k.get(row, col));
    }

    let mean_modulus = values.iter().map(|v| v.norm()).sum::<f64>() / d as f64;
    if values.iter().any(|v| (v.norm() - mean_modulus).abs() > FACTOR_TOL * mean_modulus) {
        return None;
    }

    let scale = values[0];
    let base = values[0].arg();
    let phases = values
        .iter()
        .map(|v| {
            let mut p = (v.arg() - base) % TAU;
            if p < 0.0 {
                p += TAU;
            }
            p
        })
        .collect();
    Some(PermScaledFactor { scale, perm, phases })
}

/// A maximally coherent probe the channel failed to keep maximally coherent.
#[derive(Debug, Clone)]
pub struct McsWitness {
    pub input: DensityMatrix,
    pub output: DensityMatrix,
    /// log₂ d − C_RE(output) in bits.
    pub coherence_drop: f64,
}

/// Full verdict record for one channel.
#[derive(Debug, Clone)]
pub struct ChannelClassification {
    pub incoherent: bool,
    pub unital: bool,
    pub preserves_mcs: bool,
    /// Monomial factors of all Kraus operators; present only when every
    /// operator admits the a·DΠ form.
    pub factors: Option<Vec<PermScaledFactor>>,
    /// Present exactly when the channel is incoherent but not MCS-preserving.
    pub witness: Option<McsWitness>,
}

fn phases_match(a: &PermScaledFactor, b: &PermScaledFactor) -> bool {
    a.perm == b.perm
        && a.phases.iter().zip(&b.phases).all(|(&x, &y)| {
            let mut diff = (x - y) % TAU;
            if diff > std::f64::consts::PI {
                diff -= TAU;
            }
            if diff < -std::f64::consts::PI {
                diff += TAU;
            }
            diff.abs() <= FACTOR_TOL
        })
}

/// Decides whether an incoherent operation preserves maximally coherent
/// states, and cross-validates the structural verdict with `samples`
/// random-phase MCS probes.
///
/// Structural rule: the channel must be incoherent and unital, every Kraus
/// operator must factor as a_n·D_nΠ_n, and all factors must share one Π and
/// one residual phase pattern — the channel then acts as a single
/// ρ ↦ (DΠ)ρ(DΠ)†. Any disagreement between this verdict and the probe sweep
/// is returned as [`ChannelError::ClassifierDisagreement`].
pub fn classify_mcs_preservation(
    ch: &KrausChannel,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<ChannelClassification, ChannelError> {
    let d = ch.dim();
    let incoherent = is_incoherent(ch).incoherent;
    let unital = is_unital(ch);

    let factors = if incoherent {
        let per_op: Vec<Option<PermScaledFactor>> =
            ch.operators().iter().map(factor_perm_scaled).collect();
        if per_op.iter().all(Option::is_some) {
            Some(per_op.into_iter().map(Option::unwrap).collect::<Vec<_>>())
        } else {
            None
        }
    } else {
        None
    };

    let preserves_structurally = incoherent
        && unital
        && factors.as_ref().is_some_and(|fs| fs.windows(2).all(|w| phases_match(&w[0], &w[1])));

    // Monte-Carlo cross-validation on random-phase MCS probes.
    let max = (d as f64).log2();
    let mut witness = None;
    for probe in 0..samples {
        let mut theta: Vec<f64> = (0..d).map(|_| rng.gen::<f64>() * TAU).collect();
        theta[0] = 0.0;
        let input = PureState::from_phases(&theta).to_density(DEFAULT_TOL);
        let output = ch.apply(&input)?;
        let report = is_mcs(&output, DEFAULT_MCS_TOL);
        if preserves_structurally {
            if !report.is_mcs {
                return Err(ChannelError::ClassifierDisagreement {
                    structural: true,
                    probe,
                    observed: report.value,
                    max,
                });
            }
        } else if !report.is_mcs && witness.is_none() {
            let coherence_drop = max - c_re(&output);
            witness = Some(McsWitness { input, output, coherence_drop });
        }
    }

    if !preserves_structurally && samples > 0 && witness.is_none() {
        // Every probe stayed maximally coherent although the structure says
        // the channel is not of the DΠ form.
        return Err(ChannelError::ClassifierDisagreement {
            structural: false,
            probe: samples,
            observed: max,
            max,
        });
    }

    // Witnesses are reported only for incoherent channels; for coherent ones
    // the preservation question is out of scope and the flag simply stays
    // false.
    if !incoherent {
        witness = None;
    }

    Ok(ChannelClassification {
        incoherent,
        unital,
        preserves_mcs: preserves_structurally,
        factors,
        witness,
    })
}

/// Writes the identity as Σ_{j=1}^d |φ_j⟩⟨φ_j| with every |φ_j⟩ maximally
/// coherent, using the discrete-Fourier phases α_{j,k} = 2π(k−1)(j−1)/d.
pub fn identity_mcs_decomposition(d: usize) -> Vec<PureState> {
    assert!(d >= 1, "decomposition needs d >= 1");
    (0..d)
        .map(|j| {
            let phases: Vec<f64> = (0..d).map(|k| TAU * (j * k) as f64 / d as f64).collect();
            PureState::from_phases(&phases)
        })
        .collect()
}

/// Σ_j |φ_j⟩⟨φ_j| − I residual of a claimed identity decomposition.
pub fn identity_decomposition_residual(states: &[PureState]) -> f64 {
    let d = states.len();
    let mut acc = ComplexMatrix::zeros(d, d);
    for s in states {
        acc = acc.add(&ComplexMatrix::outer(s.amplitudes())).expect("same dims");
    }
    acc.frobenius_distance(&ComplexMatrix::identity(d)).expect("same dims")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::IncoherentState;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn plus_state() -> DensityMatrix {
        PureState::uniform(2).to_density(DEFAULT_TOL)
    }

    #[test]
    fn identity_channel_is_a_fixed_point() {
        let ch = KrausChannel::identity(3);
        let rho = DensityMatrix::maximally_mixed(3);
        let out = ch.apply(&rho).unwrap();
        assert!(out.mat().frobenius_distance(rho.mat()).unwrap() < 1e-15);
    }

    #[test]
    fn dephasing_kills_the_plus_state() {
        let ch = KrausChannel::dephasing(2);
        let out = ch.apply(&plus_state()).unwrap();
        let target = DensityMatrix::maximally_mixed(2);
        assert!(out.mat().frobenius_distance(target.mat()).unwrap() < 1e-15);
    }

    #[test]
    fn diagonal_unitary_keeps_mcs() {
        let u = ComplexMatrix::diagonal(&[
            Complex::from_polar(1.0, 0.4),
            Complex::from_polar(1.0, 2.1),
            Complex::from_polar(1.0, 5.0),
        ]);
        let ch = KrausChannel::from_unitary(u, DEFAULT_TOL).unwrap();
        let out = ch.apply(&PureState::uniform(3).to_density(DEFAULT_TOL)).unwrap();
        assert!(is_mcs(&out, DEFAULT_MCS_TOL).is_mcs);
    }

    #[test]
    fn completeness_validation_rejects_bad_sets() {
        let half = ComplexMatrix::identity(2).scale(c(0.5, 0.0));
        assert!(matches!(
            KrausChannel::with_default_tol(vec![half]),
            Err(ChannelError::NotTracePreserving { .. })
        ));
        assert!(matches!(KrausChannel::with_default_tol(vec![]), Err(ChannelError::Empty)));
    }

    #[test]
    fn incoherence_examples() {
        let diag_u = ComplexMatrix::diagonal(&[
            Complex::from_polar(1.0, 1.0),
            Complex::from_polar(1.0, 2.0),
        ]);
        assert!(is_incoherent(&KrausChannel::from_unitary(diag_u, DEFAULT_TOL).unwrap()).incoherent);

        let swap = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!(is_incoherent(&KrausChannel::from_unitary(swap, DEFAULT_TOL).unwrap()).incoherent);

        // (1/√2)H padded into a valid channel: a column with two nonzeros.
        let s = 1.0 / 2f64.sqrt();
        let h = ComplexMatrix::from_rows(&[vec![c(s, 0.0), c(s, 0.0)], vec![c(s, 0.0), c(-s, 0.0)]])
            .unwrap()
            .scale(c(s, 0.0));
        let pad = ComplexMatrix::identity(2).scale(c(s, 0.0));
        let ch = KrausChannel::with_default_tol(vec![h, pad]).unwrap();
        let report = is_incoherent(&ch);
        assert!(!report.incoherent);
        assert_eq!(report.violations[0].operator, 0);
        assert_eq!(report.violations[0].nonzero_rows.len(), 2);
        assert!(!is_incoherent_definitional(&ch, 1e-10));
    }

    #[test]
    fn unitality_examples() {
        let u = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!(is_unital(&KrausChannel::from_unitary(u, DEFAULT_TOL).unwrap()));
        assert!(is_unital(&KrausChannel::dephasing(3)));

        // Incoherent amplitude damping: trace-preserving but not unital.
        let gamma: f64 = 0.5;
        let k1 = ComplexMatrix::diagonal(&[c(1.0, 0.0), c((1.0 - gamma).sqrt(), 0.0)]);
        let mut k2 = ComplexMatrix::zeros(2, 2);
        k2.set(0, 1, c(gamma.sqrt(), 0.0));
        let ch = KrausChannel::with_default_tol(vec![k1, k2]).unwrap();
        assert!(is_incoherent(&ch).incoherent);
        assert!(!is_unital(&ch));
        assert!((ch.unitality_residual() - (2.0 * gamma * gamma).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn factorization_reads_off_monomial_structure() {
        // K = a·DΠ with Π = (0→1, 1→2, 2→0).
        let a = Complex::from_polar(0.6, 0.3);
        let mut k = ComplexMatrix::zeros(3, 3);
        k.set(1, 0, a);
        k.set(2, 1, a * Complex::from_polar(1.0, 1.2));
        k.set(0, 2, a * Complex::from_polar(1.0, 4.0));
        let f = factor_perm_scaled(&k).unwrap();
        assert_eq!(f.perm, vec![1, 2, 0]);
        assert!((f.phases[1] - 1.2).abs() < 1e-12);
        assert!((f.phases[2] - 4.0).abs() < 1e-12);
        assert!(f.reconstruct().frobenius_distance(&k).unwrap() < 1e-12);

        // Zero column: no factorization.
        let mut proj = ComplexMatrix::zeros(2, 2);
        proj.set(0, 0, c(1.0, 0.0));
        assert!(factor_perm_scaled(&proj).is_none());

        // Non-uniform moduli: no factorization.
        let lop = ComplexMatrix::diagonal(&[c(0.9, 0.0), c(0.1, 0.0)]);
        assert!(factor_perm_scaled(&lop).is_none());
    }

    #[test]
    fn classify_single_permuted_diagonal_unitary() {
        let mut u = ComplexMatrix::zeros(3, 3);
        u.set(2, 0, Complex::from_polar(1.0, 0.7));
        u.set(0, 1, Complex::from_polar(1.0, 2.9));
        u.set(1, 2, Complex::from_polar(1.0, 4.4));
        let ch = KrausChannel::from_unitary(u, DEFAULT_TOL).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let class = classify_mcs_preservation(&ch, 40, &mut rng).unwrap();
        assert!(class.incoherent && class.unital && class.preserves_mcs);
        assert!(class.factors.is_some());
        assert!(class.witness.is_none());
    }

    #[test]
    fn classify_full_dephasing() {
        let ch = KrausChannel::dephasing(3);
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        let class = classify_mcs_preservation(&ch, 40, &mut rng).unwrap();
        assert!(class.incoherent && class.unital);
        assert!(!class.preserves_mcs);
        assert!(class.factors.is_none());
        let witness = class.witness.unwrap();
        // Dephasing maps every MCS to I/d: the full log₂ 3 bits are lost.
        assert!((witness.coherence_drop - 3f64.log2()).abs() < 1e-9);
    }

    #[test]
    fn classify_mixture_of_two_permutations() {
        let s = c(1.0 / 2f64.sqrt(), 0.0);
        let k1 = ComplexMatrix::identity(2).scale(s);
        let swap = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap()
        .scale(s);
        let ch = KrausChannel::with_default_tol(vec![k1, swap]).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(13);
        let class = classify_mcs_preservation(&ch, 40, &mut rng).unwrap();
        assert!(class.incoherent && class.unital);
        assert!(class.factors.is_some(), "each term alone is monomial");
        assert!(!class.preserves_mcs, "terms carry different permutations");
        assert!(class.witness.unwrap().coherence_drop > 1e-6);
    }

    #[test]
    fn classify_skips_witness_for_coherent_channels() {
        let s = 1.0 / 2f64.sqrt();
        let h = ComplexMatrix::from_rows(&[vec![c(s, 0.0), c(s, 0.0)], vec![c(s, 0.0), c(-s, 0.0)]])
            .unwrap();
        let ch = KrausChannel::from_unitary(h, DEFAULT_TOL).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(17);
        let class = classify_mcs_preservation(&ch, 40, &mut rng).unwrap();
        assert!(!class.incoherent);
        assert!(!class.preserves_mcs);
        assert!(class.witness.is_none());
    }

    #[test]
    fn identity_decomposition_small_cases() {
        let states = identity_mcs_decomposition(1);
        assert_eq!(states.len(), 1);
        assert!((states[0].amplitudes()[0] - c(1.0, 0.0)).norm() < 1e-15);
        assert!(identity_decomposition_residual(&states) < 1e-15);

        // d = 2 is the |±⟩ pair.
        let states = identity_mcs_decomposition(2);
        let s = 1.0 / 2f64.sqrt();
        assert!((states[0].amplitudes()[1] - c(s, 0.0)).norm() < 1e-12);
        assert!((states[1].amplitudes()[1] - c(-s, 0.0)).norm() < 1e-12);
        assert!(identity_decomposition_residual(&states) < 1e-12);

        let states = identity_mcs_decomposition(3);
        assert!(identity_decomposition_residual(&states) < 1e-12);
        for s in &states {
            assert!(is_mcs(&s.to_density(DEFAULT_TOL), DEFAULT_MCS_TOL).is_mcs);
        }
    }

    #[test]
    fn monotonicity_of_coherence_under_dephasing() {
        let rho = IncoherentState::new(vec![0.2, 0.8], DEFAULT_TOL)
            .unwrap()
            .to_density(DEFAULT_TOL);
        let ch = KrausChannel::dephasing(2);
        assert!(c_re(&ch.apply(&rho).unwrap()) <= c_re(&rho) + 1e-9);

        let plus = plus_state();
        assert!(c_re(&ch.apply(&plus).unwrap()) <= c_re(&plus) + 1e-9);
    }
}
