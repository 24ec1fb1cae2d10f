//! Seeded random generators for states, unitaries, and channels.
//!
//! Every generator takes the RNG explicitly so Monte-Carlo suites and the
//! CLI stay reproducible from a single seed.

use crate::channels::KrausChannel;
use crate::linalg::{Complex, ComplexMatrix};
use crate::states::{DensityMatrix, Ensemble, IncoherentState, PureState, DEFAULT_TOL};
use rand::Rng;
use std::f64::consts::TAU;

/// Standard normal via Box-Muller.
fn gaussian(rng: &mut impl Rng) -> f64 {
    let u: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
    let v: f64 = rng.gen();
    (-2.0 * u.ln()).sqrt() * (TAU * v).cos()
}

fn complex_gaussian(rng: &mut impl Rng) -> Complex {
    Complex::new(gaussian(rng), gaussian(rng))
}

/// Uniform phases in [0, 2π).
pub fn random_phases(d: usize, rng: &mut impl Rng) -> Vec<f64> {
    (0..d).map(|_| rng.gen::<f64>() * TAU).collect()
}

/// Haar-ish random pure state: normalized complex Gaussian vector.
pub fn random_pure_state(d: usize, rng: &mut impl Rng) -> PureState {
    loop {
        let v: Vec<Complex> = (0..d).map(|_| complex_gaussian(rng)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            let amps = v.into_iter().map(|z| z / norm).collect();
            return PureState::new(amps, DEFAULT_TOL).expect("normalized by construction");
        }
    }
}

/// Ginibre matrix with iid complex Gaussian entries.
pub fn random_ginibre(d: usize, rng: &mut impl Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, d, |_, _| complex_gaussian(rng))
}

/// Hilbert-Schmidt random density matrix GG†/Tr(GG†).
pub fn random_density_matrix(d: usize, rng: &mut impl Rng) -> DensityMatrix {
    loop {
        let g = random_ginibre(d, rng);
        let m = g.matmul(&g.adjoint()).expect("square");
        let tr = m.trace().re;
        if tr > 1e-9 {
            let rho = m.scale(Complex::new(1.0 / tr, 0.0));
            return DensityMatrix::with_default_tol(rho).expect("Gram matrix is a valid state");
        }
    }
}

/// Random mixed state with purity at most `max_purity`, by rejection.
pub fn random_mixed_state(d: usize, max_purity: f64, rng: &mut impl Rng) -> DensityMatrix {
    loop {
        let rho = random_density_matrix(d, rng);
        if rho.purity() <= max_purity {
            return rho;
        }
    }
}

/// Random pure state whose amplitude moduli deviate from uniform by more
/// than `min_deviation` (rejection on max_k ||α_k|² − 1/d|).
pub fn random_nonuniform_pure_state(
    d: usize,
    min_deviation: f64,
    rng: &mut impl Rng,
) -> PureState {
    loop {
        let psi = random_pure_state(d, rng);
        let target = 1.0 / d as f64;
        let dev = psi
            .amplitudes()
            .iter()
            .map(|a| (a.norm_sqr() - target).abs())
            .fold(0.0f64, f64::max);
        if dev > min_deviation {
            return psi;
        }
    }
}

/// Random unitary: modified Gram-Schmidt of a Ginibre matrix, run twice for
/// orthogonality at machine precision.
pub fn random_unitary(d: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let g = random_ginibre(d, rng);
    let mut cols: Vec<Vec<Complex>> = (0..d).map(|j| (0..d).map(|i| g.get(i, j)).collect()).collect();
    for _pass in 0..2 {
        for j in 0..d {
            for k in 0..j {
                let proj: Complex =
                    cols[k].iter().zip(&cols[j]).map(|(a, b)| a.conj() * b).sum();
                let ck = cols[k].clone();
                for (x, y) in cols[j].iter_mut().zip(&ck) {
                    *x -= proj * y;
                }
            }
            let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            for x in cols[j].iter_mut() {
                *x /= norm;
            }
        }
    }
    ComplexMatrix::from_fn(d, d, |i, j| cols[j][i])
}

/// Random diagonal unitary diag(e^{iθ_1}, …, e^{iθ_d}).
pub fn random_diagonal_unitary(d: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let diag: Vec<Complex> =
        random_phases(d, rng).into_iter().map(|t| Complex::from_polar(1.0, t)).collect();
    ComplexMatrix::diagonal(&diag)
}

/// Fisher-Yates permutation of {0, …, d−1}.
pub fn random_permutation(d: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..d).collect();
    for i in (1..d).rev() {
        let j = rng.gen_range(0..=i);
        p.swap(i, j);
    }
    p
}

/// Permutation matrix sending |j⟩ to |perm[j]⟩.
pub fn permutation_matrix(perm: &[usize]) -> ComplexMatrix {
    let d = perm.len();
    let mut m = ComplexMatrix::zeros(d, d);
    for (j, &i) in perm.iter().enumerate() {
        m.set(i, j, Complex::new(1.0, 0.0));
    }
    m
}

/// Uniform (Dirichlet(1)) random probability vector as an incoherent state.
pub fn random_incoherent_state(d: usize, rng: &mut impl Rng) -> IncoherentState {
    let raw: Vec<f64> = (0..d).map(|_| -rng.gen::<f64>().max(f64::MIN_POSITIVE).ln()).collect();
    let sum: f64 = raw.iter().sum();
    IncoherentState::new(raw.into_iter().map(|x| x / sum).collect(), DEFAULT_TOL)
        .expect("normalized positive vector")
}

/// Generic random channel with `m` Kraus operators: column blocks of a
/// random isometry C^d → C^{md}, orthonormalized Gram-Schmidt style.
pub fn random_channel(d: usize, m: usize, rng: &mut impl Rng) -> KrausChannel {
    // Columns of the stacked (md)×d matrix V with V†V = I.
    let rows = m * d;
    let mut cols: Vec<Vec<Complex>> =
        (0..d).map(|_| (0..rows).map(|_| complex_gaussian(rng)).collect()).collect();
    for _pass in 0..2 {
        for j in 0..d {
            for k in 0..j {
                let proj: Complex =
                    cols[k].iter().zip(&cols[j]).map(|(a, b)| a.conj() * b).sum();
                let ck = cols[k].clone();
                for (x, y) in cols[j].iter_mut().zip(&ck) {
                    *x -= proj * y;
                }
            }
            let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            for x in cols[j].iter_mut() {
                *x /= norm;
            }
        }
    }
    let ops = (0..m)
        .map(|n| ComplexMatrix::from_fn(d, d, |i, j| cols[j][n * d + i]))
        .collect();
    KrausChannel::with_default_tol(ops).expect("isometry blocks are complete")
}

/// Single-operator channel {e^{iφ}DΠ}: the MCS-preserving family.
pub fn random_perm_diag_unitary_channel(d: usize, rng: &mut impl Rng) -> KrausChannel {
    let phase = Complex::from_polar(1.0, rng.gen::<f64>() * TAU);
    let u = random_diagonal_unitary(d, rng)
        .matmul(&permutation_matrix(&random_permutation(d, rng)))
        .expect("square")
        .scale(phase);
    KrausChannel::from_unitary(u, DEFAULT_TOL).expect("unitary channel is complete")
}

/// Incoherent unital channel Σ c_n²(D_nΠ_n)·(D_nΠ_n)† with at least two
/// terms that are not proportional, so it never preserves the MCS set.
///
/// Half the draws share one permutation across terms and differ in the
/// diagonal phases (by at least ~0.3 rad in some relative phase); the other
/// half use genuinely different permutations.
pub fn random_multi_term_incoherent_channel(
    d: usize,
    m: usize,
    rng: &mut impl Rng,
) -> KrausChannel {
    assert!(m >= 2, "need at least two Kraus terms");
    let weights = random_simplex_weights(m, 0.05, rng);
    let shared_perm = rng.gen::<bool>();
    let base_perm = random_permutation(d, rng);
    let ops: Vec<ComplexMatrix> = (0..m)
        .map(|n| {
            let perm = if shared_perm || n == 0 {
                base_perm.clone()
            } else {
                loop {
                    let p = random_permutation(d, rng);
                    if p != base_perm {
                        break p;
                    }
                }
            };
            let mut phases = random_phases(d, rng);
            if shared_perm && n > 0 {
                // Guarantee a non-constant phase offset against term 0 so the
                // terms cannot be unimodular-proportional.
                phases[0] = 0.0;
                phases[1] += 0.3 + rng.gen::<f64>() * (TAU - 0.6);
            }
            let diag: Vec<Complex> =
                phases.iter().map(|&t| Complex::from_polar(weights[n].sqrt(), t)).collect();
            ComplexMatrix::diagonal(&diag).matmul(&permutation_matrix(&perm)).expect("square")
        })
        .collect();
    KrausChannel::with_default_tol(ops).expect("weighted permutations are complete")
}

/// Incoherent (generally non-unital) channel built column by column: each
/// input basis direction routes its unit mass to random rows split across
/// the Kraus terms, with disjoint row targets inside every term.
pub fn random_monomial_incoherent_channel(
    d: usize,
    m: usize,
    rng: &mut impl Rng,
) -> KrausChannel {
    loop {
        let mut ops = vec![ComplexMatrix::zeros(d, d); m];
        let mut used: Vec<Vec<bool>> = vec![vec![false; d]; m];
        let mut ok = true;
        'cols: for col in 0..d {
            let split = random_simplex_weights(m, 0.0, rng);
            for n in 0..m {
                if split[n] < 1e-12 {
                    continue;
                }
                let free: Vec<usize> = (0..d).filter(|&r| !used[n][r]).collect();
                if free.is_empty() {
                    ok = false;
                    break 'cols;
                }
                let row = free[rng.gen_range(0..free.len())];
                used[n][row] = true;
                let value = Complex::from_polar(split[n].sqrt(), rng.gen::<f64>() * TAU);
                ops[n].set(row, col, value);
            }
        }
        if !ok {
            continue;
        }
        match KrausChannel::with_default_tol(ops) {
            Ok(ch) => return ch,
            Err(_) => continue,
        }
    }
}

/// Random ensemble of `m` states on dimension `d`.
pub fn random_ensemble(d: usize, m: usize, rng: &mut impl Rng) -> Ensemble {
    let weights = random_simplex_weights(m, 0.0, rng);
    let members = (0..m).map(|_| random_density_matrix(d, rng)).collect();
    Ensemble::new(weights, members, DEFAULT_TOL).expect("normalized weights, equal dims")
}

/// Random point on the simplex with every coordinate at least `floor`.
fn random_simplex_weights(m: usize, floor: f64, rng: &mut impl Rng) -> Vec<f64> {
    loop {
        let raw: Vec<f64> =
            (0..m).map(|_| -rng.gen::<f64>().max(f64::MIN_POSITIVE).ln()).collect();
        let sum: f64 = raw.iter().sum();
        let w: Vec<f64> = raw.into_iter().map(|x| x / sum).collect();
        if w.iter().all(|&x| x >= floor) {
            return w;
        }
    }
}
