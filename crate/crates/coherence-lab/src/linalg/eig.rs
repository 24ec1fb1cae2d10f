//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each rotation is a 2×2 unitary chosen to annihilate one off-diagonal pair
//! (p, q). The rotation angle comes from the classic stable root of
//! t² − 2θt − 1 = 0 and the complex phase of the annihilated entry is folded
//! into the rotation, which reduces the complex Hermitian problem to the real
//! symmetric one. Sweeps repeat until the off-diagonal Frobenius norm drops
//! below `EIG_OFF_DIAG_REL_TOL`·‖A‖_F.

use super::{Complex, ComplexMatrix, LinalgError};

/// Relative off-diagonal Frobenius norm at which iteration stops.
pub const EIG_OFF_DIAG_REL_TOL: f64 = 1e-12;

/// Sweep cap; exceeding it raises [`LinalgError::NoConvergence`].
pub const EIG_MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a Hermitian matrix: A = VΛV†.
///
/// Eigenvalues are sorted descending; `eigenvectors` holds the matching
/// orthonormal eigenvectors as columns. Within a degenerate cluster the
/// column order is unspecified.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Column `k` of V as an owned vector.
    pub fn eigenvector(&self, k: usize) -> Vec<Complex> {
        (0..self.eigenvectors.rows()).map(|i| self.eigenvectors.get(i, k)).collect()
    }

    /// Rebuilds VΛV†, mainly for residual checks.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.dim();
        ComplexMatrix::from_fn(d, d, |i, j| {
            (0..d)
                .map(|k| {
                    self.eigenvectors.get(i, k)
                        * self.eigenvalues[k]
                        * self.eigenvectors.get(j, k).conj()
                })
                .sum()
        })
    }
}

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let d = m.dim();
    let mut acc = 0.0;
    for p in 0..d {
        for q in 0..d {
            if p != q {
                acc += m.get(p, q).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Diagonalizes a Hermitian matrix.
///
/// `tol` gates the Hermiticity precondition ‖A − A†‖_F ≤ tol·max(1, ‖A‖_F);
/// the input is symmetrized before iterating so roundoff-level asymmetry
/// cannot leak into the spectrum.
pub fn hermitian_eig(a: &ComplexMatrix, tol: f64) -> Result<Spectrum, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let defect = a.hermiticity_defect();
    if defect > tol * a.frobenius_norm().max(1.0) {
        return Err(LinalgError::NotHermitian { defect, tol });
    }

    let d = a.dim();
    let mut m = ComplexMatrix::from_fn(d, d, |i, j| (a.get(i, j) + a.get(j, i).conj()) * 0.5);
    let mut v = ComplexMatrix::identity(d);

    let norm = m.frobenius_norm();
    let target = EIG_OFF_DIAG_REL_TOL * norm;

    let mut converged = norm == 0.0 || d < 2;
    let mut last_off = off_diagonal_norm(&m);
    if last_off <= target {
        converged = true;
    }

    let mut sweeps = 0;
    while !converged {
        if sweeps == EIG_MAX_SWEEPS {
            return Err(LinalgError::NoConvergence { sweeps, off: last_off });
        }
        for p in 0..d - 1 {
            for q in p + 1..d {
                rotate(&mut m, &mut v, p, q);
            }
        }
        sweeps += 1;
        last_off = off_diagonal_norm(&m);
        if last_off <= target {
            converged = true;
        }
    }

    // Diagonal of a Hermitian matrix is real; residual imaginary parts are
    // iteration roundoff far below the convergence target.
    let mut order: Vec<usize> = (0..d).collect();
    let diag: Vec<f64> = (0..d).map(|i| m.get(i, i).re).collect();
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).expect("finite eigenvalues"));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let eigenvectors = ComplexMatrix::from_fn(d, d, |i, k| v.get(i, order[k]));
    Ok(Spectrum { eigenvalues, eigenvectors })
}

/// One Jacobi rotation annihilating the (p, q) entry of `m`, accumulated into `v`.
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let beta = m.get(p, q);
    let b = beta.norm();
    if b == 0.0 {
        return;
    }

    let alpha = m.get(p, p).re;
    let gamma = m.get(q, q).re;
    let theta = (gamma - alpha) / (2.0 * b);
    // Annihilation demands t² − 2θt − 1 = 0; the root of smaller magnitude
    // is −sign(θ)/(|θ| + √(θ²+1)), with sign(0) taken positive.
    let t = if theta.abs() > 1e12 {
        -1.0 / (2.0 * theta)
    } else if theta >= 0.0 {
        -1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        1.0 / (-theta + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = beta * (t * c / b); // σ·e^{iφ} with φ = arg(β)

    let d = m.dim();

    // Row update: J†M with J[p][p]=c, J[p][q]=−s, J[q][p]=s̄, J[q][q]=c.
    for j in 0..d {
        let mp = m.get(p, j);
        let mq = m.get(q, j);
        m.set(p, j, mp * c + mq * s);
        m.set(q, j, mq * c - mp * s.conj());
    }
    // Column update: (J†M)J.
    for i in 0..d {
        let mp = m.get(i, p);
        let mq = m.get(i, q);
        m.set(i, p, mp * c + mq * s.conj());
        m.set(i, q, mq * c - mp * s);
        let vp = v.get(i, p);
        let vq = v.get(i, q);
        v.set(i, p, vp * c + vq * s.conj());
        v.set(i, q, vq * c - vp * s);
    }

    // The rotation zeroes (p, q) analytically; pin it to cut roundoff drift.
    m.set(p, q, Complex::new(0.0, 0.0));
    m.set(q, p, Complex::new(0.0, 0.0));
    let dp = m.get(p, p);
    let dq = m.get(q, q);
    m.set(p, p, Complex::new(dp.re, 0.0));
    m.set(q, q, Complex::new(dq.re, 0.0));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn identity_spectrum() {
        let spec = hermitian_eig(&ComplexMatrix::identity(3), 1e-12).unwrap();
        for &ev in spec.eigenvalues() {
            assert!((ev - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn pauli_y_spectrum() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let spec = hermitian_eig(&m, 1e-12).unwrap();
        assert!((spec.eigenvalues()[0] - 1.0).abs() < 1e-14);
        assert!((spec.eigenvalues()[1] + 1.0).abs() < 1e-14);
        // Eigenvector residual ‖Av − λv‖ for both columns.
        for k in 0..2 {
            let vk = spec.eigenvector(k);
            let av = m.apply_vec(&vk).unwrap();
            for i in 0..2 {
                assert!((av[i] - vk[i] * spec.eigenvalues()[k]).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn random_hermitian_reconstruction() {
        // Fixed pseudo-random Hermitian d=5 built from a simple LCG so the
        // test is deterministic without pulling RNG deps into unit tests.
        let mut state = 0x1234_5678_u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let d = 5;
        let mut m = ComplexMatrix::zeros(d, d);
        for i in 0..d {
            let re = next();
            m.set(i, i, c(re, 0.0));
            for j in i + 1..d {
                let z = c(next(), next());
                m.set(i, j, z);
                m.set(j, i, z.conj());
            }
        }
        let spec = hermitian_eig(&m, 1e-12).unwrap();
        let resid = spec.reconstruct().frobenius_distance(&m).unwrap();
        assert!(resid <= 1e-10 * m.frobenius_norm(), "residual {resid:.3e}");

        let v = spec.eigenvectors();
        let gram = v.adjoint().matmul(v).unwrap();
        let ortho = gram.frobenius_distance(&ComplexMatrix::identity(d)).unwrap();
        assert!(ortho < 1e-12, "orthonormality defect {ortho:.3e}");
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0)],
        ])
        .unwrap();
        assert!(matches!(hermitian_eig(&m, 1e-9), Err(LinalgError::NotHermitian { .. })));
    }

    #[test]
    fn zero_matrix_and_one_by_one() {
        let spec = hermitian_eig(&ComplexMatrix::zeros(3, 3), 1e-12).unwrap();
        assert_eq!(spec.eigenvalues(), &[0.0, 0.0, 0.0]);
        let spec = hermitian_eig(&ComplexMatrix::diagonal(&[c(-2.5, 0.0)]), 1e-12).unwrap();
        assert_eq!(spec.eigenvalues(), &[-2.5]);
    }
}
