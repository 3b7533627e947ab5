//! Hermitian eigendecomposition by cyclic complex Jacobi rotations, and the
//! spectral calculus (`M^a`, `f(M)`) built on it.

use super::{Complex, ComplexMatrix};
use crate::error::{Error, Result};

/// Hard cap on full Jacobi sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 64;

/// Convergence threshold on the off-diagonal Frobenius norm, relative to `||M||_F`.
pub const JACOBI_OFF_DIAGONAL_TOL: f64 = 1e-13;

/// Admissible `||M - M*||_F`, relative to `1 + ||M||_F`.
pub const HERMITIAN_CHECK_TOL: f64 = 1e-8;

/// Positive-definiteness gate: `lambda_min > RANK_TOLERANCE * lambda_max`.
pub const RANK_TOLERANCE: f64 = 1e-10;

/// Eigenvalues in non-increasing order with the matching orthonormal
/// eigenvectors stored as the columns of `eigenvectors`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    /// `U diag(f(lambda)) U*`, assembled from the upper triangle so the result
    /// is exactly Hermitian.
    pub fn spectral_map(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.dim();
        let u = &self.eigenvectors;
        let weights: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let mut out = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = Complex::ZERO;
                for (k, &w) in weights.iter().enumerate() {
                    acc += (u[(i, k)] * u[(j, k)].conj()).scale(w);
                }
                if i == j {
                    out[(i, i)] = Complex::real(acc.re);
                } else {
                    out[(i, j)] = acc;
                    out[(j, i)] = acc.conj();
                }
            }
        }
        out
    }

    /// `U diag(lambda) U*`
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.spectral_map(|l| l)
    }

    /// Errors unless the spectrum clears the positive-definiteness gate.
    pub fn check_positive_definite(&self) -> Result<()> {
        let (lo, hi) = (self.lambda_min(), self.lambda_max());
        if hi > 0.0 && lo > RANK_TOLERANCE * hi {
            Ok(())
        } else {
            Err(Error::NotPositiveDefinite {
                lambda_min: lo,
                lambda_max: hi,
            })
        }
    }

    /// `M^a = U diag(lambda^a) U*` for positive definite `M` and real `a`.
    pub fn power(&self, a: f64) -> Result<ComplexMatrix> {
        self.check_positive_definite()?;
        Ok(self.spectral_map(|l| l.powf(a)))
    }
}

/// Decomposes a Hermitian matrix. The input is checked for Hermitian
/// symmetry, then replaced by `(M + M*)/2` before rotating.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_finite() {
        return Err(Error::NonFinite("eigensolver input"));
    }
    let norm = m.frobenius_norm();
    let defect = m.hermitian_defect()?;
    let allowed = HERMITIAN_CHECK_TOL * (1.0 + norm);
    if defect > allowed {
        return Err(Error::NotHermitian {
            asymmetry: defect,
            tolerance: allowed,
        });
    }

    let n = m.rows();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let threshold = JACOBI_OFF_DIAGONAL_TOL * norm;

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        let off_norm = off_diagonal_norm(&a);
        if off_norm > threshold {
            return Err(Error::NoConvergence {
                sweeps: JACOBI_MAX_SWEEPS,
                off_norm,
            });
        }
    }

    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    // Stable: equal eigenvalues keep the solver's column order.
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));

    let eigenvalues = order.iter().map(|&k| diag[k]).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for i in 0..n {
            eigenvectors[(i, dst)] = v[(i, src)];
        }
    }
    Ok(HermitianEigen {
        eigenvalues,
        eigenvectors,
    })
}

/// `M^a` via the spectral decomposition of Hermitian positive definite `M`.
pub fn matrix_power(m: &ComplexMatrix, a: f64) -> Result<ComplexMatrix> {
    hermitian_eig(m)?.power(a)
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// One complex Jacobi step annihilating `a[p][q]`: `A <- J* A J`, `V <- V J`.
///
/// With `a_pq = r e^{i phi}`, `J = diag(1, e^{-i phi}) R` where `R` is the
/// real rotation that diagonalises `[[a_pp, r], [r, a_qq]]`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let g = a[(p, q)];
    let r = g.abs();
    if r == 0.0 {
        return;
    }
    let phase = g / r;
    let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);

    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let j_pp = Complex::real(c);
    let j_pq = Complex::real(s);
    let j_qp = phase.conj().scale(-s);
    let j_qq = phase.conj().scale(c);

    let n = a.rows();
    // A <- A J
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * j_pp + akq * j_qp;
        a[(k, q)] = akp * j_pq + akq * j_qq;
    }
    // A <- J* A
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = j_pp.conj() * apk + j_qp.conj() * aqk;
        a[(q, k)] = j_pq.conj() * apk + j_qq.conj() * aqk;
    }
    a[(p, q)] = Complex::ZERO;
    a[(q, p)] = Complex::ZERO;
    a[(p, p)] = Complex::real(app - t * r);
    a[(q, q)] = Complex::real(aqq + t * r);

    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * j_pp + vkq * j_qp;
        v[(k, q)] = vkp * j_pq + vkq * j_qq;
    }
}
