//! Deterministic constructors for test frames. Every generator is a pure
//! function of its parameters and seed.

use crate::error::{Error, Result};
use crate::frame::GFrame;
use crate::numeric::{vector, Complex, ComplexMatrix, HermitianEigen};
use crate::random::GaussianStream;

/// Attempts made by [`random_gframe`] before giving up.
pub const MAX_FRAME_ATTEMPTS: usize = 16;

/// Substream used for spectrum shaping in [`nearly_parseval_gframe`]; clear of
/// the retry substreams `0..MAX_FRAME_ATTEMPTS`.
const SHAPING_SUBSTREAM: u32 = 32;

fn check_feasible(n: usize, counts: &[usize]) -> Result<()> {
    if n == 0 {
        return Err(Error::Infeasible("n must be at least 1".into()));
    }
    if counts.is_empty() {
        return Err(Error::Infeasible("at least one operator is required".into()));
    }
    if counts.contains(&0) {
        return Err(Error::Infeasible("every output dimension k_i must be at least 1".into()));
    }
    let total: usize = counts.iter().sum();
    if total < n {
        return Err(Error::Infeasible(format!(
            "sum of output dimensions {total} is below n = {n}; no frame is possible"
        )));
    }
    Ok(())
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if (0.0..1.0).contains(&epsilon) {
        Ok(())
    } else {
        Err(Error::EpsilonOutOfRange(epsilon))
    }
}

/// Operators with independent standard normal real and imaginary entries,
/// redrawn from a fresh substream until the family certifies as a frame.
pub fn random_gframe(n: usize, counts: &[usize], seed: u64) -> Result<GFrame> {
    check_feasible(n, counts)?;
    for attempt in 0..MAX_FRAME_ATTEMPTS {
        let mut stream = GaussianStream::substream(seed, attempt as u32);
        let ops = counts.iter().map(|&k| stream.matrix(k, n)).collect();
        let frame = GFrame::new(n, ops)?;
        match frame.validate() {
            Ok(_) => return Ok(frame),
            Err(Error::NotAFrame { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetryCapExceeded(MAX_FRAME_ATTEMPTS))
}

/// Canonical Parseval frame of [`random_gframe`].
pub fn random_parseval_gframe(n: usize, counts: &[usize], seed: u64) -> Result<GFrame> {
    random_gframe(n, counts, seed)?.canonical_parseval()
}

/// A frame whose frame operator has spectrum exactly
/// `{1 + e, mu_2, ..., mu_{n-1}, 1 - e}` with interior values uniform in
/// `(1 - e, 1 + e)`, so its nearly-Parseval rating is exactly `e`.
pub fn nearly_parseval_gframe(
    n: usize,
    counts: &[usize],
    epsilon: f64,
    seed: u64,
) -> Result<GFrame> {
    check_epsilon(epsilon)?;
    check_feasible(n, counts)?;
    if n < 2 && epsilon > 0.0 {
        return Err(Error::Infeasible(
            "n >= 2 is needed to place both 1 - epsilon and 1 + epsilon in the spectrum".into(),
        ));
    }
    let parseval = random_parseval_gframe(n, counts, seed)?;
    let mut stream = GaussianStream::substream(seed, SHAPING_SUBSTREAM);

    let mut spectrum = vec![1.0 + epsilon; n];
    if n > 1 {
        spectrum[n - 1] = 1.0 - epsilon;
        let mut interior: Vec<f64> = (1..n - 1)
            .map(|_| {
                if epsilon > 0.0 {
                    stream.uniform_open(1.0 - epsilon, 1.0 + epsilon)
                } else {
                    1.0
                }
            })
            .collect();
        interior.sort_by(|a, b| b.total_cmp(a));
        spectrum[1..n - 1].copy_from_slice(&interior);
    }
    let q = random_unitary(n, &mut stream);
    // D = Q diag(sqrt(mu)) Q*, so (P D)* (P D) = D^2 = Q diag(mu) Q*.
    let shaping = HermitianEigen {
        eigenvalues: spectrum.iter().map(|m| m.sqrt()).collect(),
        eigenvectors: q,
    }
    .spectral_map(|x| x);
    parseval.right_multiply(&shaping)
}

/// Haar-like random unitary: modified Gram-Schmidt on a complex Gaussian
/// matrix, repeated once if the first pass leaves `||Q*Q - I||_F > 1e-10`.
pub fn random_unitary(n: usize, stream: &mut GaussianStream) -> ComplexMatrix {
    let mut q = stream.matrix(n, n);
    for _ in 0..2 {
        q = gram_schmidt_columns(&q);
        let defect = q
            .adjoint()
            .matmul(&q)
            .and_then(|g| g.sub(&ComplexMatrix::identity(n)))
            .map(|d| d.frobenius_norm())
            .unwrap_or(f64::INFINITY);
        if defect <= 1e-10 {
            break;
        }
    }
    q
}

fn gram_schmidt_columns(m: &ComplexMatrix) -> ComplexMatrix {
    let n = m.cols();
    let mut cols: Vec<Vec<Complex>> = (0..n).map(|j| m.column(j)).collect();
    for j in 0..n {
        let norm = vector::norm(&cols[j]);
        for z in cols[j].iter_mut() {
            *z = *z / norm;
        }
        let (done, rest) = cols.split_at_mut(j + 1);
        let qj = &done[j];
        for v in rest.iter_mut() {
            // v <- v - <v, q_j> q_j
            let proj = vector::inner(v, qj);
            for (vi, qi) in v.iter_mut().zip(qj) {
                *vi -= proj * *qi;
            }
        }
    }
    let mut out = ComplexMatrix::zeros(m.rows(), n);
    for (j, col) in cols.iter().enumerate() {
        for (i, z) in col.iter().enumerate() {
            out[(i, j)] = *z;
        }
    }
    out
}

/// Embeds a vector frame `{f_j}` as the `1 x n` operators `x -> <x, f_j>`.
pub fn embed_vector_frame(vectors: &[Vec<Complex>]) -> Result<GFrame> {
    let n = vectors
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::InvalidShape("vector frame is empty".into()))?;
    if let Some((j, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != n) {
        return Err(Error::InvalidShape(format!(
            "ragged vector frame: vector {j} has length {}, expected {n}",
            v.len()
        )));
    }
    let ops = vectors
        .iter()
        .map(|f| {
            let row: Vec<Complex> = f.iter().map(|z| z.conj()).collect();
            ComplexMatrix::row_vector(&row)
        })
        .collect::<Result<_>>()?;
    GFrame::new(n, ops)
}
